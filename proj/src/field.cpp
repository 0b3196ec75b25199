#include "nodal/field.hpp"

#include <stdexcept>

namespace nodal {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Field Field::prime(int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) {
    throw std::invalid_argument("unsupported field characteristic " + std::to_string(p));
  }
  return Field(p);
}

std::uint64_t Field::size() const {
  if (!is_finite()) throw std::logic_error("the rationals are infinite");
  return static_cast<std::uint64_t>(p_);
}

std::string Field::name() const { return is_finite() ? "F" + std::to_string(p_) : "Q"; }

Scalar Field::from_int(std::int64_t v) const {
  if (is_finite()) {
    auto r = v % p_;
    if (r < 0) r += p_;
    return {r, 1};
  }
  return {v, 1};
}

Scalar Field::from_ratio(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  if (is_finite()) return div(from_int(num), from_int(den));
  return make_rational(num, den);
}

Scalar Field::element(std::uint64_t k) const {
  if (!is_finite() || k >= size()) throw std::out_of_range("field element index");
  return {static_cast<std::int64_t>(k), 1};
}

Scalar Field::make_rational(__int128 num, __int128 den) const {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  auto g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
  if (num > lim || num < -lim || den > lim) throw std::overflow_error("rational overflow");
  return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

Scalar Field::add(Scalar a, Scalar b) const {
  if (is_finite()) return {(a.num + b.num) % p_, 1};
  return make_rational(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                       static_cast<__int128>(a.den) * b.den);
}

Scalar Field::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar Field::mul(Scalar a, Scalar b) const {
  if (is_finite()) return {(a.num * b.num) % p_, 1};
  return make_rational(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}

Scalar Field::neg(Scalar a) const {
  if (is_finite()) return {a.num == 0 ? 0 : p_ - a.num, 1};
  return {-a.num, a.den};
}

Scalar Field::inv(Scalar a) const {
  if (a.num == 0) throw std::domain_error("inverse of zero");
  if (is_finite()) {
    // p is tiny, so a linear scan is fine.
    for (std::int64_t x = 1; x < p_; ++x)
      if ((a.num * x) % p_ == 1) return {x, 1};
    throw std::logic_error("no inverse in prime field");
  }
  return make_rational(a.den, a.num);
}

std::string Field::format(Scalar a) const {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

}  // namespace nodal
