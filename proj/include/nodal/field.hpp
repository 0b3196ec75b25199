#pragma once

#include <cstdint>
#include <string>

namespace nodal {

/// Element of a prime field or of the rationals. Values are kept normalized
/// (residues in [0, p) with den == 1, or reduced fractions with den > 0), so
/// equality is structural. Only meaningful together with the Field that made it.
struct Scalar {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool operator==(const Scalar&) const = default;
  auto operator<=>(const Scalar&) const = default;
};

/// Exact arithmetic over F_p (p in {2, 3, 5, 7}) or over Q. Rational
/// arithmetic throws std::overflow_error instead of wrapping.
class Field {
 public:
  static Field prime(int p);
  static Field rationals() { return Field(0); }

  int characteristic() const { return p_; }
  bool is_finite() const { return p_ != 0; }
  /// Number of elements; throws std::logic_error for Q.
  std::uint64_t size() const;
  std::string name() const;

  Scalar zero() const { return {0, 1}; }
  Scalar one() const { return {1, 1}; }
  Scalar from_int(std::int64_t v) const;
  Scalar from_ratio(std::int64_t num, std::int64_t den) const;
  /// The k-th element in a fixed order (0, 1, ..., p-1); finite fields only.
  Scalar element(std::uint64_t k) const;

  Scalar add(Scalar a, Scalar b) const;
  Scalar sub(Scalar a, Scalar b) const;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar neg(Scalar a) const;
  /// Throws std::domain_error on zero.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  bool is_zero(Scalar a) const { return a.num == 0; }

  std::string format(Scalar a) const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(int p) : p_(p) {}
  Scalar make_rational(__int128 num, __int128 den) const;

  int p_ = 0;
};

}  // namespace nodal
