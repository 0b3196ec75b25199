#include "nodal/rep.hpp"

#include <algorithm>
#include <numeric>

#include "nodal/errors.hpp"

namespace nodal {

Representation::Representation(std::shared_ptr<const Presentation> pres, Field field,
                               std::vector<std::size_t> dims, std::vector<Matrix> mats)
    : pres_(std::move(pres)), field_(field), dims_(std::move(dims)), mats_(std::move(mats)) {
  if (!pres_) throw Mismatch("representation without a presentation");
  const auto& q = pres_->quiver();
  if (dims_.size() != q.vertex_count()) throw ShapeMismatch("dimension vector has the wrong length");
  if (mats_.size() != q.arrow_count()) throw ShapeMismatch("one matrix per arrow is required");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (mats_[a].rows() != dims_[arr.target] || mats_[a].cols() != dims_[arr.source]) {
      throw ShapeMismatch("matrix of arrow '" + arr.id + "' has shape " + std::to_string(mats_[a].rows()) +
                          "x" + std::to_string(mats_[a].cols()) + ", expected " +
                          std::to_string(dims_[arr.target]) + "x" + std::to_string(dims_[arr.source]));
    }
  }
}

Representation Representation::zero(std::shared_ptr<const Presentation> pres, Field field) {
  const auto& q = pres->quiver();
  std::vector<Matrix> mats(q.arrow_count());
  return Representation(std::move(pres), field, std::vector<std::size_t>(q.vertex_count(), 0),
                        std::move(mats));
}

Representation Representation::simple(std::shared_ptr<const Presentation> pres, Field field,
                                      std::size_t v) {
  const auto& q = pres->quiver();
  if (v >= q.vertex_count()) throw UnknownVertex("simple at unknown vertex");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[v] = 1;
  std::vector<Matrix> mats;
  for (const auto& a : q.arrows()) mats.emplace_back(dims[a.target], dims[a.source]);
  return Representation(std::move(pres), field, std::move(dims), std::move(mats));
}

std::size_t Representation::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Matrix Representation::evaluate(const Path& p) const {
  if (p.is_empty()) return Matrix::identity(field_, dims_.at(p.source()));
  const auto& w = p.word();
  Matrix acc = mats_.at(w.back());
  for (std::size_t k = w.size() - 1; k-- > 0;) acc = linalg::multiply(field_, mats_.at(w[k]), acc);
  return acc;
}

bool Representation::same_algebra(const Representation& other) const {
  return pres_ == other.pres_ || *pres_ == *other.pres_;
}

RelationCheck check_relations(const Representation& m) {
  const auto& pres = m.presentation();
  const auto& q = pres.quiver();
  const auto& f = m.field();
  for (std::size_t r = 0; r < pres.relations().size(); ++r) {
    const auto& rel = pres.relations()[r];
    bool holds = rel.is_zero() ? linalg::is_zero(f, m.evaluate(rel.lhs))
                               : m.evaluate(rel.lhs) == m.evaluate(rel.rhs);
    if (!holds) return {false, r, "relation " + relation_string(q, rel) + " fails"};
  }
  return {};
}

namespace {

void require_compatible(const Representation& m, const Representation& n) {
  if (!m.same_algebra(n)) throw Mismatch("representations of different algebras");
  if (!(m.field() == n.field())) throw Mismatch("representations over different fields");
}

bool is_nilpotent(const Field& f, const Morphism& phi) {
  for (const auto& block : phi.maps) {
    if (block.rows() == 0) continue;
    if (!linalg::is_zero(f, linalg::power(f, block, block.rows()))) return false;
  }
  return true;
}

bool is_invertible(const Field& f, const Morphism& phi) {
  return std::all_of(phi.maps.begin(), phi.maps.end(),
                     [&](const Matrix& m) { return linalg::is_invertible(f, m); });
}

bool splits(const Field& f, const Morphism& phi) { return !is_nilpotent(f, phi) && !is_invertible(f, phi); }

Morphism combine(const Field& f, const Morphism& a, Scalar s, const Morphism& b) {
  Morphism out;
  for (std::size_t v = 0; v < a.maps.size(); ++v) {
    out.maps.push_back(linalg::add(f, a.maps[v], linalg::scale(f, s, b.maps[v])));
  }
  return out;
}

Morphism zero_morphism(const Representation& m, const Representation& n) {
  Morphism out;
  for (std::size_t v = 0; v < m.dims().size(); ++v) out.maps.emplace_back(n.dim(v), m.dim(v));
  return out;
}

Morphism identity(const Representation& m) {
  Morphism out;
  for (auto d : m.dims()) out.maps.push_back(Matrix::identity(m.field(), d));
  return out;
}

// Number of elements of a d-dimensional space, saturated at cap + 1.
std::uint64_t space_size(const Field& f, std::size_t d) {
  if (!f.is_finite()) return kSearchCap + 1;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < d; ++k) {
    total *= f.size();
    if (total > kSearchCap) return kSearchCap + 1;
  }
  return total;
}

// Visits every linear combination of `basis` (odometer order; each step adds
// one basis element) until `visit` returns true.
template <typename Visit>
bool exhaust(const Field& f, const std::vector<Morphism>& basis, Morphism current, Visit visit) {
  const auto p = f.size();
  std::vector<std::uint64_t> digits(basis.size(), 0);
  if (visit(current)) return true;
  while (true) {
    std::size_t k = 0;
    while (k < basis.size()) {
      current = combine(f, current, f.one(), basis[k]);
      if (++digits[k] < p) break;
      digits[k] = 0;
      ++k;
    }
    if (k == basis.size()) return false;
    if (visit(current)) return true;
  }
}

Representation restrict_to(const Representation& m, const std::vector<Matrix>& bases) {
  const auto& f = m.field();
  const auto& q = m.presentation().quiver();
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    auto image = linalg::multiply(f, m.mat(a), bases[arr.source]);
    auto coords = linalg::coordinates(f, bases[arr.target], image);
    if (!coords) throw std::logic_error("subspace is not a subrepresentation");
    mats.push_back(std::move(*coords));
  }
  return Representation(m.presentation_ptr(), f, std::move(dims), std::move(mats));
}

}  // namespace

HomSpace hom_space(const Representation& m, const Representation& n) {
  require_compatible(m, n);
  const auto& f = m.field();
  const auto& q = m.presentation().quiver();
  std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  const auto unknowns = offset.back();

  std::size_t equations = 0;
  for (const auto& a : q.arrows()) equations += n.dim(a.target) * m.dim(a.source);
  Matrix system(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto s = q.arrow(a).source;
    const auto t = q.arrow(a).target;
    const auto& ma = m.mat(a);
    const auto& na = n.mat(a);
    for (std::size_t r = 0; r < n.dim(t); ++r) {
      for (std::size_t c = 0; c < m.dim(s); ++c, ++row) {
        // (f_t m(a))[r,c] - (n(a) f_s)[r,c] = 0
        for (std::size_t k = 0; k < m.dim(t); ++k) {
          auto& x = system(row, offset[t] + r * m.dim(t) + k);
          x = f.add(x, ma(k, c));
        }
        for (std::size_t k = 0; k < n.dim(s); ++k) {
          auto& x = system(row, offset[s] + k * m.dim(s) + c);
          x = f.sub(x, na(r, k));
        }
      }
    }
  }

  HomSpace hom;
  for (const auto& v : linalg::nullspace(f, system)) {
    Morphism phi;
    for (std::size_t u = 0; u < q.vertex_count(); ++u) {
      Matrix block(n.dim(u), m.dim(u));
      for (std::size_t r = 0; r < n.dim(u); ++r)
        for (std::size_t c = 0; c < m.dim(u); ++c) block(r, c) = v[offset[u] + r * m.dim(u) + c];
      phi.maps.push_back(std::move(block));
    }
    hom.basis.push_back(std::move(phi));
  }
  return hom;
}

std::optional<Morphism> splitting_endomorphism(const Representation& m) {
  const auto& f = m.field();
  auto end = hom_space(m, m);
  if (end.dim() <= 1) return std::nullopt;  // End = k is local

  // Cheap candidates first: basis elements, their scalar shifts and pairwise sums.
  std::vector<Scalar> shifts;
  if (f.is_finite()) {
    for (std::uint64_t k = 0; k < f.size(); ++k) shifts.push_back(f.element(k));
  } else {
    shifts = {f.zero(), f.one(), f.neg(f.one())};
  }
  const auto id = identity(m);
  for (const auto& b : end.basis) {
    for (auto c : shifts) {
      auto phi = combine(f, b, c, id);
      if (splits(f, phi)) return phi;
    }
  }
  for (std::size_t x = 0; x < end.dim(); ++x) {
    for (std::size_t y = x + 1; y < end.dim(); ++y) {
      auto phi = combine(f, end.basis[x], f.one(), end.basis[y]);
      if (splits(f, phi)) return phi;
    }
  }

  if (space_size(f, end.dim()) > kSearchCap) {
    throw SearchSpaceTooLarge("End has dimension " + std::to_string(end.dim()) + " over " + f.name() +
                              "; exhaustive idempotent search exceeds the cap");
  }
  std::optional<Morphism> found;
  exhaust(f, end.basis, zero_morphism(m, m), [&](const Morphism& phi) {
    if (splits(f, phi)) {
      found = phi;
      return true;
    }
    return false;
  });
  return found;
}

bool is_indecomposable(const Representation& m) {
  if (m.total_dim() == 0) throw InputError("the zero representation is not indecomposable");
  return !splitting_endomorphism(m).has_value();
}

bool isomorphic_indecomposables(const Representation& m, const Representation& n) {
  require_compatible(m, n);
  if (m.dims() != n.dims()) return false;
  auto hom = hom_space(m, n);
  return std::any_of(hom.basis.begin(), hom.basis.end(),
                     [&](const Morphism& phi) { return is_invertible(m.field(), phi); });
}

Representation direct_sum(const Representation& m, const Representation& n) {
  require_compatible(m, n);
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < m.dims().size(); ++v) dims.push_back(m.dim(v) + n.dim(v));
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < m.mats().size(); ++a) mats.push_back(linalg::block_diagonal(m.mat(a), n.mat(a)));
  return Representation(m.presentation_ptr(), m.field(), std::move(dims), std::move(mats));
}

std::vector<Representation> decompose(const Representation& m) {
  if (m.total_dim() == 0) return {};
  auto phi = splitting_endomorphism(m);
  if (!phi) return {m};
  const auto& f = m.field();
  const auto n = m.total_dim();
  std::vector<Matrix> kernels, images;
  for (const auto& block : phi->maps) {
    auto power = linalg::power(f, block, n);
    kernels.push_back(linalg::kernel(f, power));
    images.push_back(linalg::column_space(f, power));
  }
  auto out = decompose(restrict_to(m, kernels));
  auto rest = decompose(restrict_to(m, images));
  out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  return out;
}

bool is_isomorphic(const Representation& m, const Representation& n) {
  require_compatible(m, n);
  if (m.dims() != n.dims()) return false;
  if (m.total_dim() == 0) return true;
  if (iso_signature(m) != iso_signature(n)) return false;
  const auto& f = m.field();
  auto hom = hom_space(m, n);
  for (const auto& phi : hom.basis)
    if (is_invertible(f, phi)) return true;
  if (hom.dim() == 0) return false;

  if (space_size(f, hom.dim()) <= kSearchCap) {
    return exhaust(f, hom.basis, zero_morphism(m, n), [&](const Morphism& phi) { return is_invertible(f, phi); });
  }
  auto left = decompose(m);
  auto right = decompose(n);
  if (left.size() != right.size()) return false;
  std::vector<bool> used(right.size(), false);
  for (const auto& x : left) {
    bool matched = false;
    for (std::size_t k = 0; k < right.size() && !matched; ++k) {
      if (!used[k] && isomorphic_indecomposables(x, right[k])) used[k] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

std::vector<std::int64_t> iso_signature(const Representation& m) {
  const auto& f = m.field();
  const auto& q = m.presentation().quiver();
  std::vector<std::int64_t> sig(m.dims().begin(), m.dims().end());
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    sig.push_back(static_cast<std::int64_t>(linalg::rank(f, m.mat(a))));
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    for (std::size_t b = 0; b < q.arrow_count(); ++b) {
      if (q.arrow(b).target != q.arrow(a).source) continue;
      sig.push_back(static_cast<std::int64_t>(linalg::rank(f, linalg::multiply(f, m.mat(a), m.mat(b)))));
    }
  }
  return sig;
}

std::size_t IsoClassifier::classify(const Representation& m, bool indecomposable) {
  auto& bucket = buckets_[iso_signature(m)];
  for (auto k : bucket) {
    bool same = (indecomposable && indecomposable_[k]) ? isomorphic_indecomposables(m, reps_[k])
                                                       : is_isomorphic(m, reps_[k]);
    if (same) {
      ++counts_[k];
      return k;
    }
  }
  bucket.push_back(reps_.size());
  reps_.push_back(m);
  indecomposable_.push_back(indecomposable);
  counts_.push_back(1);
  return reps_.size() - 1;
}

}  // namespace nodal
