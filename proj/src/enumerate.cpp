#include "nodal/enumerate.hpp"

#include <algorithm>

#include "nodal/errors.hpp"

namespace nodal {

std::vector<std::vector<std::size_t>> dimension_vectors(std::size_t vertices, std::size_t max_total) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current(vertices, 0);
  for (std::size_t total = 1; total <= max_total; ++total) {
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t pos, std::size_t left) {
      if (pos + 1 == vertices) {
        current[pos] = left;
        out.push_back(current);
        return;
      }
      for (std::size_t d = left + 1; d-- > 0;) {
        current[pos] = d;
        fill(pos + 1, left - d);
      }
    };
    if (vertices > 0) fill(0, total);
  }
  return out;
}

namespace {

using Poly = std::vector<std::int64_t>;  // coefficients, lowest degree first

// Remainder of a modulo a monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::int64_t p) {
  const auto db = b.size() - 1;
  while (a.size() > db) {
    auto lead = a.back() % p;
    if (lead != 0) {
      const auto shift = a.size() - 1 - db;
      for (std::size_t k = 0; k <= db; ++k) {
        a[shift + k] = ((a[shift + k] - lead * b[k]) % p + p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool divides(const Poly& d, const Poly& a, std::int64_t p) {
  auto r = poly_mod(a, d, p);
  return std::all_of(r.begin(), r.end(), [&](auto c) { return c % p == 0; });
}

std::vector<Poly> monic_polys(std::size_t degree, std::int64_t p) {
  std::vector<Poly> out;
  Poly poly(degree + 1, 0);
  poly[degree] = 1;
  while (true) {
    out.push_back(poly);
    std::size_t k = 0;
    while (k < degree && ++poly[k] == p) poly[k++] = 0;
    if (k == degree) break;
  }
  return out;
}

Matrix companion(const Field& f, const Poly& poly) {
  const auto d = poly.size() - 1;
  Matrix m(d, d);
  for (std::size_t k = 1; k < d; ++k) m(k, k - 1) = f.one();
  for (std::size_t k = 0; k < d; ++k) m(k, d - 1) = f.neg(f.from_int(poly[k]));
  return m;
}

// Iterates all matrices of the given shape over a finite field.
class MatrixCounter {
 public:
  MatrixCounter(const Field& f, std::size_t rows, std::size_t cols) : f_(f), m_(rows, cols) {}
  const Matrix& current() const { return m_; }
  bool next() {
    const auto p = static_cast<std::int64_t>(f_.size());
    for (std::size_t r = 0; r < m_.rows(); ++r) {
      for (std::size_t c = 0; c < m_.cols(); ++c) {
        auto& x = m_(r, c);
        if (++x.num < p) return true;
        x.num = 0;
      }
    }
    return false;
  }

 private:
  Field f_;
  Matrix m_;
};

struct SearchPlan {
  std::vector<std::size_t> dims;
  std::optional<std::size_t> fixed_arrow;
  std::vector<Matrix> fixed_choices;
  // relations_at[a]: relations whose last assigned arrow is a.
  std::vector<std::vector<std::size_t>> relations_at;
};

std::size_t free_entries(const Quiver& q, const SearchPlan& plan) {
  std::size_t total = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    if (plan.fixed_arrow && *plan.fixed_arrow == a) continue;
    total += plan.dims[q.arrow(a).source] * plan.dims[q.arrow(a).target];
  }
  return total;
}

SearchPlan make_plan(const Presentation& pres, const Field& f, std::vector<std::size_t> dims, bool normalize) {
  const auto& q = pres.quiver();
  SearchPlan plan;
  plan.dims = std::move(dims);
  plan.relations_at.resize(q.arrow_count());
  for (std::size_t r = 0; r < pres.relations().size(); ++r) {
    const auto& rel = pres.relations()[r];
    std::size_t last = *std::max_element(rel.lhs.word().begin(), rel.lhs.word().end());
    if (!rel.is_zero()) last = std::max(last, *std::max_element(rel.rhs.word().begin(), rel.rhs.word().end()));
    plan.relations_at[last].push_back(r);
  }
  if (!normalize) return plan;
  // Fix the arrow with the most entries whose orbit representatives are
  // available.
  std::size_t best_size = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const auto ds = plan.dims[arr.source];
    const auto dt = plan.dims[arr.target];
    if (ds == 0 || dt == 0 || ds * dt <= best_size) continue;
    if (arr.source == arr.target) {
      // Rational canonical forms need all monic polynomials up to degree ds.
      std::uint64_t count = 1;
      for (std::size_t k = 0; k < ds && count <= (1u << 16); ++k) count *= f.size();
      if (count > (1u << 16)) continue;
    }
    best_size = ds * dt;
    plan.fixed_arrow = a;
  }
  if (plan.fixed_arrow) {
    const auto& arr = q.arrow(*plan.fixed_arrow);
    plan.fixed_choices = arr.source == arr.target
                             ? conjugacy_representatives(f, plan.dims[arr.source])
                             : rank_normal_forms(f, plan.dims[arr.target], plan.dims[arr.source]);
  }
  return plan;
}

// Depth-first assignment of arrow matrices; relations are checked as soon as
// their last arrow is assigned.
void search(const std::shared_ptr<const Presentation>& pres, const Field& f, const SearchPlan& plan,
            const std::function<void(Representation&&)>& emit) {
  const auto& q = pres->quiver();
  const auto& rels = pres->relations();
  std::vector<Matrix> mats(q.arrow_count());

  auto eval = [&](const Path& p) {
    const auto& w = p.word();
    Matrix acc = mats[w.back()];
    for (std::size_t k = w.size() - 1; k-- > 0;) acc = linalg::multiply(f, mats[w[k]], acc);
    return acc;
  };
  auto relations_hold = [&](std::size_t a) {
    for (auto r : plan.relations_at[a]) {
      const auto& rel = rels[r];
      if (rel.is_zero() ? !linalg::is_zero(f, eval(rel.lhs)) : !(eval(rel.lhs) == eval(rel.rhs))) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> assign = [&](std::size_t a) {
    if (a == q.arrow_count()) {
      emit(Representation(pres, f, plan.dims, mats));
      return;
    }
    const auto rows = plan.dims[q.arrow(a).target];
    const auto cols = plan.dims[q.arrow(a).source];
    if (plan.fixed_arrow && *plan.fixed_arrow == a) {
      for (const auto& choice : plan.fixed_choices) {
        mats[a] = choice;
        if (relations_hold(a)) assign(a + 1);
      }
      return;
    }
    MatrixCounter counter(f, rows, cols);
    do {
      mats[a] = counter.current();
      if (relations_hold(a)) assign(a + 1);
    } while (counter.next());
  };
  assign(0);
}

void require_finite(const Field& f) {
  if (!f.is_finite()) throw InputError("enumeration needs a finite field");
}

}  // namespace

std::vector<Matrix> rank_normal_forms(const Field& field, std::size_t rows, std::size_t cols) {
  std::vector<Matrix> out;
  for (std::size_t r = 0; r <= std::min(rows, cols); ++r) {
    Matrix m(rows, cols);
    for (std::size_t k = 0; k < r; ++k) m(k, k) = field.one();
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> conjugacy_representatives(const Field& field, std::size_t n) {
  require_finite(field);
  const auto p = static_cast<std::int64_t>(field.size());
  std::vector<std::vector<Poly>> by_degree(n + 1);
  for (std::size_t d = 1; d <= n; ++d) by_degree[d] = monic_polys(d, p);

  std::vector<Matrix> out;
  if (n == 0) {
    out.emplace_back(0, 0);
    return out;
  }
  std::vector<Poly> chain;
  // Invariant factors f1 | f2 | ... | fk with degrees summing to n.
  std::function<void(std::size_t)> extend = [&](std::size_t left) {
    if (left == 0) {
      Matrix m(0, 0);
      for (const auto& poly : chain) m = linalg::block_diagonal(m, companion(field, poly));
      out.push_back(std::move(m));
      return;
    }
    const std::size_t min_deg = chain.empty() ? 1 : chain.back().size() - 1;
    for (std::size_t d = min_deg; d <= left; ++d) {
      for (const auto& poly : by_degree[d]) {
        if (!chain.empty() && !divides(chain.back(), poly, p)) continue;
        chain.push_back(poly);
        extend(left - d);
        chain.pop_back();
      }
    }
  };
  extend(n);
  return out;
}

std::vector<Representation> enumerate_representations(std::shared_ptr<const Presentation> pres,
                                                      const Field& field, std::size_t max_dim,
                                                      std::size_t budget) {
  require_finite(field);
  const auto& q = pres->quiver();
  std::vector<Representation> out;
  for (auto& dims : dimension_vectors(q.vertex_count(), max_dim)) {
    auto plan = make_plan(*pres, field, std::move(dims), false);
    if (free_entries(q, plan) > budget) {
      throw BudgetExceeded("dimension vector needs " + std::to_string(free_entries(q, plan)) +
                           " matrix entries, budget is " + std::to_string(budget));
    }
    search(pres, field, plan, [&](Representation&& m) { out.push_back(std::move(m)); });
  }
  return out;
}

EnumerationResult enumerate_indecomposables(std::shared_ptr<const Presentation> pres, const Field& field,
                                            std::size_t max_dim, std::size_t budget) {
  require_finite(field);
  const auto& q = pres->quiver();
  EnumerationResult result;
  IsoClassifier classes;
  for (auto& dims : dimension_vectors(q.vertex_count(), max_dim)) {
    auto plan = make_plan(*pres, field, std::move(dims), true);
    if (free_entries(q, plan) > budget) {
      throw BudgetExceeded("dimension vector needs " + std::to_string(free_entries(q, plan)) +
                           " freely enumerated matrix entries, budget is " + std::to_string(budget));
    }
    search(pres, field, plan, [&](Representation&& m) {
      ++result.tuples;
      if (is_indecomposable(m)) classes.classify(m, true);
    });
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    result.classes.push_back({classes.representative(k), classes.count(k)});
  }
  return result;
}

}  // namespace nodal
