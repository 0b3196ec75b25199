// Reference computations for the tests. Nothing here calls into the nodal
// library beyond reading quivers and relations.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "nodal/quiver.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using Word = std::vector<std::size_t>;

// Paths of length len, written order (last letter applied first).
inline std::vector<Word> paths_of_length(const nodal::Quiver& q, std::size_t len) {
  std::vector<Word> out;
  if (len == 0) return out;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) out.push_back({a});
  for (std::size_t k = 1; k < len; ++k) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).source == q.arrow(w.front()).target) {
          Word x{a};
          x.insert(x.end(), w.begin(), w.end());
          next.push_back(std::move(x));
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// dim kQ/I for homogeneous relations: sum over path length L of
// (#paths of length L) - rank{u·(lhs - rhs)·w of length L}, stopping at the
// first length whose quotient piece vanishes.
inline std::size_t algebra_dimension(const nodal::Presentation& p, std::size_t max_len = 40) {
  const auto& q = p.quiver();
  for (const auto& r : p.relations()) {
    if (!r.is_zero() && r.lhs.length() != r.rhs.length()) throw std::logic_error("inhomogeneous relation");
  }
  std::size_t total = q.vertex_count();
  for (std::size_t len = 1;; ++len) {
    if (len > max_len) throw std::runtime_error("oracle: algebra looks infinite-dimensional");
    const auto paths = paths_of_length(q, len);
    std::map<Word, std::size_t> index;
    for (std::size_t k = 0; k < paths.size(); ++k) index[paths[k]] = k;
    std::vector<std::vector<Rational>> rows;
    for (const auto& path : paths) {
      for (const auto& r : p.relations()) {
        const auto& lhs = r.lhs.word();
        if (lhs.size() > len) continue;
        for (std::size_t at = 0; at + lhs.size() <= len; ++at) {
          if (!std::equal(lhs.begin(), lhs.end(), path.begin() + at)) continue;
          std::vector<Rational> row(paths.size(), 0);
          row[index.at(path)] += 1;
          if (!r.is_zero()) {
            Word swapped(path.begin(), path.begin() + at);
            swapped.insert(swapped.end(), r.rhs.word().begin(), r.rhs.word().end());
            swapped.insert(swapped.end(), path.begin() + at + lhs.size(), path.end());
            row[index.at(swapped)] -= 1;
          }
          rows.push_back(std::move(row));
        }
      }
    }
    const auto piece = paths.size() - rational_rank(rows);
    if (piece == 0) return total;
    total += piece;
  }
}

// ---- orbit counting over F_p --------------------------------------------

using IntMatrix = std::vector<std::vector<int>>;

// Shapes are passed explicitly since a matrix with no rows forgets its
// column count.
inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b, std::size_t rows, std::size_t inner,
                         std::size_t cols, int p) {
  IntMatrix out(rows, std::vector<int>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      int s = 0;
      for (std::size_t k = 0; k < inner; ++k) s += a[r][k] * b[k][c];
      out[r][c] = s % p;
    }
  return out;
}

inline IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (std::size_t k = 0; k < n; ++k) m[k][k] = 1;
  return m;
}

inline int inverse_mod(int x, int p) {
  for (int y = 1; y < p; ++y)
    if (x * y % p == 1) return y;
  throw std::logic_error("not invertible");
}

// Inverse by Gauss-Jordan, or empty if singular.
inline std::optional<IntMatrix> invert(IntMatrix a, int p) {
  const auto n = a.size();
  auto inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const int s = inverse_mod(a[c][c], p);
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] = a[c][k] * s % p;
      inv[c][k] = inv[c][k] * s % p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const int f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] = ((a[r][k] - f * a[c][k]) % p + p) % p;
        inv[r][k] = ((inv[r][k] - f * inv[c][k]) % p + p) % p;
      }
    }
  }
  return inv;
}

struct GroupElement {
  IntMatrix g;
  IntMatrix g_inv;
};

inline std::vector<GroupElement> general_linear(std::size_t n, int p) {
  std::vector<GroupElement> out;
  std::size_t entries = n * n;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < entries; ++k) total *= static_cast<std::uint64_t>(p);
  for (std::uint64_t code = 0; code < total; ++code) {
    IntMatrix m(n, std::vector<int>(n, 0));
    auto c = code;
    for (std::size_t k = 0; k < entries; ++k) {
      m[k / n][k % n] = static_cast<int>(c % static_cast<std::uint64_t>(p));
      c /= static_cast<std::uint64_t>(p);
    }
    if (auto inv = invert(m, p)) out.push_back({m, *inv});
  }
  return out;
}

struct OrbitCount {
  std::size_t orbits = 0;
  std::size_t indecomposable = 0;
};

// Orbits of GL(dims) on the matrix tuples satisfying the relations. An orbit
// is decomposable iff it meets a tuple that is block diagonal for some
// coordinate split of the dimension vector into two nonzero parts.
inline OrbitCount orbit_count(const nodal::Presentation& pres, int p, const std::vector<std::size_t>& dims) {
  const auto& q = pres.quiver();
  const auto n_arrows = q.arrow_count();
  std::size_t entries = 0;
  for (const auto& a : q.arrows()) entries += dims[a.source] * dims[a.target];
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < entries; ++k) {
    total *= static_cast<std::uint64_t>(p);
    if (total > (std::uint64_t{1} << 26)) throw std::runtime_error("oracle: too many tuples");
  }
  using Tuple = std::vector<IntMatrix>;
  auto decode = [&](std::uint64_t code) {
    Tuple t;
    for (const auto& a : q.arrows()) {
      IntMatrix m(dims[a.target], std::vector<int>(dims[a.source], 0));
      for (auto& row : m)
        for (auto& x : row) {
          x = static_cast<int>(code % static_cast<std::uint64_t>(p));
          code /= static_cast<std::uint64_t>(p);
        }
      t.push_back(std::move(m));
    }
    return t;
  };
  auto encode = [&](const Tuple& t) {
    std::uint64_t code = 0, place = 1;
    for (const auto& m : t)
      for (const auto& row : m)
        for (int x : row) {
          code += place * static_cast<std::uint64_t>(x);
          place *= static_cast<std::uint64_t>(p);
        }
    return code;
  };
  auto eval = [&](const Tuple& t, const Word& w) {
    IntMatrix acc = t[w.back()];
    const auto cols = dims[q.arrow(w.back()).source];
    for (std::size_t k = w.size() - 1; k-- > 0;) {
      const auto& arr = q.arrow(w[k]);
      acc = mat_mul(t[w[k]], acc, dims[arr.target], dims[arr.source], cols, p);
    }
    return acc;
  };
  auto satisfies = [&](const Tuple& t) {
    for (const auto& r : pres.relations()) {
      const auto l = eval(t, r.lhs.word());
      if (r.is_zero()) {
        for (const auto& row : l)
          for (int x : row)
            if (x != 0) return false;
      } else if (l != eval(t, r.rhs.word())) {
        return false;
      }
    }
    return true;
  };

  // All proper coordinate splits.
  std::vector<std::vector<std::size_t>> splits;
  {
    std::vector<std::size_t> cur(dims.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
      if (v == dims.size()) {
        bool zero = true, full = true;
        for (std::size_t k = 0; k < dims.size(); ++k) {
          zero = zero && cur[k] == 0;
          full = full && cur[k] == dims[k];
        }
        if (!zero && !full) splits.push_back(cur);
        return;
      }
      for (std::size_t d = 0; d <= dims[v]; ++d) {
        cur[v] = d;
        rec(v + 1);
      }
    };
    rec(0);
  }
  auto block_diagonal = [&](const Tuple& t) {
    for (const auto& s : splits) {
      bool ok = true;
      for (std::size_t a = 0; a < n_arrows && ok; ++a) {
        const auto& arr = q.arrow(a);
        for (std::size_t r = 0; r < dims[arr.target] && ok; ++r)
          for (std::size_t c = 0; c < dims[arr.source] && ok; ++c)
            if ((r < s[arr.target]) != (c < s[arr.source]) && t[a][r][c] != 0) ok = false;
      }
      if (ok) return true;
    }
    return false;
  };

  std::vector<std::vector<GroupElement>> groups;
  for (auto d : dims) groups.push_back(general_linear(d, p));

  OrbitCount out;
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (seen.count(code)) continue;
    const auto t = decode(code);
    if (!satisfies(t)) continue;
    ++out.orbits;
    bool decomposable = false;
    std::vector<std::size_t> choice(dims.size(), 0);
    while (true) {
      Tuple image;
      for (std::size_t a = 0; a < n_arrows; ++a) {
        const auto& arr = q.arrow(a);
        const auto& gt = groups[arr.target][choice[arr.target]].g;
        const auto& gs_inv = groups[arr.source][choice[arr.source]].g_inv;
        const auto dt = dims[arr.target], ds = dims[arr.source];
        image.push_back(mat_mul(mat_mul(gt, t[a], dt, dt, ds, p), gs_inv, dt, ds, ds, p));
      }
      const auto img = encode(image);
      if (seen.insert(img).second && !decomposable) decomposable = block_diagonal(image);
      std::size_t v = 0;
      while (v < dims.size() && ++choice[v] == groups[v].size()) choice[v++] = 0;
      if (v == dims.size()) break;
    }
    if (!decomposable) ++out.indecomposable;
  }
  return out;
}

// Number of indecomposable orbits over all dimension vectors of total
// 1..max_total.
inline std::size_t indecomposable_count(const nodal::Presentation& pres, int p, std::size_t max_total) {
  const auto nv = pres.quiver().vertex_count();
  std::size_t count = 0;
  std::vector<std::size_t> dims(nv, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t left) {
    if (v == nv) {
      if (left < max_total) count += orbit_count(pres, p, dims).indecomposable;
      return;
    }
    for (std::size_t d = 0; d <= left; ++d) {
      dims[v] = d;
      rec(v + 1, left - d);
    }
  };
  rec(0, max_total);
  return count;
}

}  // namespace oracle
