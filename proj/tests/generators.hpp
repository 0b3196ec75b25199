// Builders and random generators for data used across the test binaries.
#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nodal/classify.hpp"
#include "nodal/construct.hpp"

namespace gen {

using nodal::ArrowSpec;
using nodal::GluePair;
using nodal::NodalDatum;
using nodal::Quiver;

inline ArrowSpec oriented(const std::string& id, const std::string& a, const std::string& b, bool forward) {
  return forward ? ArrowSpec{id, a, b} : ArrowSpec{id, b, a};
}

// The exceptional line: tail_b - b -β- i -α1- v1 ... v_{n-1} -αn- j -γ- g - tail_g,
// glued at {i, j}. Shape One has β, α1 into i and αn, γ leaving/entering j as
// in the first case; shape Two reverses those four arrows. Middle arrows and
// tails are oriented by the bits of `orientation`.
inline NodalDatum exceptional_datum(std::size_t n, std::size_t m, std::size_t l, bool shape_one = true,
                                    unsigned orientation = 0, bool super = false,
                                    bool alpha2_backwards = true) {
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  unsigned bit = 0;
  auto next_bit = [&] { return ((orientation >> (bit++ % 32)) & 1u) == 0; };

  for (std::size_t k = m; k >= 1; --k) vertices.push_back("tb" + std::to_string(k));
  vertices.push_back("b");
  vertices.push_back("i");
  for (std::size_t k = 1; k < n; ++k) vertices.push_back("v" + std::to_string(k));
  vertices.push_back("j");
  vertices.push_back("g");
  for (std::size_t k = 1; k <= l; ++k) vertices.push_back("tg" + std::to_string(k));

  for (std::size_t k = m; k >= 1; --k) {
    const auto near = k == 1 ? std::string("b") : "tb" + std::to_string(k - 1);
    arrows.push_back(oriented("tbeta" + std::to_string(k), "tb" + std::to_string(k), near, next_bit()));
  }
  arrows.push_back(oriented("beta", "b", "i", shape_one));
  auto cyc = [&](std::size_t k) { return k == 0 ? std::string("i") : k == n ? std::string("j") : "v" + std::to_string(k); };
  for (std::size_t k = 1; k <= n; ++k) {
    const auto id = "alpha" + std::to_string(k);
    if (k == 1) {
      arrows.push_back(oriented(id, cyc(1), "i", shape_one));
    } else if (k == n) {
      arrows.push_back(oriented(id, "j", cyc(n - 1), shape_one));
    } else if (super && k == 2) {
      arrows.push_back(oriented(id, cyc(1), cyc(2), !alpha2_backwards));
    } else {
      arrows.push_back(oriented(id, cyc(k - 1), cyc(k), next_bit()));
    }
  }
  arrows.push_back(oriented("gamma", "g", "j", shape_one));
  for (std::size_t k = 1; k <= l; ++k) {
    const auto near = k == 1 ? std::string("g") : "tg" + std::to_string(k - 1);
    arrows.push_back(oriented("tgamma" + std::to_string(k), near, "tg" + std::to_string(k), next_bit()));
  }
  NodalDatum d{Quiver(vertices, arrows), {{"i", "j"}}, {}};
  if (super) d.glue_pairs.push_back({"v1", "v2"});
  return d;
}

// Disjoint lines and cycles with random orientations. Cycles are kept
// acyclic by forcing one arrow each way.
inline Quiver random_type_a_base(std::mt19937_64& rng, std::size_t components = 0, bool allow_cycles = true) {
  std::uniform_int_distribution<int> coin(0, 1);
  if (components == 0) components = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::size_t next_vertex = 0, next_arrow = 0;
  for (std::size_t c = 0; c < components; ++c) {
    const bool cycle = allow_cycles && std::uniform_int_distribution<int>(0, 3)(rng) == 0;
    const auto size = std::uniform_int_distribution<std::size_t>(cycle ? 2 : 1, 5)(rng);
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < size; ++k) ids.push_back("x" + std::to_string(next_vertex++));
    vertices.insert(vertices.end(), ids.begin(), ids.end());
    const auto edges = cycle ? size : size - 1;
    std::vector<bool> dirs(edges);
    for (auto&& d : dirs) d = coin(rng) == 1;
    if (cycle) {
      dirs[0] = true;
      dirs[1 % edges] = edges > 1 ? false : dirs[0];
    }
    for (std::size_t e = 0; e < edges; ++e) {
      arrows.push_back(oriented("y" + std::to_string(next_arrow++), ids[e], ids[(e + 1) % size], dirs[e]));
    }
  }
  return Quiver(vertices, arrows);
}

// Random pairs of distinct unused vertices.
inline std::vector<GluePair> random_pairs(std::mt19937_64& rng, const Quiver& q, std::size_t count,
                                          std::set<std::string>& used) {
  std::vector<GluePair> out;
  std::vector<std::string> free;
  for (const auto& v : q.vertices())
    if (!used.count(v)) free.push_back(v);
  std::shuffle(free.begin(), free.end(), rng);
  for (std::size_t k = 0; k + 1 < free.size() && out.size() < count; k += 2) {
    out.push_back({free[k], free[k + 1]});
    used.insert(free[k]);
    used.insert(free[k + 1]);
  }
  return out;
}

inline NodalDatum random_gluing_datum(std::mt19937_64& rng, bool allow_cycles = true) {
  auto base = random_type_a_base(rng, 0, allow_cycles);
  std::set<std::string> used;
  const auto count = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  auto pairs = random_pairs(rng, base, count, used);
  return {base, pairs, {}};
}

// Random acyclic quiver: arrows only go from lower to higher rank, parallel
// arrows allowed.
inline Quiver random_acyclic(std::mt19937_64& rng) {
  const auto n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
  std::vector<std::string> vertices;
  for (std::size_t k = 0; k < n; ++k) vertices.push_back("w" + std::to_string(k));
  std::shuffle(vertices.begin(), vertices.end(), rng);
  std::vector<ArrowSpec> arrows;
  std::uniform_int_distribution<int> pick(0, 9);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const int r = pick(rng);
      const int copies = r < 6 ? 0 : r < 9 ? 1 : 2;
      for (int c = 0; c < copies; ++c)
        arrows.push_back({"z" + std::to_string(arrows.size()), vertices[a], vertices[b]});
    }
  std::sort(vertices.begin(), vertices.end());
  return Quiver(vertices, arrows);
}

// Renames every vertex and arrow id through a fixed permutation of suffixes.
inline NodalDatum renamed(const NodalDatum& d, const std::string& prefix) {
  auto rv = [&](const std::string& v) { return prefix + "V" + v; };
  std::vector<std::string> vertices;
  for (const auto& v : d.base.vertices()) vertices.push_back(rv(v));
  std::vector<ArrowSpec> arrows;
  for (const auto& a : d.base.arrows())
    arrows.push_back({prefix + "A" + a.id, rv(d.base.vertex(a.source)), rv(d.base.vertex(a.target))});
  NodalDatum out{Quiver(vertices, arrows), {}, {}};
  for (const auto& p : d.glue_pairs) out.glue_pairs.push_back({rv(p.first), rv(p.second)});
  for (const auto& v : d.blow_vertices) out.blow_vertices.push_back(rv(v));
  return out;
}

}  // namespace gen
