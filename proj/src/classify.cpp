#include "nodal/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nodal/errors.hpp"
#include "nodal/functors.hpp"

namespace nodal {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Finite: return "Finite";
    case Verdict::Tame: return "Tame";
    case Verdict::NonWildUnresolved: return "NonWildUnresolved";
    case Verdict::Wild: return "Wild";
  }
  return "?";
}

Verdict combine(Verdict a, Verdict b) { return std::max(a, b); }

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep = " ") {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

std::string pair_string(const GluePair& p) { return "{" + p.first + " " + p.second + "}"; }

bool same_pair(const GluePair& a, const GluePair& b) {
  return (a.first == b.first && a.second == b.second) || (a.first == b.second && a.second == b.first);
}

std::vector<std::size_t> incident(const Quiver& q, std::size_t v) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    if (q.arrow(a).source == v || q.arrow(a).target == v) out.push_back(a);
  }
  return out;
}

std::size_t other_end(const Quiver& q, std::size_t a, std::size_t v) {
  return q.arrow(a).source == v ? q.arrow(a).target : q.arrow(a).source;
}

// Arrows on the far side of `first`, walking away from v along a line.
std::size_t tail_length(const Quiver& q, std::size_t v, std::size_t first) {
  std::size_t count = 0;
  std::size_t cur = other_end(q, first, v);
  std::size_t prev = first;
  while (true) {
    std::optional<std::size_t> next;
    for (auto a : incident(q, cur)) {
      if (a != prev) next = a;
    }
    if (!next) return count;
    ++count;
    cur = other_end(q, *next, cur);
    prev = *next;
  }
}

// Arrow sequence of the unique walk from `from` to `to` in a tree component.
std::optional<std::vector<std::size_t>> tree_walk(const Quiver& q, std::size_t from, std::size_t to) {
  std::vector<std::optional<std::size_t>> via(q.vertex_count());
  std::vector<bool> seen(q.vertex_count(), false);
  std::vector<std::size_t> queue{from};
  seen[from] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    auto v = queue[k];
    for (auto a : incident(q, v)) {
      auto w = other_end(q, a, v);
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = a;
      queue.push_back(w);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<std::size_t> walk;
  for (auto v = to; v != from; v = other_end(q, *via[v], v)) walk.push_back(*via[v]);
  std::reverse(walk.begin(), walk.end());
  return walk;
}

// Matches the shapes with β and γ at a line component, labeling (a, b) as (i, j).
std::optional<ExceptionalParams> match_labeling(const Quiver& q, std::size_t a, std::size_t b,
                                                const std::vector<std::size_t>& walk) {
  auto side = [&](std::size_t v, std::size_t cycle_arrow) -> std::optional<std::size_t> {
    std::vector<std::size_t> rest;
    for (auto x : incident(q, v)) {
      if (x != cycle_arrow) rest.push_back(x);
    }
    if (rest.size() != 1) return std::nullopt;
    return rest.front();
  };
  auto beta = side(a, walk.front());
  auto gamma = side(b, walk.back());
  if (!beta || !gamma) return std::nullopt;
  const auto& a1 = q.arrow(walk.front());
  const auto& an = q.arrow(walk.back());
  const auto& be = q.arrow(*beta);
  const auto& ga = q.arrow(*gamma);
  ExceptionalParams p;
  if (a1.target == a && be.target == a && an.source == b && ga.target == b) {
    p.shape = ExceptionalCase::One;
  } else if (a1.source == a && be.source == a && an.target == b && ga.source == b) {
    p.shape = ExceptionalCase::Two;
  } else {
    return std::nullopt;
  }
  p.n = walk.size();
  p.m = tail_length(q, a, *beta);
  p.l = tail_length(q, b, *gamma);
  p.i = q.vertex(a);
  p.j = q.vertex(b);
  for (auto x : walk) p.cycle_arrows.push_back(q.arrow(x).id);
  return p;
}

ExceptionalMatch match_pair(const Quiver& base, const GluePair& pair) {
  ExceptionalMatch out;
  const auto i = base.vertex_index(pair.first);
  const auto j = base.vertex_index(pair.second);
  const auto shapes = underlying_shape(base);
  const auto comp = std::find_if(shapes.components.begin(), shapes.components.end(), [&](const auto& c) {
    return std::binary_search(c.members.begin(), c.members.end(), i);
  });
  if (!std::binary_search(comp->members.begin(), comp->members.end(), j)) {
    out.reason = "pair " + pair_string(pair) + " joins two base components";
    return out;
  }
  if (comp->kind == ShapeKind::ACycle) {
    out.reason = "pair " + pair_string(pair) + " lies on a cycle-shaped base component";
    out.warnings.push_back("exceptional shapes are only recognized on line-shaped base components; " +
                           pair_string(pair) + " sits on " + comp->label);
    return out;
  }
  if (comp->kind != ShapeKind::ALine) {
    out.reason = "base component of " + pair_string(pair) + " is not a line";
    return out;
  }
  auto walk = tree_walk(base, i, j);
  if (auto p = match_labeling(base, i, j, *walk)) {
    out.params = p;
    return out;
  }
  std::reverse(walk->begin(), walk->end());
  if (auto p = match_labeling(base, j, i, *walk)) {
    out.params = p;
    return out;
  }
  out.reason = "pair " + pair_string(pair) + " does not have the β/γ arrow pattern";
  return out;
}

std::string component_label(const NodalDatum& d) {
  return "component {" + join(d.base.vertices()) + "}";
}

void require_valid(const NodalDatum& d) {
  auto report = validate(d);
  if (report.ok()) return;
  std::vector<std::string> msgs;
  for (const auto& v : report.violations) msgs.push_back(v.message);
  throw InvalidDatum(join(msgs, "; "));
}

}  // namespace

void require_type_a(const Quiver& base) {
  for (const auto& c : underlying_shape(base).components) {
    if (c.kind != ShapeKind::ALine && c.kind != ShapeKind::ACycle) {
      std::vector<std::string> ids;
      for (auto v : c.members) ids.push_back(base.vertex(v));
      throw NotTypeA("base component {" + join(ids) + "} has shape " + c.label + ", not a line or cycle");
    }
  }
}

bool is_inessential(const NodalDatum& d, const GluePair& pair) {
  const bool known = std::any_of(d.glue_pairs.begin(), d.glue_pairs.end(),
                                 [&](const GluePair& p) { return same_pair(p, pair); });
  if (!known) throw UnknownPair("pair " + pair_string(pair) + " is not glued in this datum");
  return inessential_ordering(d.base, pair).has_value();
}

NodalDatum strip_inessential(const NodalDatum& d) {
  NodalDatum out{d.base, {}, d.blow_vertices};
  for (const auto& p : d.glue_pairs) {
    if (!inessential_ordering(d.base, p)) out.glue_pairs.push_back(p);
  }
  return out;
}

RepType gabriel_type(const Quiver& q) {
  if (!q.is_acyclic()) throw CyclicQuiver("quiver has an oriented cycle");
  RepType out;
  for (const auto& c : underlying_shape(q).components) {
    std::vector<std::string> ids;
    for (auto v : c.members) ids.push_back(q.vertex(v));
    Verdict v = c.is_dynkin() ? Verdict::Finite : c.is_euclidean() ? Verdict::Tame : Verdict::Wild;
    const char* kind = c.is_dynkin() ? "Dynkin" : c.is_euclidean() ? "Euclidean" : "neither Dynkin nor Euclidean";
    out.trace.push_back("hereditary {" + join(ids) + "}: " + c.label + " (" + kind + ") -> " + verdict_name(v));
    out.verdict = combine(out.verdict, v);
  }
  return out;
}

GentleReport is_gentle_presentation(const Presentation& p) {
  GentleReport out;
  const auto& q = p.quiver();
  auto fail = [&](std::string msg) {
    out.gentle = false;
    out.diagnostics.push_back(std::move(msg));
  };
  std::set<std::pair<std::size_t, std::size_t>> zero;  // (α, β) with α·β = 0
  for (const auto& r : p.relations()) {
    if (!r.is_zero() || r.lhs.length() != 2) {
      fail("relation " + relation_string(q, r) + " is not a zero relation of length two");
      continue;
    }
    zero.emplace(r.lhs.word()[0], r.lhs.word()[1]);
  }
  if (!out.gentle) return out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const auto out_arrows = q.arrows_at(v, Direction::Out);
    const auto in_arrows = q.arrows_at(v, Direction::In);
    if (out_arrows.size() > 2) fail("more than two arrows start at " + q.vertex(v));
    if (in_arrows.size() > 2) fail("more than two arrows end at " + q.vertex(v));
    if (out_arrows.size() == 2) {
      for (auto b : in_arrows) {
        const bool r1 = zero.count({out_arrows[0], b}) > 0;
        const bool r2 = zero.count({out_arrows[1], b}) > 0;
        if (r1 == r2) {
          fail("at " + q.vertex(v) + ", arrow " + q.arrow(b).id + " needs exactly one zero composite with " +
               q.arrow(out_arrows[0]).id + ", " + q.arrow(out_arrows[1]).id);
        }
      }
    }
    if (in_arrows.size() == 2) {
      for (auto a : out_arrows) {
        const bool r1 = zero.count({a, in_arrows[0]}) > 0;
        const bool r2 = zero.count({a, in_arrows[1]}) > 0;
        if (r1 == r2) {
          fail("at " + q.vertex(v) + ", arrow " + q.arrow(a).id + " needs exactly one zero composite with " +
               q.arrow(in_arrows[0]).id + ", " + q.arrow(in_arrows[1]).id);
        }
      }
    }
  }
  return out;
}

bool is_quasi_gentle(const NodalDatum& d) {
  require_type_a(d.base);
  const auto s = strip_inessential(d);
  std::vector<std::string> touched = s.blow_vertices;
  for (const auto& p : s.glue_pairs) {
    touched.push_back(p.first);
    touched.push_back(p.second);
  }
  return std::all_of(touched.begin(), touched.end(), [&](const std::string& v) {
    return s.base.arrows_at(v, Direction::In).size() <= 1 && s.base.arrows_at(v, Direction::Out).size() <= 1;
  });
}

ExceptionalMatch detect_exceptional(const NodalDatum& d) {
  require_type_a(d.base);
  const auto s = strip_inessential(d);
  if (!s.blow_vertices.empty()) return {std::nullopt, "blown vertices present", {}};
  if (s.glue_pairs.size() != 1) {
    return {std::nullopt, std::to_string(s.glue_pairs.size()) + " essential glue pairs, need exactly one", {}};
  }
  return match_pair(s.base, s.glue_pairs.front());
}

ExceptionalMatch detect_super_exceptional(const NodalDatum& d) {
  require_type_a(d.base);
  const auto s = strip_inessential(d);
  ExceptionalMatch out;
  if (!s.blow_vertices.empty()) {
    out.reason = "blown vertices present";
    return out;
  }
  if (s.glue_pairs.size() != 2) {
    out.reason = std::to_string(s.glue_pairs.size()) + " essential glue pairs, need exactly two";
    return out;
  }
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& main = s.glue_pairs[k];
    const auto& inner = s.glue_pairs[1 - k];
    auto m = match_pair(s.base, main);
    out.warnings.insert(out.warnings.end(), m.warnings.begin(), m.warnings.end());
    if (!m || m.params->n != 3) continue;
    const auto& a2 = s.base.arrow(s.base.arrow_index(m.params->cycle_arrows[1]));
    const GluePair ends{s.base.vertex(a2.source), s.base.vertex(a2.target)};
    if (!same_pair(ends, inner) || inessential_ordering(s.base, inner)) continue;
    out.params = m.params;
    out.params->super_exceptional = true;
    return out;
  }
  out.reason = "no pair is exceptional with n=3 and partnered by the ends of its middle arrow";
  return out;
}

RepType exceptional_type(const ExceptionalParams& p) {
  const auto n = p.n, m = p.m, l = p.l;
  const std::string params =
      "(n,m,l)=(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(l) + ")";
  RepType out;
  if (p.super_exceptional) {
    out.verdict = m + l == 0 ? Verdict::Finite : m + l == 1 ? Verdict::Tame : Verdict::Wild;
    const char* clause = m + l == 0 ? "m=l=0" : m + l == 1 ? "m+l=1" : "m+l>1";
    out.trace.push_back("super-exceptional table: " + verdict_name(out.verdict) + ", " + clause + " at " + params);
    return out;
  }
  std::string clause;
  if (m == 0 && l == 0) {
    out.verdict = Verdict::Finite, clause = "m=l=0";
  } else if (l == 0 && m == 1 && n <= 3) {
    out.verdict = Verdict::Finite, clause = "l=0, m=1, n<=3";
  } else if (l == 0 && m >= 2 && m <= 3 && n == 1) {
    out.verdict = Verdict::Finite, clause = "l=0, 2<=m<=3, n=1";
  } else if (m == 0 && l == 1 && n <= 2) {
    out.verdict = Verdict::Finite, clause = "m=0, l=1, n<=2";
  } else if (l == 0 && m == 1 && n == 4) {
    out.verdict = Verdict::Tame, clause = "l=0, m=1, n=4";
  } else if (l == 0 && m == 2 && n == 2) {
    out.verdict = Verdict::Tame, clause = "l=0, m=2, n=2";
  } else if (l == 0 && m == 4 && n == 1) {
    out.verdict = Verdict::Tame, clause = "l=0, m=4, n=1";
  } else if (m == 0 && l == 1 && n == 3) {
    out.verdict = Verdict::Tame, clause = "m=0, l=1, n=3";
  } else {
    out.verdict = Verdict::Wild, clause = "no finite or tame clause applies";
  }
  out.trace.push_back("exceptional table: " + verdict_name(out.verdict) + ", " + clause + " at " + params);
  return out;
}

std::vector<NodalDatum> split_components(const NodalDatum& d) {
  const auto& q = d.base;
  std::vector<std::size_t> parent(q.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  for (const auto& a : q.arrows()) unite(a.source, a.target);
  for (const auto& p : d.glue_pairs) unite(q.vertex_index(p.first), q.vertex_index(p.second));

  std::vector<std::size_t> roots;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (std::find(roots.begin(), roots.end(), find(v)) == roots.end()) roots.push_back(find(v));
  }
  std::vector<NodalDatum> out;
  for (auto root : roots) {
    std::vector<std::string> vertices;
    std::vector<ArrowSpec> arrows;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      if (find(v) == root) vertices.push_back(q.vertex(v));
    }
    for (const auto& a : q.arrows()) {
      if (find(a.source) == root) arrows.push_back({a.id, q.vertex(a.source), q.vertex(a.target)});
    }
    NodalDatum sub{Quiver(vertices, arrows), {}, {}};
    for (const auto& p : d.glue_pairs) {
      if (find(q.vertex_index(p.first)) == root) sub.glue_pairs.push_back(p);
    }
    for (const auto& v : d.blow_vertices) {
      if (find(q.vertex_index(v)) == root) sub.blow_vertices.push_back(v);
    }
    out.push_back(std::move(sub));
  }
  return out;
}

RepType classify(const NodalDatum& d) {
  require_valid(d);
  require_type_a(d.base);
  RepType out;
  for (const auto& p : d.glue_pairs) {
    if (inessential_ordering(d.base, p)) {
      out.trace.push_back("inessential gluing " + pair_string(p) + " stripped");
    }
  }
  const auto stripped = strip_inessential(d);
  bool unresolved = false;
  bool tame_seen = false;
  for (const auto& comp : split_components(stripped)) {
    const auto label = component_label(comp);
    const auto built = build_presentation(comp);
    Verdict v;
    if (built.presentation.relations().empty()) {
      auto g = gabriel_type(built.presentation.quiver());
      v = g.verdict;
      for (auto& line : g.trace) out.trace.push_back(label + ": no relations; " + line);
    } else if (is_quasi_gentle(comp)) {
      v = Verdict::NonWildUnresolved;
      out.trace.push_back(label + ": quasi-gentle (gentle or skewed-gentle up to inessential gluings), "
                                  "finite versus tame not decided -> NonWildUnresolved");
      unresolved = true;
    } else if (auto e = detect_exceptional(comp)) {
      auto t = exceptional_type(*e.params);
      v = t.verdict;
      out.trace.push_back(label + ": exceptional pair {" + e.params->i + " " + e.params->j + "}; " + t.trace.front());
    } else if (auto s = detect_super_exceptional(comp)) {
      auto t = exceptional_type(*s.params);
      v = t.verdict;
      out.trace.push_back(label + ": super-exceptional on pair {" + s.params->i + " " + s.params->j + "}; " +
                          t.trace.front());
    } else {
      for (const auto& w : e.warnings) out.trace.push_back(label + ": warning: " + w);
      v = Verdict::Wild;
      out.trace.push_back(label + ": not quasi-gentle, exceptional or super-exceptional -> Wild");
    }
    tame_seen = tame_seen || v == Verdict::Tame;
    out.verdict = combine(out.verdict, v);
  }
  if (unresolved && tame_seen && out.verdict == Verdict::NonWildUnresolved) {
    out.trace.push_back("tame components joined with unresolved ones stay NonWildUnresolved");
  }
  out.trace.push_back("verdict: " + verdict_name(out.verdict));
  return out;
}

std::int64_t tits_witness(std::int64_t x, std::int64_t y1, std::int64_t y2) {
  return x * x + 2 * y1 * y1 + y2 * y2 + 2 * y1 * y2 - 3 * x * y1 - 2 * x * y2;
}

}  // namespace nodal
