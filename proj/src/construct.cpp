#include "nodal/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nodal/errors.hpp"

namespace nodal {

ValidationReport validate(const NodalDatum& d) {
  ValidationReport report;
  const auto& q = d.base;
  if (!q.is_acyclic()) {
    report.violations.push_back({"base quiver has an oriented cycle", {}});
  }
  std::map<std::string, std::size_t> uses;
  auto note = [&](const std::string& v) {
    if (!q.find_vertex(v)) {
      report.violations.push_back({"unknown vertex", {v}});
      return false;
    }
    ++uses[v];
    return true;
  };
  for (const auto& pair : d.glue_pairs) {
    if (pair.first == pair.second) {
      report.violations.push_back({"glue pair joins a vertex to itself", {pair.first}});
    }
    note(pair.first);
    if (pair.first != pair.second) note(pair.second);
  }
  for (const auto& v : d.blow_vertices) {
    if (!note(v)) continue;
    auto idx = q.vertex_index(v);
    for (auto a : q.arrows_at(idx, Direction::Out)) {
      if (q.arrow(a).target == idx) {
        report.violations.push_back({"blown vertex carries a loop", {v}});
        break;
      }
    }
  }
  for (const auto& [v, count] : uses) {
    if (count > 1) report.violations.push_back({"vertex used by more than one operation", {v}});
  }
  return report;
}

std::string merged_vertex_id(const std::string& i, const std::string& j) {
  return "(" + i + " " + j + ")";
}
std::string prime_id(const std::string& id) { return id + "'"; }
std::string double_prime_id(const std::string& id) { return id + "''"; }

namespace {

Path remap(const Quiver& q, const Path& p, const std::vector<std::size_t>& arrow_map) {
  std::vector<std::size_t> word;
  word.reserve(p.length());
  for (auto a : p.word()) word.push_back(arrow_map[a]);
  return Path::from_word(q, std::move(word));
}

void require_fresh(const Quiver& q, const std::string& id) {
  if (q.find_vertex(id) || q.find_arrow(id)) {
    throw InvalidDatum("generated id '" + id + "' collides with an existing id");
  }
}

}  // namespace

Presentation glue_vertices(const Presentation& p, const std::string& i, const std::string& j) {
  const auto& q = p.quiver();
  const auto vi = q.vertex_index(i);
  const auto vj = q.vertex_index(j);
  if (vi == vj) throw InvalidDatum("cannot glue a vertex to itself");
  const auto merged = merged_vertex_id(i, j);
  require_fresh(q, merged);

  std::vector<std::string> vertices;
  std::vector<std::string> rename(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (v == vi || v == vj) {
      rename[v] = merged;
      if (v == std::min(vi, vj)) vertices.push_back(merged);
    } else {
      rename[v] = q.vertex(v);
      vertices.push_back(q.vertex(v));
    }
  }
  std::vector<ArrowSpec> arrows;
  for (const auto& a : q.arrows()) arrows.push_back({a.id, rename[a.source], rename[a.target]});
  Quiver glued(std::move(vertices), arrows);

  std::vector<std::size_t> identity(q.arrow_count());
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<Relation> relations;
  for (const auto& r : p.relations()) {
    if (r.is_zero()) {
      relations.push_back(Relation::zero(remap(glued, r.lhs, identity)));
    } else {
      relations.push_back(
          Relation::commutation(remap(glued, r.lhs, identity), remap(glued, r.rhs, identity)));
    }
  }
  auto cross = [&](std::size_t from, std::size_t to) {
    for (auto a : q.arrows_at(from, Direction::Out)) {
      for (auto b : q.arrows_at(to, Direction::In)) {
        relations.push_back(Relation::zero(Path::from_word(glued, {a, b})));
      }
    }
  };
  cross(vi, vj);
  cross(vj, vi);
  return Presentation(std::move(glued), std::move(relations));
}

Presentation blow_up_vertex(const Presentation& p, const std::string& v) {
  const auto& q = p.quiver();
  const auto vb = q.vertex_index(v);
  for (auto a : q.arrows_at(vb, Direction::Out)) {
    if (q.arrow(a).target == vb) throw InvalidDatum("cannot blow up vertex '" + v + "' with a loop");
  }
  const auto v1 = prime_id(v);
  const auto v2 = double_prime_id(v);
  require_fresh(q, v1);
  require_fresh(q, v2);

  std::vector<std::string> vertices;
  for (std::size_t u = 0; u < q.vertex_count(); ++u) {
    if (u == vb) {
      vertices.push_back(v1);
      vertices.push_back(v2);
    } else {
      vertices.push_back(q.vertex(u));
    }
  }
  std::vector<ArrowSpec> arrows;
  std::vector<std::size_t> first_copy(q.arrow_count());
  std::vector<std::size_t> second_copy(q.arrow_count());
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    auto end = [&](std::size_t u, const std::string& replacement) {
      return u == vb ? replacement : q.vertex(u);
    };
    if (arr.source == vb || arr.target == vb) {
      // An arrow already copied by an earlier blow-up keeps its suffix apart.
      const auto stem = !arr.id.empty() && arr.id.back() == '\'' ? arr.id + "_" : arr.id;
      require_fresh(q, prime_id(stem));
      require_fresh(q, double_prime_id(stem));
      first_copy[a] = arrows.size();
      arrows.push_back({prime_id(stem), end(arr.source, v1), end(arr.target, v1)});
      second_copy[a] = arrows.size();
      arrows.push_back({double_prime_id(stem), end(arr.source, v2), end(arr.target, v2)});
    } else {
      first_copy[a] = second_copy[a] = arrows.size();
      arrows.push_back({arr.id, q.vertex(arr.source), q.vertex(arr.target)});
    }
  }
  Quiver blown(std::move(vertices), arrows);

  auto touches = [&](const Path& path) {
    return std::any_of(path.word().begin(), path.word().end(), [&](auto a) {
      return q.arrow(a).source == vb || q.arrow(a).target == vb;
    });
  };
  std::vector<Relation> relations;
  auto copy_relation = [&](const Relation& r, const std::vector<std::size_t>& map) {
    if (r.is_zero()) {
      relations.push_back(Relation::zero(remap(blown, r.lhs, map)));
    } else {
      relations.push_back(Relation::commutation(remap(blown, r.lhs, map), remap(blown, r.rhs, map)));
    }
  };
  for (const auto& r : p.relations()) {
    copy_relation(r, first_copy);
    if (touches(r.lhs) || (!r.is_zero() && touches(r.rhs))) copy_relation(r, second_copy);
  }
  for (auto a : q.arrows_at(vb, Direction::Out)) {
    for (auto b : q.arrows_at(vb, Direction::In)) {
      relations.push_back(
          Relation::commutation(Path::from_word(blown, {first_copy[a], first_copy[b]}),
                                Path::from_word(blown, {second_copy[a], second_copy[b]})));
    }
  }
  return Presentation(std::move(blown), std::move(relations));
}

BuiltPresentation build_presentation(const NodalDatum& d) {
  auto report = validate(d);
  if (!report.ok()) {
    std::string msg = "invalid datum: " + report.violations.front().message;
    for (const auto& v : report.violations.front().vertices) msg += " '" + v + "'";
    throw InvalidDatum(msg);
  }
  BuiltPresentation out;
  for (const auto& v : d.base.vertices()) out.vertex_map.image[v] = {v};

  Presentation current(d.base, {});
  // Blow-ups on the hereditary base only produce commutation relations; the
  // gluings afterwards see every doubled arrow, so cross products through a
  // glued vertex are all killed regardless of the listed order.
  auto blows = d.blow_vertices;
  std::sort(blows.begin(), blows.end(), [&](const auto& x, const auto& y) {
    return d.base.vertex_index(x) < d.base.vertex_index(y);
  });
  for (const auto& v : blows) {
    current = blow_up_vertex(current, v);
    out.vertex_map.image[v] = {prime_id(v), double_prime_id(v)};
  }
  auto glues = d.glue_pairs;
  auto key = [&](const GluePair& g) {
    auto a = d.base.vertex_index(g.first);
    auto b = d.base.vertex_index(g.second);
    return std::min(a, b);
  };
  std::sort(glues.begin(), glues.end(),
            [&](const auto& x, const auto& y) { return key(x) < key(y); });
  for (const auto& g : glues) {
    current = glue_vertices(current, g.first, g.second);
    out.vertex_map.image[g.first] = {merged_vertex_id(g.first, g.second)};
    out.vertex_map.image[g.second] = {merged_vertex_id(g.first, g.second)};
  }
  out.presentation = std::move(current);
  return out;
}

std::vector<Path> nonzero_paths(const Presentation& p, std::size_t length_cap) {
  const auto& q = p.quiver();
  std::vector<std::vector<std::size_t>> zero_words;
  for (const auto& r : p.relations())
    if (r.is_zero()) zero_words.push_back(r.lhs.word());

  std::vector<Path> out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out.push_back(Path::empty(v));
  std::vector<Path> frontier = out;
  std::size_t length = 0;
  while (!frontier.empty()) {
    ++length;
    std::vector<Path> next;
    for (const auto& path : frontier) {
      for (auto a : q.arrows_at(path.target(), Direction::Out)) {
        Path extended = compose(Path::arrow(q, a), path);
        const auto& w = extended.word();
        bool killed = std::any_of(zero_words.begin(), zero_words.end(), [&](const auto& z) {
          return z.size() <= w.size() && std::equal(z.begin(), z.end(), w.begin());
        });
        if (killed) continue;
        if (length > length_cap) {
          throw NonNilpotentCycle("a nonzero path exceeds the length cap of " +
                                  std::to_string(length_cap));
        }
        next.push_back(std::move(extended));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::size_t dimension(const Presentation& p, std::size_t length_cap) {
  auto paths = nonzero_paths(p, length_cap);
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::size_t vertices = 0;
  std::vector<const Path*> nonempty;
  for (const auto& path : paths) {
    if (path.is_empty()) {
      ++vertices;
      continue;
    }
    index.emplace(path.word(), nonempty.size());
    nonempty.push_back(&path);
  }

  std::vector<std::size_t> parent(nonempty.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<bool> zero(nonempty.size(), false);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  // Every relation u·(lhs - rhs)·w either identifies two surviving paths or
  // forces one of them to zero when the other contains a zero relation.
  auto apply = [&](std::size_t id, const std::vector<std::size_t>& from,
                   const std::vector<std::size_t>& to) {
    const auto& w = nonempty[id]->word();
    if (from.size() > w.size()) return;
    for (std::size_t k = 0; k + from.size() <= w.size(); ++k) {
      if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<std::ptrdiff_t>(k))) continue;
      std::vector<std::size_t> swapped(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      swapped.insert(swapped.end(), to.begin(), to.end());
      swapped.insert(swapped.end(), w.begin() + static_cast<std::ptrdiff_t>(k + from.size()), w.end());
      auto it = index.find(swapped);
      if (it == index.end()) {
        zero[id] = true;
      } else {
        parent[find(id)] = find(it->second);
      }
    }
  };
  for (const auto& r : p.relations()) {
    if (r.is_zero()) continue;
    for (std::size_t id = 0; id < nonempty.size(); ++id) {
      apply(id, r.lhs.word(), r.rhs.word());
      apply(id, r.rhs.word(), r.lhs.word());
    }
  }
  std::set<std::size_t> dead;
  for (std::size_t id = 0; id < nonempty.size(); ++id)
    if (zero[id]) dead.insert(find(id));
  std::set<std::size_t> alive;
  for (std::size_t id = 0; id < nonempty.size(); ++id) {
    auto root = find(id);
    if (!dead.count(root)) alive.insert(root);
  }
  return vertices + alive.size();
}

}  // namespace nodal
