#include "nodal/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "nodal/errors.hpp"

namespace nodal {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!vertex_index_.emplace(vertices_[v], v).second) {
      throw InputError("duplicate vertex id '" + vertices_[v] + "'");
    }
  }
  arrows_.reserve(arrows.size());
  for (const auto& as : arrows) {
    auto s = find_vertex(as.source);
    auto t = find_vertex(as.target);
    if (!s) throw UnknownVertex("arrow '" + as.id + "': unknown source '" + as.source + "'");
    if (!t) throw UnknownVertex("arrow '" + as.id + "': unknown target '" + as.target + "'");
    if (!arrow_index_.emplace(as.id, arrows_.size()).second) {
      throw InputError("duplicate arrow id '" + as.id + "'");
    }
    arrows_.push_back(Arrow{as.id, *s, *t});
  }
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Quiver::vertex_index(const std::string& id) const {
  auto v = find_vertex(id);
  if (!v) throw UnknownVertex("unknown vertex '" + id + "'");
  return *v;
}

std::size_t Quiver::arrow_index(const std::string& id) const {
  auto a = find_arrow(id);
  if (!a) throw InputError("unknown arrow '" + id + "'");
  return *a;
}

std::vector<std::size_t> Quiver::arrows_at(std::size_t v, Direction dir) const {
  if (v >= vertices_.size()) throw UnknownVertex("vertex index out of range");
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const auto& arr = arrows_[a];
    if ((dir == Direction::In ? arr.target : arr.source) == v) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> Quiver::arrows_at(const std::string& v, Direction dir) const {
  return arrows_at(vertex_index(v), dir);
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm; loops count as cycles.
  std::vector<std::size_t> indeg(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < indeg.size(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows_) {
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
    }
  }
  return seen == vertices_.size();
}

std::vector<std::vector<std::size_t>> Quiver::components() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : arrows_) parent[find(a.source)] = find(a.target);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < vertices_.size(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool Quiver::operator==(const Quiver& other) const {
  if (vertices_ != other.vertices_ || arrows_.size() != other.arrows_.size()) return false;
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const auto& x = arrows_[a];
    const auto& y = other.arrows_[a];
    if (x.id != y.id || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

Path Path::empty(std::size_t vertex) { return Path({}, vertex, vertex); }

Path Path::arrow(const Quiver& q, std::size_t arrow) {
  const auto& a = q.arrow(arrow);
  return Path({arrow}, a.source, a.target);
}

Path Path::from_word(const Quiver& q, std::vector<std::size_t> word) {
  if (word.empty()) throw NonComposable("empty word needs a base vertex");
  for (auto a : word) {
    if (a >= q.arrow_count()) throw InputError("arrow index out of range");
  }
  for (std::size_t t = 0; t + 1 < word.size(); ++t) {
    if (q.arrow(word[t + 1]).target != q.arrow(word[t]).source) {
      throw NonComposable("arrows '" + q.arrow(word[t]).id + "' and '" + q.arrow(word[t + 1]).id +
                          "' do not compose");
    }
  }
  auto source = q.arrow(word.back()).source;
  auto target = q.arrow(word.front()).target;
  return Path(std::move(word), source, target);
}

Path Path::from_ids(const Quiver& q, const std::vector<std::string>& arrow_ids) {
  std::vector<std::size_t> word;
  word.reserve(arrow_ids.size());
  for (const auto& id : arrow_ids) word.push_back(q.arrow_index(id));
  return from_word(q, std::move(word));
}

std::vector<std::size_t> Path::applied() const { return {word_.rbegin(), word_.rend()}; }

Path compose(const Path& p, const Path& q) {
  if (q.target() != p.source()) {
    throw NonComposable("target of the right factor is not the source of the left factor");
  }
  if (p.is_empty()) return q;
  if (q.is_empty()) return p;
  std::vector<std::size_t> word = p.word();
  word.insert(word.end(), q.word().begin(), q.word().end());
  return Path(std::move(word), q.source(), p.target());
}

std::string path_string(const Quiver& q, const Path& p, const std::string& sep) {
  if (p.is_empty()) return "e_" + q.vertex(p.source());
  std::string out;
  for (std::size_t t = 0; t < p.length(); ++t) {
    if (t) out += sep;
    out += q.arrow(p.word()[t]).id;
  }
  return out;
}

Relation Relation::zero(Path p) {
  if (p.length() < 2) throw InvalidPresentation("zero relation must have length >= 2");
  Relation r;
  r.kind = Kind::MonomialZero;
  r.lhs = std::move(p);
  return r;
}

Relation Relation::commutation(Path lhs, Path rhs) {
  if (lhs.length() < 2 || rhs.length() < 2) {
    throw InvalidPresentation("commutation sides must have length >= 2");
  }
  if (lhs.source() != rhs.source() || lhs.target() != rhs.target()) {
    throw InvalidPresentation("commutation sides must share source and target");
  }
  Relation r;
  r.kind = Kind::Commutation;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

namespace {

void check_path(const Quiver& q, const Path& p) {
  if (p.is_empty()) {
    if (p.source() >= q.vertex_count()) throw InvalidPresentation("empty path at unknown vertex");
    return;
  }
  // Re-validate against this quiver; throws on mismatch.
  auto checked = Path::from_word(q, p.word());
  if (checked != p) throw InvalidPresentation("relation path endpoints disagree with the quiver");
}

}  // namespace

Presentation::Presentation(Quiver quiver, std::vector<Relation> relations)
    : quiver_(std::move(quiver)), relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    try {
      check_path(quiver_, r.lhs);
      if (!r.is_zero()) check_path(quiver_, r.rhs);
    } catch (const NonComposable& e) {
      throw InvalidPresentation(std::string("invalid relation path: ") + e.what());
    }
    if (r.lhs.length() < 2 || (!r.is_zero() && r.rhs.length() < 2)) {
      throw InvalidPresentation("relation paths must have length >= 2");
    }
  }
}

Presentation Presentation::canonical() const {
  auto rels = relations_;
  for (auto& r : rels) {
    if (!r.is_zero() && r.rhs < r.lhs) std::swap(r.lhs, r.rhs);
  }
  std::sort(rels.begin(), rels.end());
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  return Presentation(quiver_, std::move(rels));
}

std::string relation_string(const Quiver& q, const Relation& r, const std::string& sep) {
  if (r.is_zero()) return path_string(q, r.lhs, sep) + " = 0";
  return path_string(q, r.lhs, sep) + " = " + path_string(q, r.rhs, sep);
}

namespace {

std::string number_label(const char* prefix, std::size_t n) { return prefix + std::to_string(n); }

// Length of the arm leaving `center` through `first`, for a tree whose only
// branch points are known. Returns 0 if the arm hits another branch point.
std::size_t arm_length(const std::vector<std::vector<std::size_t>>& adj, std::size_t center,
                       std::size_t first) {
  std::size_t prev = center;
  std::size_t cur = first;
  std::size_t len = 1;
  while (true) {
    if (adj[cur].size() > 2) return 0;
    if (adj[cur].size() == 1) return len;
    std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    ++len;
  }
}

ComponentShape classify_component(const Quiver& q, std::vector<std::size_t> members) {
  ComponentShape shape;
  shape.members = std::move(members);
  const std::size_t n = shape.members.size();
  std::map<std::size_t, std::size_t> local;
  for (std::size_t k = 0; k < n; ++k) local[shape.members[k]] = k;

  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<std::size_t> degree(n, 0);
  std::vector<ArrowSpec> sub_arrows;
  std::vector<std::string> sub_vertices;
  for (auto v : shape.members) sub_vertices.push_back(q.vertex(v));
  for (const auto& a : q.arrows()) {
    if (!local.count(a.source)) continue;
    ++shape.arrow_count;
    auto s = local[a.source];
    auto t = local[a.target];
    degree[s] += 1;
    degree[t] += 1;
    adj[s].push_back(t);
    if (s != t) adj[t].push_back(s);
    sub_arrows.push_back(ArrowSpec{a.id, q.vertex(a.source), q.vertex(a.target)});
  }
  shape.acyclic = Quiver(sub_vertices, sub_arrows).is_acyclic();

  const std::size_t e = shape.arrow_count;
  if (e == n && std::all_of(degree.begin(), degree.end(), [](auto d) { return d == 2; })) {
    shape.kind = ShapeKind::ACycle;
    shape.label = number_label("~A", n - 1);
    return shape;
  }
  shape.kind = ShapeKind::Other;
  shape.label = "other";
  if (e + 1 != n) return shape;  // connected, so a tree iff e == n - 1

  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] > 2) branch.push_back(v);

  if (branch.empty()) {
    shape.kind = ShapeKind::ALine;
    shape.label = number_label("A", n);
    return shape;
  }
  if (branch.size() == 1) {
    auto c = branch[0];
    std::vector<std::size_t> arms;
    for (auto nb : adj[c]) arms.push_back(arm_length(adj, c, nb));
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 4 && arms == std::vector<std::size_t>{1, 1, 1, 1}) {
      shape.kind = ShapeKind::EuclideanD;
      shape.label = "~D4";
      return shape;
    }
    if (arms.size() != 3) return shape;
    const auto a = arms[0], b = arms[1], cc = arms[2];
    if (a == 1 && b == 1) {
      shape.kind = ShapeKind::DynkinD;
      shape.label = number_label("D", n);
    } else if (a == 1 && b == 2 && cc >= 2 && cc <= 4) {
      shape.kind = ShapeKind::DynkinE;
      shape.label = number_label("E", n);
    } else if ((a == 2 && b == 2 && cc == 2) || (a == 1 && b == 3 && cc == 3) ||
               (a == 1 && b == 2 && cc == 5)) {
      shape.kind = ShapeKind::EuclideanE;
      shape.label = number_label("~E", n - 1);
    }
    return shape;
  }
  if (branch.size() == 2) {
    for (auto c : branch) {
      if (degree[c] != 3) return shape;
      std::size_t leaves = 0;
      for (auto nb : adj[c])
        if (degree[nb] == 1) ++leaves;
      if (leaves != 2) return shape;
    }
    shape.kind = ShapeKind::EuclideanD;
    shape.label = number_label("~D", n - 1);
  }
  return shape;
}

}  // namespace

ShapeReport underlying_shape(const Quiver& q) {
  ShapeReport report;
  for (auto& comp : q.components()) {
    report.components.push_back(classify_component(q, std::move(comp)));
    report.acyclic = report.acyclic && report.components.back().acyclic;
  }
  return report;
}

}  // namespace nodal
