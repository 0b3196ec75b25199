#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nodal {

/// An arrow of a quiver; endpoints are vertex indices.
struct Arrow {
  std::string id;
  std::size_t source;
  std::size_t target;
};

/// Arrow declared by vertex ids, used to build a Quiver.
struct ArrowSpec {
  std::string id;
  std::string source;
  std::string target;
};

enum class Direction { In, Out };

/// Finite directed multigraph. Vertex and arrow ids are opaque strings and
/// unique within the quiver; parallel arrows and loops are allowed.
/// Immutable once constructed.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::optional<std::size_t> find_arrow(const std::string& id) const;
  /// Throws UnknownVertex.
  std::size_t vertex_index(const std::string& id) const;
  /// Throws InputError for an unknown arrow id.
  std::size_t arrow_index(const std::string& id) const;

  /// Arrows ending (In) or starting (Out) at v, in declaration order. A loop
  /// is reported in both directions.
  std::vector<std::size_t> arrows_at(std::size_t v, Direction dir) const;
  std::vector<std::size_t> arrows_at(const std::string& v, Direction dir) const;

  bool is_acyclic() const;

  /// Connected components of the underlying undirected multigraph; each is a
  /// sorted list of vertex indices, components ordered by smallest member.
  std::vector<std::vector<std::size_t>> components() const;

  bool operator==(const Quiver& other) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> arrow_index_;
};

/// A path of a quiver stored as its written word: for the word (a1, ..., ak)
/// the arrow ak is applied first and a1 last, so target(a_{t+1}) must equal
/// source(a_t). The empty path at a vertex is the idempotent at that vertex.
class Path {
 public:
  static Path empty(std::size_t vertex);
  static Path arrow(const Quiver& q, std::size_t arrow);
  /// Throws NonComposable if consecutive arrows do not compose.
  static Path from_word(const Quiver& q, std::vector<std::size_t> word);
  static Path from_ids(const Quiver& q, const std::vector<std::string>& arrow_ids);

  const std::vector<std::size_t>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_empty() const { return word_.empty(); }
  std::size_t source() const { return source_; }
  std::size_t target() const { return target_; }

  /// Arrows in the order they are applied (reverse of the written word).
  std::vector<std::size_t> applied() const;

  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;

 private:
  friend Path compose(const Path& p, const Path& q);
  Path(std::vector<std::size_t> word, std::size_t source, std::size_t target)
      : word_(std::move(word)), source_(source), target_(target) {}

  std::vector<std::size_t> word_;
  std::size_t source_ = 0;
  std::size_t target_ = 0;
};

/// The product p·q (q applied first). Throws NonComposable unless
/// target(q) == source(p).
Path compose(const Path& p, const Path& q);

/// Written form of a path, arrow ids joined by `sep`; empty paths print as
/// "e_<vertex>".
std::string path_string(const Quiver& q, const Path& p, const std::string& sep = "·");

struct Relation {
  enum class Kind { MonomialZero, Commutation };

  Kind kind = Kind::MonomialZero;
  Path lhs = Path::empty(0);
  Path rhs = Path::empty(0);  // only meaningful for Commutation

  /// Throws InvalidPresentation if the path has length < 2.
  static Relation zero(Path p);
  /// Throws InvalidPresentation unless both sides have length >= 2 and share
  /// source and target.
  static Relation commutation(Path lhs, Path rhs);

  bool is_zero() const { return kind == Kind::MonomialZero; }
  bool operator==(const Relation&) const = default;
  auto operator<=>(const Relation&) const = default;
};

/// A quiver together with zero and commutation relations, presenting the
/// algebra kQ/I.
class Presentation {
 public:
  Presentation() = default;
  /// Validates every relation path against the quiver.
  Presentation(Quiver quiver, std::vector<Relation> relations);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }

  /// Relations sorted canonically, with duplicates removed.
  Presentation canonical() const;

  bool operator==(const Presentation&) const = default;

 private:
  Quiver quiver_;
  std::vector<Relation> relations_;
};

std::string relation_string(const Quiver& q, const Relation& r, const std::string& sep = "·");

enum class ShapeKind { ALine, ACycle, DynkinD, DynkinE, EuclideanD, EuclideanE, Other };

struct ComponentShape {
  ShapeKind kind = ShapeKind::Other;
  std::vector<std::size_t> members;  // vertex indices, sorted
  std::size_t arrow_count = 0;
  bool acyclic = true;
  /// "A3", "~A2", "D5", "E6", "~D4", "~E8" or "other".
  std::string label;

  bool is_dynkin() const {
    return kind == ShapeKind::ALine || kind == ShapeKind::DynkinD || kind == ShapeKind::DynkinE;
  }
  bool is_euclidean() const {
    return kind == ShapeKind::ACycle || kind == ShapeKind::EuclideanD ||
           kind == ShapeKind::EuclideanE;
  }
};

struct ShapeReport {
  std::vector<ComponentShape> components;
  bool acyclic = true;
};

/// Classifies every connected component of the underlying graph as a line,
/// cycle, Dynkin D/E, Euclidean D/E or other tree/graph.
ShapeReport underlying_shape(const Quiver& q);

}  // namespace nodal
