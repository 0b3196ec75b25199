#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nodal/quiver.hpp"

namespace nodal {

/// Unordered pair of base vertices to be glued. The stored order is the input
/// order and only affects the merged vertex id.
struct GluePair {
  std::string first;
  std::string second;

  bool contains(const std::string& v) const { return first == v || second == v; }
  bool operator==(const GluePair&) const = default;
};

/// A hereditary quiver plus the symmetric relation describing which vertices
/// are glued and which are blown up.
struct NodalDatum {
  Quiver base;
  std::vector<GluePair> glue_pairs;
  std::vector<std::string> blow_vertices;

  bool operator==(const NodalDatum&) const = default;
};

struct Violation {
  std::string message;
  std::vector<std::string> vertices;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks that the base is acyclic, every named vertex exists, glue pairs
/// join distinct vertices, no vertex takes part in two operations and no
/// blown vertex carries a loop.
ValidationReport validate(const NodalDatum& d);

/// Where each base vertex ends up: one id for untouched and glued vertices,
/// two ids (v', v'') for blown ones.
struct GluedVertexMap {
  std::map<std::string, std::vector<std::string>> image;
};

struct BuiltPresentation {
  Presentation presentation;
  GluedVertexMap vertex_map;
};

std::string merged_vertex_id(const std::string& i, const std::string& j);
std::string prime_id(const std::string& id);
std::string double_prime_id(const std::string& id);

/// Identifies vertices i and j and adds a zero relation a·b for every arrow a
/// starting at i (resp. j) and b ending at j (resp. i). Existing relations are
/// kept.
Presentation glue_vertices(const Presentation& p, const std::string& i, const std::string& j);

/// Splits v into v' and v'', doubling every incident arrow, doubling the
/// relations that mention them, and adding a'·b' = a''·b'' for every a
/// leaving v and b entering v. Throws InvalidDatum if v carries a loop.
Presentation blow_up_vertex(const Presentation& p, const std::string& v);

/// Presentation of the nodal algebra described by d. Blow-ups are applied
/// first and gluings afterwards, which makes the result independent of the
/// order in which the operations are listed. Throws InvalidDatum.
BuiltPresentation build_presentation(const NodalDatum& d);

inline constexpr std::size_t kDefaultPathLengthCap = 64;

/// Dimension of kQ/I over the ground field. Enumerates the paths that avoid
/// every zero relation and counts their classes under the identifications
/// u·lhs·w = u·rhs·w. Throws NonNilpotentCycle if a surviving path exceeds
/// `length_cap`.
std::size_t dimension(const Presentation& p, std::size_t length_cap = kDefaultPathLengthCap);

/// The paths of p that contain no zero relation as a subword, empty paths
/// included, in order of length. Throws NonNilpotentCycle like dimension().
std::vector<Path> nonzero_paths(const Presentation& p,
                                std::size_t length_cap = kDefaultPathLengthCap);

}  // namespace nodal
