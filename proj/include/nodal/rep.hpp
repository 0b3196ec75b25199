#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nodal/field.hpp"
#include "nodal/matrix.hpp"
#include "nodal/quiver.hpp"

namespace nodal {

/// Finite-dimensional representation of a presented algebra: a space of
/// dimension dims[v] at each vertex and a dims[t] x dims[s] matrix for each
/// arrow s -> t. Vertices and arrows are indexed as in the quiver.
class Representation {
 public:
  /// Throws ShapeMismatch if a matrix disagrees with the dimension vector.
  Representation(std::shared_ptr<const Presentation> pres, Field field, std::vector<std::size_t> dims,
                 std::vector<Matrix> mats);

  static Representation zero(std::shared_ptr<const Presentation> pres, Field field);
  /// The simple representation at vertex v.
  static Representation simple(std::shared_ptr<const Presentation> pres, Field field, std::size_t v);

  const Presentation& presentation() const { return *pres_; }
  const std::shared_ptr<const Presentation>& presentation_ptr() const { return pres_; }
  const Field& field() const { return field_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<Matrix>& mats() const { return mats_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  const Matrix& mat(std::size_t a) const { return mats_.at(a); }
  std::size_t total_dim() const;

  /// Matrix of a path, products taken right to left along the written word.
  Matrix evaluate(const Path& p) const;

  bool same_algebra(const Representation& other) const;

  bool operator==(const Representation& other) const {
    return same_algebra(other) && field_ == other.field_ && dims_ == other.dims_ && mats_ == other.mats_;
  }

 private:
  std::shared_ptr<const Presentation> pres_;
  Field field_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> mats_;
};

struct RelationCheck {
  bool ok = true;
  std::optional<std::size_t> failed;  // index into presentation().relations()
  std::string message;
};

RelationCheck check_relations(const Representation& m);

/// A morphism of representations: one linear map per vertex.
struct Morphism {
  std::vector<Matrix> maps;
};

struct HomSpace {
  std::vector<Morphism> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Basis of Hom(m, n) from the exact solution of the intertwining equations
/// f_t m(a) = n(a) f_s. Throws Mismatch unless both live over the same
/// algebra and field.
HomSpace hom_space(const Representation& m, const Representation& n);

/// Largest number of elements any exhaustive search below may visit.
inline constexpr std::uint64_t kSearchCap = std::uint64_t{1} << 20;

/// An endomorphism that is neither nilpotent nor invertible, if any. Such an
/// element splits m by Fitting's lemma; none exists iff End(m) is local.
/// Throws SearchSpaceTooLarge when the decision would need more than
/// kSearchCap elements of End(m).
std::optional<Morphism> splitting_endomorphism(const Representation& m);

/// True iff End(m) has no idempotents besides 0 and 1. Throws InputError for
/// the zero representation and SearchSpaceTooLarge as above.
bool is_indecomposable(const Representation& m);

/// Decision by a Hom basis element being invertible; only valid when both
/// arguments are known to be indecomposable.
bool isomorphic_indecomposables(const Representation& m, const Representation& n);

/// Exact isomorphism test. Exhausts Hom(m, n) when it has at most kSearchCap
/// elements, otherwise compares Krull-Schmidt decompositions.
bool is_isomorphic(const Representation& m, const Representation& n);

Representation direct_sum(const Representation& m, const Representation& n);

/// Indecomposable summands of m, split off by repeated Fitting
/// decompositions. Zero representations decompose into nothing.
std::vector<Representation> decompose(const Representation& m);

/// Isomorphism invariants used to bucket candidates before exact tests:
/// dimension vector, ranks of arrows and of composable arrow pairs.
std::vector<std::int64_t> iso_signature(const Representation& m);

/// Collects representations into isomorphism classes.
class IsoClassifier {
 public:
  /// Class index of m, creating a new class when m matches none. Pass
  /// `indecomposable = true` only when m is known to be indecomposable; this
  /// enables the basis-element test against other indecomposable classes.
  std::size_t classify(const Representation& m, bool indecomposable = false);

  std::size_t size() const { return reps_.size(); }
  const Representation& representative(std::size_t k) const { return reps_.at(k); }
  std::size_t count(std::size_t k) const { return counts_.at(k); }

 private:
  std::vector<Representation> reps_;
  std::vector<bool> indecomposable_;
  std::vector<std::size_t> counts_;
  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> buckets_;
};

}  // namespace nodal
