#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "nodal/rep.hpp"

namespace nodal {

inline constexpr std::size_t kDefaultEnumerationBudget = 16;

/// Dimension vectors with 1 <= total <= max_total, ordered by total and then
/// lexicographically.
std::vector<std::vector<std::size_t>> dimension_vectors(std::size_t vertices, std::size_t max_total);

/// Every representation (every matrix tuple satisfying the relations) with
/// total dimension in [1, max_dim]. Throws BudgetExceeded if some dimension
/// vector has more than `budget` matrix entries summed over all arrows.
std::vector<Representation> enumerate_representations(std::shared_ptr<const Presentation> pres,
                                                      const Field& field, std::size_t max_dim,
                                                      std::size_t budget = kDefaultEnumerationBudget);

struct IndecomposableClass {
  Representation representative;
  std::size_t count = 0;  // enumerated tuples falling into this class
};

struct EnumerationResult {
  std::vector<IndecomposableClass> classes;
  std::size_t tuples = 0;  // tuples satisfying the relations that were examined
};

/// Isomorphism classes of indecomposable representations with total
/// dimension <= max_dim, representatives in enumeration order.
///
/// For each dimension vector the arrow with the most matrix entries is fixed to
/// orbit representatives under the base-change groups at its endpoints (rank
/// normal forms, or rational canonical forms for a loop); every other arrow
/// runs over all matrices. Every isomorphism class is still met. The budget
/// bounds the number of freely enumerated matrix entries per dimension
/// vector; exceeding it throws BudgetExceeded.
EnumerationResult enumerate_indecomposables(std::shared_ptr<const Presentation> pres, const Field& field,
                                            std::size_t max_dim,
                                            std::size_t budget = kDefaultEnumerationBudget);

/// Representatives of the similarity classes of n x n matrices over a finite
/// field, as block-diagonal companion matrices of invariant factor chains.
std::vector<Matrix> conjugacy_representatives(const Field& field, std::size_t n);

/// The matrices [[I_r, 0], [0, 0]] of shape rows x cols, r = 0..min.
std::vector<Matrix> rank_normal_forms(const Field& field, std::size_t rows, std::size_t cols);

}  // namespace nodal
