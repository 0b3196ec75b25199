#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "nodal/rep.hpp"

namespace nodal {

/// m with every summand isomorphic to a simple at one of `vertices`
/// removed.
Representation without_simple_summands(const Representation& m, const std::vector<std::size_t>& vertices);

/// Uniformly random matrices of the given shape, redrawn until the relations
/// hold; after `attempts` failures the zero maps are used.
Representation random_representation(std::shared_ptr<const Presentation> pres, const Field& field,
                                     std::vector<std::size_t> dims, std::mt19937_64& rng,
                                     std::size_t attempts = 256);

struct SelftestReport {
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Randomized checks of the gluing and blow-up functors over F2 on three
/// small data (an inessential gluing, an essential gluing and a blow-up):
/// images satisfy the relations, G∘F recovers M for the inessential gluing
/// and the blow-up, and F reflects isomorphism away from simple summands at
/// the operated vertices.
SelftestReport functor_selftest(std::size_t trials, std::uint64_t seed);

}  // namespace nodal
