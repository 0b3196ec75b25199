#pragma once

#include <memory>
#include <string>

#include "nodal/construct.hpp"
#include "nodal/rep.hpp"

namespace nodal {

// Functors between representations of an algebra B and of the algebra A
// obtained from B by one gluing or one blow-up. A `target` presentation may
// be passed to share one instance across many calls; it must equal the
// presentation the operation produces.

/// The gluing functor: FM(ij) = M(i) + M(j) with M(i) as the first block;
/// arrows touching i or j are embedded block-wise. Requires no loops at i, j.
Representation functor_F_glue(const Representation& m, const GluePair& pair,
                              std::shared_ptr<const Presentation> target = nullptr);

/// The functor for an inessential gluing. The blocks are ordered so that the
/// vertex without incoming arrows comes first. Throws Mismatch unless the
/// gluing is inessential in m's quiver.
Representation functor_F_inessential(const Representation& m, const GluePair& pair,
                                     std::shared_ptr<const Presentation> target = nullptr);

/// Inverse-direction functor for an inessential gluing. With i the vertex
/// without incoming arrows and j the one without outgoing arrows,
/// GN(i) = N(ij) / (intersection of the kernels of arrows leaving (ij)) and
/// GN(j) = sum of the images of arrows entering (ij). Quotients and images use
/// the reduced-row-echelon basis conventions of linalg.
Representation functor_G_inessential(const Representation& n, std::shared_ptr<const Presentation> base,
                                     const GluePair& pair);

/// The blow-up functor: FM(v') = FM(v'') = M(v), both copies of an arrow get
/// the original matrix.
Representation functor_F_blow(const Representation& m, const std::string& vertex,
                              std::shared_ptr<const Presentation> target = nullptr);

/// Left inverse of functor_F_blow: GN(v) = N(v').
Representation functor_G_blow(const Representation& n, std::shared_ptr<const Presentation> base,
                              const std::string& vertex);

/// Ordering (i, j) of the pair with no arrow ending at i and none starting at
/// j, if one exists.
std::optional<std::pair<std::string, std::string>> inessential_ordering(const Quiver& q,
                                                                        const GluePair& pair);

}  // namespace nodal
