#pragma once

#include <vector>

#include "lorentzlen/space.hpp"

namespace lls {

// Causal-space axioms: transitivity of both relations, reflexivity of <=,
// << contained in <=. Witness = lexicographically smallest violating tuple.
AxiomReport check_causal_space(const SpaceDescription& space);

// Pre-length axioms on top: tau null/positivity conditions, reverse triangle
// inequality over all ordered triples, and an epsilon-surrogate of lower
// semicontinuity (advisory).
AxiomReport check_prelength(const SpaceDescription& space);

std::vector<PointId> chronological_future(const SpaceDescription& space, PointId x);
std::vector<PointId> chronological_past(const SpaceDescription& space, PointId x);
std::vector<PointId> causal_future(const SpaceDescription& space, PointId x);
std::vector<PointId> causal_past(const SpaceDescription& space, PointId x);

// Chronology, causality, and a strong-causality surrogate over the
// neighbourhood basis.
AxiomReport check_causality_ladder(const SpaceDescription& space);

// Epsilon-closedness of <= over the neighbourhood basis scales.
AxiomReport check_locally_causally_closed(const SpaceDescription& space);

// Every x << y (x < y) pair admits a timelike (causal) chain in the step
// model.
AxiomReport check_causally_path_connected(const SpaceDescription& space);

// Localisability (i)-(iv) against the supplied atlas.
AxiomReport check_localisable(const SpaceDescription& space);

}  // namespace lls
