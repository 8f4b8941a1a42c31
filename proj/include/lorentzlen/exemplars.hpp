#pragma once

#include <cstdint>
#include <string>

#include "lorentzlen/space.hpp"

namespace lls {

// Named example spaces.
//   minkowski_patch    flat rectangle grid
//   model_patch        grid in a constant-curvature model (needs K)
//   fan_space          flat plane glued to a ray along which curves branch
//   punctured_patch    flat grid with the origin sample removed
//   slit_patch         flat grid with a spacelike slit removed
//   half_space_patch   flat grid cut at t < 0, top row interior
//   toy_dag            small hand-built causal set with a branching geodesic
struct ExemplarSpec {
    std::string name = "minkowski_patch";
    double extent = 2.0;       // half-width of the coordinate box
    double resolution = 0.25;  // grid step h
    double K = 0.0;            // model_patch only
};

SpaceDescription build_exemplar(const ExemplarSpec& spec);

// Poisson sprinkling into a coordinate box of a model space, seeded for
// reproducibility.
struct SprinklingSpec {
    double extent = 1.0;
    double density = 50.0;  // expected points per unit coordinate area
    double K = 0.0;
    std::uint64_t seed = 1;
};

SpaceDescription sprinkle(const SprinklingSpec& spec);

}  // namespace lls
