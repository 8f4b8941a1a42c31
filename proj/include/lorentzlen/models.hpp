#pragma once

#include <array>
#include <string>

#include "lorentzlen/extreal.hpp"

namespace lls {

enum class ModelKind { Minkowski, DeSitterCover, AntiDeSitterCover };

// Two-dimensional Lorentzian model space of constant curvature K.
//   K = 0        flat plane, coordinates (t, x)
//   K = 1/r^2    de Sitter cover, coordinates (t, theta)
//   K = -1/r^2   anti-de Sitter cover, coordinates (sigma, rho),
//                cover time sigma unwrapped.
struct ModelSpace {
    double K = 0.0;

    ModelKind kind() const {
        if (K > 0) return ModelKind::DeSitterCover;
        if (K < 0) return ModelKind::AntiDeSitterCover;
        return ModelKind::Minkowski;
    }
    double r() const;  // K = +-1/r^2; infinity for K = 0
    std::string kind_name() const;
};

// Point in the model's cover coordinates.
struct ModelPoint {
    std::array<double, 2> c{0.0, 0.0};
};

// Causality in cover coordinates: q in the causal (chronological) future of p.
bool model_causal(const ModelSpace& m, const ModelPoint& p, const ModelPoint& q);
bool model_timelike(const ModelSpace& m, const ModelPoint& p, const ModelPoint& q);

// Time separation. Zero on non-causal pairs. For the anti-de Sitter cover,
// pairs past the first winding (cover separation >= pi r) return +infinity,
// consistent with the size-bound regime c < pi r.
ExtReal tau_model(const ModelSpace& m, const ModelPoint& p, const ModelPoint& q);

// Embedding coordinates (flat: (t,x,0); dS: R^{2,1} hyperboloid;
// AdS: R^{2,2}-style pseudohyperboloid with the cover angle recorded).
std::array<double, 3> model_embed(const ModelSpace& m, const ModelPoint& p);

struct TriangleSides {
    double a = 0, b = 0, c = 0;
};

// Timelike size bounds for K: given c >= a+b, if c == a+b then c < pi/sqrt(K)
// (infinite for K <= 0), otherwise if K < 0 then c < pi/sqrt(-K).
// Throws when c < a+b (not an admissible triple).
bool check_size_bounds(const TriangleSides& sides, double K);

// Realized comparison triangle, canonically placed: x at the coordinate
// origin, z on the future time axis at separation c, y with nonnegative
// spatial coordinate.
struct ComparisonTriangle {
    ModelSpace model;
    TriangleSides sides;
    ModelPoint x, y, z;
};

ComparisonTriangle realize_triangle(const ModelSpace& model, const TriangleSides& sides);

enum class TriangleSide { XY, YZ, XZ };

// Point at tau-distance s * (side length) from the side's past vertex,
// s in [0,1]. Throws on null (zero length) sides.
ModelPoint corresponding_point(const ComparisonTriangle& tri, TriangleSide side, double s);

}  // namespace lls
