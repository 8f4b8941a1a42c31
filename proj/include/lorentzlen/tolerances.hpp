#pragma once

#include <algorithm>
#include <cmath>

namespace lls {

// Global comparison tolerances for real quantities. Closed-form model values
// are accurate to machine precision; sampled constructions are not and use
// resolution-scaled slack on top of these. Mutable so the CLI can apply
// environment overrides at startup; defaults are the tested values.
inline double kAbsTol = 1e-9;
inline double kRelTol = 1e-6;

inline bool approx_eq(double a, double b, double abs_tol = kAbsTol,
                      double rel_tol = kRelTol) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    const double diff = std::fabs(a - b);
    return diff <= abs_tol + rel_tol * std::max(std::fabs(a), std::fabs(b));
}

// a >= b up to tolerance.
inline bool approx_ge(double a, double b, double abs_tol = kAbsTol,
                      double rel_tol = kRelTol) {
    if (a >= b) return true;
    return approx_eq(a, b, abs_tol, rel_tol);
}

}  // namespace lls
