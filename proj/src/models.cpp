#include "lorentzlen/models.hpp"

#include <cmath>
#include <stdexcept>

#include "lorentzlen/tolerances.hpp"

namespace lls {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Gudermannian: conformal null-coordinate compactification of the cover time
// (dS) or radius (AdS).
double gd(double x) { return 2.0 * std::atan(std::tanh(0.5 * x)); }

double clamp(double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); }

// Minkowski inner product of embedding vectors; signature depends on model.
double inner(const ModelSpace& m, const std::array<double, 3>& P,
             const std::array<double, 3>& Q) {
    switch (m.kind()) {
        case ModelKind::Minkowski:
            return -P[0] * Q[0] + P[1] * Q[1] + P[2] * Q[2];
        case ModelKind::DeSitterCover:  // R^{2,1}: (-,+,+)
            return -P[0] * Q[0] + P[1] * Q[1] + P[2] * Q[2];
        case ModelKind::AntiDeSitterCover:  // (-,-,+)
            return -P[0] * Q[0] - P[1] * Q[1] + P[2] * Q[2];
    }
    return 0;
}

}  // namespace

double ModelSpace::r() const {
    if (K == 0) return std::numeric_limits<double>::infinity();
    return 1.0 / std::sqrt(std::fabs(K));
}

std::string ModelSpace::kind_name() const {
    switch (kind()) {
        case ModelKind::Minkowski: return "minkowski";
        case ModelKind::DeSitterCover: return "de_sitter_cover";
        case ModelKind::AntiDeSitterCover: return "anti_de_sitter_cover";
    }
    return "";
}

bool model_causal(const ModelSpace& m, const ModelPoint& p, const ModelPoint& q) {
    const double rr = m.r();
    switch (m.kind()) {
        case ModelKind::Minkowski: {
            const double dt = q.c[0] - p.c[0], dx = q.c[1] - p.c[1];
            return dt >= std::fabs(dx) - kAbsTol && dt >= 0;
        }
        case ModelKind::DeSitterCover: {
            const double deta = gd(q.c[0] / rr) - gd(p.c[0] / rr);
            const double dth = q.c[1] - p.c[1];
            return deta >= std::fabs(dth) - kAbsTol && deta >= 0;
        }
        case ModelKind::AntiDeSitterCover: {
            const double dsig = (q.c[0] - p.c[0]) / rr;
            const double dchi = gd(q.c[1]) - gd(p.c[1]);
            return dsig >= std::fabs(dchi) - kAbsTol && dsig >= 0;
        }
    }
    return false;
}

bool model_timelike(const ModelSpace& m, const ModelPoint& p, const ModelPoint& q) {
    return model_causal(m, p, q) && tau_model(m, p, q) > ExtReal(0.0);
}

std::array<double, 3> model_embed(const ModelSpace& m, const ModelPoint& p) {
    const double rr = m.r();
    switch (m.kind()) {
        case ModelKind::Minkowski:
            return {p.c[0], p.c[1], 0.0};
        case ModelKind::DeSitterCover: {
            const double t = p.c[0], th = p.c[1];
            return {rr * std::sinh(t / rr), rr * std::cosh(t / rr) * std::cos(th),
                    rr * std::cosh(t / rr) * std::sin(th)};
        }
        case ModelKind::AntiDeSitterCover: {
            const double sg = p.c[0] / rr, rho = p.c[1];
            return {rr * std::cosh(rho) * std::cos(sg), rr * std::cosh(rho) * std::sin(sg),
                    rr * std::sinh(rho)};
        }
    }
    return {};
}

ExtReal tau_model(const ModelSpace& m, const ModelPoint& p, const ModelPoint& q) {
    if (!model_causal(m, p, q)) return ExtReal(0.0);
    const double rr = m.r();
    switch (m.kind()) {
        case ModelKind::Minkowski: {
            const double dt = q.c[0] - p.c[0], dx = q.c[1] - p.c[1];
            const double s2 = dt * dt - dx * dx;
            return ExtReal(s2 > 0 ? std::sqrt(s2) : 0.0);
        }
        case ModelKind::DeSitterCover: {
            const double ip = inner(m, model_embed(m, p), model_embed(m, q)) / (rr * rr);
            if (ip <= 1.0) return ExtReal(0.0);  // null up to rounding
            return ExtReal(rr * std::acosh(ip));
        }
        case ModelKind::AntiDeSitterCover: {
            const double dsig = (q.c[0] - p.c[0]) / rr;
            // Past the first refocusing the supremum of curve lengths is
            // unbounded: the finite-diameter regime is dsig < pi.
            if (dsig >= kPi - kAbsTol) return ExtReal::infinity();
            const double arg = -inner(m, model_embed(m, p), model_embed(m, q)) / (rr * rr);
            if (arg <= -1.0) return ExtReal::infinity();
            if (arg >= 1.0) return ExtReal(0.0);
            return ExtReal(rr * std::acos(arg));
        }
    }
    return ExtReal(0.0);
}

bool check_size_bounds(const TriangleSides& s, double K) {
    if (s.a < 0 || s.b < 0 || s.c < 0) throw std::invalid_argument("negative side length");
    if (s.c < s.a + s.b - kAbsTol)
        throw std::invalid_argument("sides violate the reverse triangle inequality");
    const double diam = K > 0 ? kPi / std::sqrt(K) : std::numeric_limits<double>::infinity();
    if (std::fabs(s.c - (s.a + s.b)) <= kAbsTol && !(s.c < diam - kAbsTol)) return false;
    if (K < 0 && !(s.c < kPi / std::sqrt(-K) - kAbsTol)) return false;
    return true;
}

namespace {

// Solve tau(x, y) = a, tau(y, z) = b by damped Newton with a numeric
// Jacobian, starting from the flat solution mapped to cover coordinates.
ModelPoint solve_apex(const ModelSpace& m, const ModelPoint& x, const ModelPoint& z,
                      double a, double b) {
    const double c = tau_model(m, x, z).value();
    const double rr = m.r();
    // The two side conditions are linear in the embedding: with x at the
    // origin and z on the time axis, each fixes one inner product with the
    // unknown apex Y, and the quadric constraint gives the spatial component.
    ModelPoint y;
    if (m.kind() == ModelKind::DeSitterCover) {
        const double v = rr * std::cosh(a / rr);
        const double u =
            rr * (std::cosh(c / rr) * std::cosh(a / rr) - std::cosh(b / rr)) / std::sinh(c / rr);
        const double w = std::sqrt(std::max(0.0, rr * rr + u * u - v * v));
        y.c = {rr * std::asinh(u / rr), std::atan2(w, v)};
    } else {
        const double u = rr * std::cos(a / rr);
        const double v =
            rr * (std::cos(b / rr) - std::cos(c / rr) * std::cos(a / rr)) / std::sin(c / rr);
        const double w = std::sqrt(std::max(0.0, u * u + v * v - rr * rr));
        y.c = {std::atan2(v, u) * rr, std::asinh(w / rr)};
    }
    const double f1 = tau_model(m, x, y).value() - a;
    const double f2 = tau_model(m, y, z).value() - b;
    if (std::fabs(f1) > 1e-9 || std::fabs(f2) > 1e-9)
        throw std::runtime_error("apex solve did not converge");
    return y;
}

}  // namespace

ComparisonTriangle realize_triangle(const ModelSpace& model, const TriangleSides& sides) {
    if (!(sides.a > 0 && sides.b > 0 && sides.c > 0))
        throw std::invalid_argument("realize_triangle: sides must be timelike");
    if (!check_size_bounds(sides, model.K))
        throw std::invalid_argument("realize_triangle: sides violate the size bounds");
    ComparisonTriangle tri;
    tri.model = model;
    tri.sides = sides;
    tri.x = ModelPoint{};
    // z on the future time axis at separation c: on the axis tau is the time
    // coordinate difference in both curved models.
    tri.z = ModelPoint{{sides.c, 0.0}};
    if (model.kind() == ModelKind::Minkowski) {
        const double c = sides.c, a = sides.a, b = sides.b;
        const double t = (c * c + a * a - b * b) / (2 * c);
        tri.y = ModelPoint{{t, std::sqrt(std::max(0.0, t * t - a * a))}};
    } else {
        tri.y = solve_apex(model, tri.x, tri.z, sides.a, sides.b);
    }
    return tri;
}

namespace {

// Point at arc-length fraction u/L along the maximizing geodesic from P to Q,
// via trigonometric interpolation in the embedding.
ModelPoint geodesic_point(const ModelSpace& m, const ModelPoint& p, const ModelPoint& q,
                          double s) {
    const double L = tau_model(m, p, q).value();
    if (m.kind() == ModelKind::Minkowski) {
        return ModelPoint{{p.c[0] + s * (q.c[0] - p.c[0]), p.c[1] + s * (q.c[1] - p.c[1])}};
    }
    const double rr = m.r();
    const auto P = model_embed(m, p);
    const auto Q = model_embed(m, q);
    const double u = s * L / rr, v = (1 - s) * L / rr;
    std::array<double, 3> X{};
    if (m.kind() == ModelKind::DeSitterCover) {
        const double den = std::sinh(L / rr);
        for (int i = 0; i < 3; ++i) X[i] = (std::sinh(v) * P[i] + std::sinh(u) * Q[i]) / den;
        const double t = rr * std::asinh(X[0] / rr);
        const double th = std::atan2(X[2], X[1]);
        return ModelPoint{{t, th}};
    }
    const double den = std::sin(L / rr);
    for (int i = 0; i < 3; ++i) X[i] = (std::sin(v) * P[i] + std::sin(u) * Q[i]) / den;
    const double sg = std::atan2(X[1], X[0]);
    const double rho = std::asinh(X[2] / rr);
    return ModelPoint{{rr * sg, rho}};
}

}  // namespace

ModelPoint corresponding_point(const ComparisonTriangle& tri, TriangleSide side, double s) {
    if (s < 0 || s > 1) throw std::invalid_argument("corresponding_point: s outside [0,1]");
    const ModelPoint *p = nullptr, *q = nullptr;
    switch (side) {
        case TriangleSide::XY: p = &tri.x; q = &tri.y; break;
        case TriangleSide::YZ: p = &tri.y; q = &tri.z; break;
        case TriangleSide::XZ: p = &tri.x; q = &tri.z; break;
    }
    const double len = tau_model(tri.model, *p, *q).value();
    if (!(len > 0)) throw std::invalid_argument("corresponding_point: null side");
    return geodesic_point(tri.model, *p, *q, s);
}

}  // namespace lls
