#pragma once

// Independent reference implementations the test suites pin library results
// against: exhaustive path enumeration, brute-force partition minimization,
// and an RK4 geodesic-shooting solver for the curved model spaces. Kept
// deliberately naive; correctness over speed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "lorentzlen/models.hpp"
#include "lorentzlen/space.hpp"

namespace lls::oracle {

// Longest tau-weighted step chain x -> y by exhaustive DFS over all chains.
// Sums are accumulated left to right, matching the DP accumulation order, so
// agreement can be demanded bitwise. nullopt when y is unreachable.
inline std::optional<double> longest_chain(const SpaceDescription& sp, PointId x, PointId y) {
    std::optional<double> best;
    const std::size_t n = sp.size();

    // explicit DFS: (node, accumulated) pairs
    struct Frame {
        PointId node;
        double acc;
    };
    std::vector<Frame> todo{{x, 0.0}};
    while (!todo.empty()) {
        const Frame f = todo.back();
        todo.pop_back();
        if (f.node == y) {
            if (!best || f.acc > *best) best = f.acc;
            continue;
        }
        for (PointId v = 0; v < n; ++v) {
            if (!sp.step_ok(f.node, v)) continue;
            if (v != y && !sp.le(v, y)) continue;  // prune outside J-(y)
            todo.push_back({v, f.acc + sp.tau_at(f.node, v)});
        }
    }
    if (x == y) best = 0.0;
    return best;
}

// Minimum over all partitions of the chain (subsequences keeping both
// endpoints) of the sum of tau over consecutive partition points.
inline double partition_minimum(const SpaceDescription& sp, const std::vector<PointId>& chain) {
    const std::size_t n = chain.size();
    if (n < 2) return 0.0;
    const std::size_t interior = n - 2;
    if (interior > 20) throw std::runtime_error("partition_minimum: chain too long");
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << interior); ++mask) {
        double sum = 0.0;
        PointId prev = chain.front();
        for (std::size_t i = 0; i < interior; ++i) {
            if ((mask >> i) & 1) {
                sum += sp.tau_at(prev, chain[i + 1]);
                prev = chain[i + 1];
            }
        }
        sum += sp.tau_at(prev, chain.back());
        best = std::min(best, sum);
    }
    return best;
}

// Random causal step chain of at most max_len points starting anywhere.
inline std::vector<PointId> random_chain(const SpaceDescription& sp, std::mt19937_64& rng,
                                         std::size_t max_len) {
    const std::size_t n = sp.size();
    std::uniform_int_distribution<PointId> pick(0, PointId(n - 1));
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<PointId> chain{pick(rng)};
        while (chain.size() < max_len) {
            std::vector<PointId> nexts;
            for (PointId v = 0; v < n; ++v)
                if (sp.step_ok(chain.back(), v)) nexts.push_back(v);
            if (nexts.empty()) break;
            chain.push_back(nexts[std::uniform_int_distribution<std::size_t>(
                0, nexts.size() - 1)(rng)]);
        }
        if (chain.size() >= 2) return chain;
    }
    throw std::runtime_error("random_chain: no chain found");
}

namespace detail {

// Second-order geodesic equations of the curved models in cover coordinates,
// proper-time parameterization. State = (c0, c1, dc0, dc1).
inline std::array<double, 4> geodesic_rhs(const ModelSpace& m, const std::array<double, 4>& s) {
    const double rr = m.r();
    if (m.kind() == ModelKind::DeSitterCover) {
        // ds^2 = -dt^2 + r^2 cosh^2(t/r) dtheta^2
        const double t = s[0], td = s[2], hd = s[3];
        const double a0 = -rr * std::cosh(t / rr) * std::sinh(t / rr) * hd * hd;
        const double a1 = -2.0 * std::tanh(t / rr) / rr * td * hd;
        return {td, hd, a0, a1};
    }
    // AdS cover, state in (sigma, rho): ds^2 = r^2(-cosh^2 rho dsigma^2 + drho^2)
    const double rho = s[1], sd = s[2], rd = s[3];
    const double a0 = -2.0 * std::tanh(rho) * sd * rd;
    const double a1 = -std::cosh(rho) * std::sinh(rho) * sd * sd;
    return {sd, rd, a0, a1};
}

inline std::array<double, 4> rk4_step(const ModelSpace& m, const std::array<double, 4>& s,
                                      double h) {
    auto add = [](const std::array<double, 4>& a, const std::array<double, 4>& b, double w) {
        std::array<double, 4> r;
        for (int i = 0; i < 4; ++i) r[i] = a[i] + w * b[i];
        return r;
    };
    const auto k1 = geodesic_rhs(m, s);
    const auto k2 = geodesic_rhs(m, add(s, k1, h / 2));
    const auto k3 = geodesic_rhs(m, add(s, k2, h / 2));
    const auto k4 = geodesic_rhs(m, add(s, k3, h));
    std::array<double, 4> out;
    for (int i = 0; i < 4; ++i)
        out[i] = s[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    return out;
}

// Shoot a timelike geodesic from p with spatial velocity v; integrate until
// the monotone coordinate (t for dS, sigma for AdS) crosses `stop`. Returns
// (other coordinate at the crossing, elapsed proper time).
inline std::pair<double, double> shoot(const ModelSpace& m, const ModelPoint& p, double v,
                                       double stop) {
    const double rr = m.r();
    std::array<double, 4> s;
    int mono;  // index of the monotone coordinate
    if (m.kind() == ModelKind::DeSitterCover) {
        const double ch = rr * std::cosh(p.c[0] / rr);
        s = {p.c[0], p.c[1], std::sqrt(1.0 + ch * ch * v * v), v};
        mono = 0;
    } else {
        const double sig = p.c[0] / rr, rho = p.c[1];
        const double sd = std::sqrt(1.0 / (rr * rr) + v * v) / std::cosh(rho);
        s = {sig, rho, sd, v};
        mono = 0;
    }
    double tau = 0.0;
    double h = 1e-3;
    for (int it = 0; it < 4000000; ++it) {
        const auto nxt = rk4_step(m, s, h);
        if (nxt[mono] >= stop) {
            if (h < 1e-12) {
                // final linear interpolation inside one tiny step
                const double f = (stop - s[mono]) / (nxt[mono] - s[mono]);
                return {s[1 - mono] + f * (nxt[1 - mono] - s[1 - mono]), tau + f * h};
            }
            h /= 2;  // refine toward the crossing
            continue;
        }
        s = nxt;
        tau += h;
        if (tau > 200.0) throw std::runtime_error("shoot: runaway geodesic");
    }
    throw std::runtime_error("shoot: no crossing");
}

}  // namespace detail

// Time separation of a chronological model pair by geodesic shooting:
// bisect the initial spatial velocity until the geodesic hits q, then read
// off the elapsed proper time. Independent of the closed-form tau.
inline double tau_by_shooting(const ModelSpace& m, const ModelPoint& p, const ModelPoint& q) {
    if (m.kind() == ModelKind::Minkowski) {
        const double dt = q.c[0] - p.c[0], dx = q.c[1] - p.c[1];
        return std::sqrt(dt * dt - dx * dx);
    }
    double stop, target;
    if (m.kind() == ModelKind::DeSitterCover) {
        stop = q.c[0];
        target = q.c[1];
    } else {
        stop = q.c[0] / m.r();
        target = q.c[1];
    }
    // hit(v) = transverse coordinate at the crossing; increasing in v
    auto hit = [&](double v) { return detail::shoot(m, p, v, stop).first; };
    double lo = -1.0, hi = 1.0;
    for (int it = 0; it < 80 && hit(lo) > target; ++it) lo *= 2;
    for (int it = 0; it < 80 && hit(hi) < target; ++it) hi *= 2;
    if (hit(lo) > target || hit(hi) < target)
        throw std::runtime_error("tau_by_shooting: bracket failed");
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (hit(mid) < target ? lo : hi) = mid;
    }
    return detail::shoot(m, p, 0.5 * (lo + hi), stop).second;
}

}  // namespace lls::oracle
