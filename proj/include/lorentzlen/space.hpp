#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lorentzlen/bitmatrix.hpp"

namespace lls {

using PointId = std::uint32_t;

// One localising neighbourhood: member point set with a local time separation
// matrix omega (row-major over the member list).
struct AtlasChart {
    std::vector<PointId> members;
    std::vector<double> omega;  // members.size()^2, row-major
    // Members within this d-distance of the localised point are the chart's
    // core; members beyond it are fringe witnesses (e.g. one extra step past
    // the core) and are exempt from the interior clauses. 0 = all core.
    double core_radius = 0.0;

    double omega_at(std::size_t a, std::size_t b) const {
        return omega[a * members.size() + b];
    }
    // Local index of a point, or npos.
    static constexpr std::size_t npos = std::size_t(-1);
    std::size_t local_index(PointId p) const {
        for (std::size_t i = 0; i < members.size(); ++i)
            if (members[i] == p) return i;
        return npos;
    }
};

struct LocalisingAtlas {
    std::vector<AtlasChart> charts;  // chart i localises point i
    bool regular = false;            // regularity claimed by the builder
};

// A Lorentzian pre-length space candidate, fully materialized: carrier points
// (optionally with coordinates), metric d, relations, tau, a neighbourhood
// basis as the topology surrogate, and an optional localising atlas.
//
// Immutable after construction; all checkers are pure functions over it.
struct SpaceDescription {
    std::vector<std::vector<double>> coords;  // per-point, may be empty
    std::vector<double> dist;                 // n*n metric d, row-major
    BitMatrix chron;                          // <<
    BitMatrix causal;                         // <=
    std::vector<double> tau;                  // n*n, +inf allowed

    // Per point: neighbourhood basis, coarse to fine.
    std::vector<std::vector<std::vector<PointId>>> nbhd_basis;
    std::optional<LocalisingAtlas> atlas;

    bool ambient_complete = false;
    // Points on the artificial sample cut, where the underlying space
    // continues past the sampled window. Curves stalling here are sampling
    // artifacts, not witnesses of genuine holes.
    std::set<PointId> ambient_frontier;

    double resolution = 0.0;     // grid spacing h (0 for abstract spaces)
    double step_radius = 0.0;    // max d-step per chain edge (0 = unrestricted)
    double tau_lipschitz = 0.0;  // declared Lipschitz surrogate constant of tau

    // Steps inside the radius that are nevertheless forbidden (segments
    // crossing removed carrier regions at grid scale).
    std::set<std::pair<PointId, PointId>> blocked_steps;
    // Steps allowed regardless of the radius (glued identifications whose
    // metric distance exceeds the step radius).
    std::set<std::pair<PointId, PointId>> extra_steps;

    // Pairs on which tau = T convergence is claimed at this resolution
    // (directions resolvable by the step rule). Empty matrix = all pairs.
    BitMatrix resolved;

    std::size_t size() const { return causal.size(); }

    double d(PointId i, PointId j) const { return dist[std::size_t(i) * size() + j]; }
    double tau_at(PointId i, PointId j) const { return tau[std::size_t(i) * size() + j]; }
    bool le(PointId i, PointId j) const { return causal.get(i, j); }
    bool ll(PointId i, PointId j) const { return chron.get(i, j); }
    bool lt(PointId i, PointId j) const { return i != j && causal.get(i, j); }

    bool is_resolved(PointId i, PointId j) const {
        return resolved.size() == 0 || resolved.get(i, j);
    }

    // Admissible chain step u -> v.
    bool step_ok(PointId u, PointId v) const {
        if (u == v || !causal.get(u, v)) return false;
        if (!extra_steps.empty() && extra_steps.count({u, v})) return true;
        if (step_radius > 0 && d(u, v) > step_radius * (1 + 1e-12)) return false;
        if (!blocked_steps.empty() && blocked_steps.count({u, v})) return false;
        return true;
    }

    // Lazily computed closures of the step graph (reachability by chains).
    const BitMatrix& step_closure() const;
    const BitMatrix& step_closure_rev() const;
    const BitMatrix& timelike_step_closure() const;

  private:
    mutable std::optional<BitMatrix> step_closure_;
    mutable std::optional<BitMatrix> step_closure_rev_;
    mutable std::optional<BitMatrix> timelike_step_closure_;
};

enum class Verdict { Pass, Fail, NotCheckable };

struct AxiomCheck {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::vector<PointId> witness;  // concrete violating tuple, if any
    std::string detail;
    bool advisory = false;  // advisory checks do not affect the overall verdict
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.advisory && c.verdict == Verdict::Fail) return false;
        return true;
    }
    const AxiomCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

}  // namespace lls
