#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lorentzlen/extreal.hpp"
#include "lorentzlen/space.hpp"

namespace lls {

// Finite parameterized chain representing a future-directed causal curve.
struct CausalCurve {
    std::vector<PointId> points;
    std::vector<double> params;  // strictly increasing, same length as points
    bool open_start = false;
    bool open_end = false;

    static CausalCurve from_points(std::vector<PointId> pts, bool open_start = false,
                                   bool open_end = false);
};

enum class CurveClass { Causal, Timelike, Null, Invalid };

struct CurveVerdict {
    CurveClass cls = CurveClass::Invalid;
    // First violating index pair for Invalid.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::string reason;
};

CurveVerdict classify_curve(const SpaceDescription& space, const CausalCurve& curve);

struct LengthResult {
    ExtReal value;
    std::vector<std::size_t> partition_used;
    bool converged = true;
};

// tau-length of a chain: the sum over consecutive pairs, which is the infimum
// over partitions by the reverse triangle inequality.
LengthResult tau_length(const SpaceDescription& space, const CausalCurve& curve);

// Induced length functional T(x,y): supremum of tau-lengths over causal step
// chains from x to y, by longest-path DP over the causal DAG restricted to
// J+(x) n J-(y). Returns 0 when no chain exists. Throws if the restricted
// relation has a cycle.
ExtReal compute_T(const SpaceDescription& space, PointId x, PointId y);

// tau == T on all resolved pairs, with resolution-scaled tolerance.
AxiomReport check_length_space(const SpaceDescription& space);

// Longest-chain values from x to every point (single-source form of
// compute_T); -1 marks unreachable.
std::vector<double> longest_values_from(const SpaceDescription& space, PointId x);

// A chain realizing compute_T(x,y); ties broken lexicographically by point
// index. Throws if x is not <= y or no chain exists.
CausalCurve find_maximal_curve(const SpaceDescription& space, PointId x, PointId y);

struct GeodesicVerdict {
    bool is_geodesic = false;
    bool checkable = true;
    // Failing window: parameter index, window endpoints, and a strictly
    // longer witness chain between the window endpoints.
    struct Window {
        std::size_t index;
        std::size_t c, d;
        std::vector<PointId> witness_chain;
        double window_length = 0;
        double witness_length = 0;
    };
    std::optional<Window> failing_window;
    std::string detail;
};

// Locally maximal in atlas neighbourhoods: for every index there is a chart
// and a window realizing the chart's local time separation.
GeodesicVerdict is_geodesic(const SpaceDescription& space, const CausalCurve& curve);

struct ExtendResult {
    enum class Status { Extended, Inextendible } status;
    CausalCurve curve;   // extended curve when status == Extended
    std::string reason;  // "ambient" | "no limit point in carrier" | ...
    bool genuine() const {
        return status == Status::Inextendible && reason != "ambient";
    }
};

// Attempt continuous endpoint attachment of a half-open geodesic.
ExtendResult extend_geodesic(const SpaceDescription& space, const CausalCurve& curve);
// Past-directed variant (curve half-open at the start).
ExtendResult extend_geodesic_past(const SpaceDescription& space, const CausalCurve& curve);

struct SearchBudget {
    std::size_t max_seeds = 20000;
    std::size_t max_extension_steps = 10000;
};

struct TCReport {
    bool holds_within_budget = true;
    std::optional<CausalCurve> witness;
    double witness_length = 0;
    std::string witness_reason;  // inextendibility certificate
};

// Bounded witness search for property (TC): a finite-length timelike geodesic
// inextendible at one end for a genuine (non-frontier) reason refutes (TC).
TCReport check_TC(const SpaceDescription& space, const SearchBudget& budget = {});

}  // namespace lls
