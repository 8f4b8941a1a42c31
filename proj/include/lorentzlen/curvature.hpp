#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lorentzlen/curves.hpp"
#include "lorentzlen/models.hpp"
#include "lorentzlen/space.hpp"

namespace lls {

// Timelike triangle x << y << z whose sides are realized by maximal chains
// (chain length equals tau on each side to tight tolerance).
struct AdmissibleTriangle {
    PointId x = 0, y = 0, z = 0;
    TriangleSides sides;  // a = tau(x,y), b = tau(y,z), c = tau(x,z)
    std::vector<PointId> side_xy, side_yz, side_xz;
};

enum class BoundKind { Below, Above };

struct CurvaturePair {
    PointId p = 0, q = 0;
    double tau_space = 0;        // tau(p, q) in the space
    double tau_comparison = 0;   // separation of the corresponding model points
};

struct CurvatureVerdict {
    Verdict verdict = Verdict::NotCheckable;  // NotCheckable = vacuous / no region
    double K = 0;
    BoundKind bound = BoundKind::Below;
    std::size_t triangles_checked = 0;
    std::size_t pairs_checked = 0;
    std::optional<AdmissibleTriangle> witness_triangle;
    std::optional<CurvaturePair> witness_pair;
    std::string detail;
};

// Triangles within the region (empty region = whole carrier) with all three
// sides timelike, exactly realized by maximal chains, and within the size
// bounds for K. Deterministic order (lex by (x, y, z)); capped at max_count.
std::vector<AdmissibleTriangle> enumerate_triangles(const SpaceDescription& sp, double K,
                                                    const std::vector<PointId>& region = {},
                                                    std::size_t max_count = 200);

// Triangle comparison against M_K, sampling corresponding points at equal
// tau-fractions on the sides:
//   bounded below by K  <=>  tau(p,q) <= comparison separation,
//   bounded above by K  <=>  tau(p,q) >= comparison separation.
CurvatureVerdict check_curvature_bound(const SpaceDescription& sp, double K, BoundKind bound,
                                       const std::vector<PointId>& region = {},
                                       std::size_t samples_per_side = 11,
                                       std::size_t max_triangles = 200);

struct BranchWitness {
    PointId branch_point = 0;
    PointId from = 0;
    // Both chains start at `from`, run together through `branch_point`, then
    // separate; each exactly realizes tau between its own endpoints.
    std::vector<PointId> chain1, chain2;
};

// Maximal realized chains that run together through the branch point and then
// separate into continuations that do not share a germ.
std::vector<BranchWitness> detect_branching(const SpaceDescription& sp,
                                            const std::vector<PointId>& region = {},
                                            std::size_t max_witnesses = 8);

struct SweepEntry {
    double K = 0;
    Verdict below = Verdict::NotCheckable;
    Verdict above = Verdict::NotCheckable;
};

struct SingularityReport {
    std::vector<SweepEntry> sweep_results;
    std::vector<BranchWitness> branching_witnesses;
    // Certified only through a branching witness; a fully failing sweep is
    // reported in detail but cannot certify an unbounded claim by itself.
    bool unbounded_below = false;
    std::string detail;
};

SingularityReport singularity_sweep(const SpaceDescription& sp, const std::vector<double>& Ks,
                                    const std::vector<PointId>& region = {},
                                    std::size_t samples_per_side = 11,
                                    std::size_t max_triangles = 200);

}  // namespace lls
