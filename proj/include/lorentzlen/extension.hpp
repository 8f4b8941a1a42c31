#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lorentzlen/curves.hpp"
#include "lorentzlen/space.hpp"

namespace lls {

// Candidate extension: an ambient space together with an injection iota of
// the base space's points into it. iota[i] = ambient image of base point i.
struct ExtensionCandidate {
    const SpaceDescription* base = nullptr;
    const SpaceDescription* ambient = nullptr;
    std::vector<PointId> iota;
};

struct ClauseResult {
    std::string name;
    Verdict verdict = Verdict::NotCheckable;
    std::vector<PointId> witness;  // ambient ids unless stated in detail
    std::string detail;
};

struct ExtensionReport {
    std::vector<ClauseResult> clauses;
    bool is_extension() const;  // all clauses pass (NotCheckable does not pass)
    const ClauseResult* find(const std::string& name) const;
};

// The five extension clauses:
//   connected   ambient metric graph connected at basis resolution
//   metric      d_ambient(iota x, iota y) = d(x, y)
//   open-image  image proper and open in the ambient neighbourhood basis
//   relations   iota preserves <= and <<
//   curves      causality class and tau-length preserved on a deterministic
//               curve suite (all maximal chains + seeded random chains)
ExtensionReport check_extension(const ExtensionCandidate& cand);

// tau_ambient(iota x, iota y) >= tau(x, y) for all base pairs
// (lex-smallest violating pair reported on failure).
ClauseResult check_tau_monotone(const ExtensionCandidate& cand);

struct BoundaryReport {
    // Ambient points outside the image reached by a timelike chain lying in
    // the image except for its endpoint (future) or start (past).
    std::vector<PointId> future_boundary;
    std::vector<PointId> past_boundary;
    // One witness chain per boundary point, aligned with the concatenated
    // future + past lists; ambient ids.
    std::vector<std::vector<PointId>> reaching_curves;
    bool empty() const { return future_boundary.empty() && past_boundary.empty(); }
};

BoundaryReport compute_boundary(const ExtensionCandidate& cand);

struct HypothesisCheck {
    std::string name;
    Verdict verdict = Verdict::NotCheckable;
    std::string detail;
};

struct ConsistencyReport {
    std::vector<HypothesisCheck> hypotheses;
    // true iff every hypothesis of the inextendibility theorem holds while a
    // verified extension exists — a bug or surrogate-breakdown signal.
    bool inconsistency = false;
    std::string detail;
};

// Theorem triad on the candidate: base strongly causal (surrogate), base
// satisfies (TC) within budget, ambient regular, ambient causal curvature
// bounded above for some K in the sweep. All passing plus a verified
// extension raises INCONSISTENCY; otherwise names the failing hypotheses.
ConsistencyReport cross_check_inextendibility(const ExtensionCandidate& cand,
                                              const SearchBudget& budget = {},
                                              const std::vector<double>& K_sweep = {0.0, 1.0,
                                                                                    -1.0});

}  // namespace lls
