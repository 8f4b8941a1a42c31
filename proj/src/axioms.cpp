#include "lorentzlen/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lorentzlen/tolerances.hpp"

namespace lls {

namespace {

void require_shape(const SpaceDescription& sp) {
    const std::size_t n = sp.causal.size();
    if (sp.chron.size() != n) throw std::invalid_argument("relation matrix dimension mismatch");
    if (sp.dist.size() != n * n) throw std::invalid_argument("metric matrix dimension mismatch");
}

void require_tau_shape(const SpaceDescription& sp) {
    require_shape(sp);
    const std::size_t n = sp.size();
    if (sp.tau.size() != n * n) throw std::invalid_argument("tau matrix dimension mismatch");
    for (double v : sp.tau)
        if (std::isnan(v) || v < 0) throw std::invalid_argument("tau matrix has a negative entry");
}

// Lex-smallest triple violating transitivity of rel.
std::optional<std::array<PointId, 3>> transitivity_witness(const BitMatrix& rel) {
    const std::size_t n = rel.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y : rel.row_indices(x)) {
            if (rel.row_subset(y, x)) continue;
            for (std::size_t z : rel.row_indices(y))
                if (!rel.get(x, z)) return std::array<PointId, 3>{PointId(x), PointId(y), PointId(z)};
        }
    }
    return std::nullopt;
}

AxiomCheck make(const std::string& name, Verdict v, std::vector<PointId> wit = {},
                std::string detail = "", bool advisory = false) {
    return AxiomCheck{name, v, std::move(wit), std::move(detail), advisory};
}

// Bitmask over the carrier for a point list.
std::vector<uint64_t> mask_of(std::size_t n, const std::vector<PointId>& pts) {
    std::vector<uint64_t> m((n + 63) / 64, 0);
    for (PointId p : pts) m[p >> 6] |= uint64_t(1) << (p & 63);
    return m;
}

bool mask_get(const std::vector<uint64_t>& m, std::size_t i) {
    return (m[i >> 6] >> (i & 63)) & 1u;
}

}  // namespace

AxiomReport check_causal_space(const SpaceDescription& sp) {
    require_shape(sp);
    AxiomReport rep;
    const std::size_t n = sp.size();

    {
        AxiomCheck c = make("le-reflexive", Verdict::Pass);
        for (std::size_t i = 0; i < n; ++i)
            if (!sp.causal.get(i, i)) {
                c = make("le-reflexive", Verdict::Fail, {PointId(i)}, "x <= x missing");
                break;
            }
        rep.checks.push_back(std::move(c));
    }
    if (auto w = transitivity_witness(sp.causal))
        rep.checks.push_back(make("le-transitive", Verdict::Fail, {(*w)[0], (*w)[1], (*w)[2]},
                                  "x <= y <= z without x <= z"));
    else
        rep.checks.push_back(make("le-transitive", Verdict::Pass));
    if (auto w = transitivity_witness(sp.chron))
        rep.checks.push_back(make("ll-transitive", Verdict::Fail, {(*w)[0], (*w)[1], (*w)[2]},
                                  "x << y << z without x << z"));
    else
        rep.checks.push_back(make("ll-transitive", Verdict::Pass));
    {
        AxiomCheck c = make("ll-in-le", Verdict::Pass);
        for (std::size_t i = 0; i < n && c.verdict == Verdict::Pass; ++i)
            for (std::size_t j : sp.chron.row_indices(i))
                if (!sp.causal.get(i, j)) {
                    c = make("ll-in-le", Verdict::Fail, {PointId(i), PointId(j)},
                             "x << y without x <= y");
                    break;
                }
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

AxiomReport check_prelength(const SpaceDescription& sp) {
    require_tau_shape(sp);
    AxiomReport rep = check_causal_space(sp);
    const std::size_t n = sp.size();

    {
        AxiomCheck c = make("tau-null-positivity", Verdict::Pass);
        for (std::size_t x = 0; x < n && c.verdict == Verdict::Pass; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const double t = sp.tau_at(PointId(x), PointId(y));
                if (!sp.le(PointId(x), PointId(y)) && t != 0) {
                    c = make("tau-null-positivity", Verdict::Fail, {PointId(x), PointId(y)},
                             "tau positive without x <= y");
                    break;
                }
                if (sp.ll(PointId(x), PointId(y)) && !(t > 0)) {
                    c = make("tau-null-positivity", Verdict::Fail, {PointId(x), PointId(y)},
                             "x << y with tau = 0");
                    break;
                }
                if (!sp.ll(PointId(x), PointId(y)) && t > 0) {
                    c = make("tau-null-positivity", Verdict::Fail, {PointId(x), PointId(y)},
                             "tau > 0 without x << y");
                    break;
                }
            }
        rep.checks.push_back(std::move(c));
    }

    {
        AxiomCheck c = make("reverse-triangle", Verdict::Pass);
        for (std::size_t x = 0; x < n && c.verdict == Verdict::Pass; ++x)
            for (std::size_t y : sp.causal.row_indices(x)) {
                if (y == x) continue;
                const double txy = sp.tau_at(PointId(x), PointId(y));
                bool bad = false;
                for (std::size_t z : sp.causal.row_indices(y)) {
                    if (z == y) continue;
                    const double sum = txy + sp.tau_at(PointId(y), PointId(z));
                    const double txz = sp.tau_at(PointId(x), PointId(z));
                    if (std::isinf(sum) ? !std::isinf(txz) : txz < sum - kAbsTol - kRelTol * sum) {
                        c = make("reverse-triangle", Verdict::Fail,
                                 {PointId(x), PointId(y), PointId(z)},
                                 "tau(x,z) < tau(x,y) + tau(y,z)");
                        bad = true;
                        break;
                    }
                }
                if (bad) break;
            }
        rep.checks.push_back(std::move(c));
    }

    // Advisory epsilon-surrogate of lower semicontinuity: perturbing both
    // arguments within the finest basis neighbourhood may lower tau by at
    // most the declared Lipschitz slack.
    if (!sp.nbhd_basis.empty() && sp.tau_lipschitz > 0) {
        AxiomCheck c = make("lsc-surrogate", Verdict::Pass, {}, "", true);
        const double slack = 2.0 * sp.tau_lipschitz * sp.resolution + kAbsTol;
        // Second-finest rung: the finest may be a singleton on lattice
        // carriers, which would make the surrogate vacuous.
        auto rung = [&](std::size_t i) -> const std::vector<PointId>& {
            const auto& rungs = sp.nbhd_basis[i];
            return rungs[rungs.size() >= 2 ? rungs.size() - 2 : 0];
        };
        for (std::size_t x = 0; x < n && c.verdict == Verdict::Pass; ++x) {
            const auto& bx = rung(x);
            for (std::size_t y = 0; y < n; ++y) {
                const double t = sp.tau_at(PointId(x), PointId(y));
                if (!(t > 0) || std::isinf(t)) continue;
                const auto& by = rung(y);
                // liminf over the neighbourhood: the max over perturbed pairs
                // must not fall below tau(x,y) - slack.
                double best = 0;
                for (PointId xp : bx)
                    for (PointId yp : by)
                        best = std::max(best, std::min(sp.tau_at(xp, yp), t));
                if (best < t - slack) {
                    c = make("lsc-surrogate", Verdict::Fail, {PointId(x), PointId(y)},
                             "tau drops under perturbation beyond the Lipschitz slack", true);
                    break;
                }
            }
        }
        rep.checks.push_back(std::move(c));
    } else {
        rep.checks.push_back(make("lsc-surrogate", Verdict::NotCheckable, {},
                                  "no neighbourhood basis or Lipschitz constant", true));
    }
    return rep;
}

std::vector<PointId> chronological_future(const SpaceDescription& sp, PointId x) {
    std::vector<PointId> out;
    for (std::size_t j : sp.chron.row_indices(x)) out.push_back(PointId(j));
    return out;
}

std::vector<PointId> chronological_past(const SpaceDescription& sp, PointId x) {
    std::vector<PointId> out;
    for (std::size_t i = 0; i < sp.size(); ++i)
        if (sp.chron.get(i, x)) out.push_back(PointId(i));
    return out;
}

std::vector<PointId> causal_future(const SpaceDescription& sp, PointId x) {
    std::vector<PointId> out;
    for (std::size_t j : sp.causal.row_indices(x)) out.push_back(PointId(j));
    return out;
}

std::vector<PointId> causal_past(const SpaceDescription& sp, PointId x) {
    std::vector<PointId> out;
    for (std::size_t i = 0; i < sp.size(); ++i)
        if (sp.causal.get(i, x)) out.push_back(PointId(i));
    return out;
}

AxiomReport check_causality_ladder(const SpaceDescription& sp) {
    require_shape(sp);
    AxiomReport rep;
    const std::size_t n = sp.size();

    {
        AxiomCheck c = make("chronology", Verdict::Pass);
        for (std::size_t i = 0; i < n; ++i)
            if (sp.chron.get(i, i)) {
                c = make("chronology", Verdict::Fail, {PointId(i)}, "x << x");
                break;
            }
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c = make("causality", Verdict::Pass);
        for (std::size_t i = 0; i < n && c.verdict == Verdict::Pass; ++i)
            for (std::size_t j : sp.causal.row_indices(i))
                if (j != i && sp.causal.get(j, i)) {
                    c = make("causality", Verdict::Fail, {PointId(i), PointId(j)},
                             "distinct x <= y <= x");
                    break;
                }
        rep.checks.push_back(std::move(c));
    }

    if (sp.nbhd_basis.empty()) {
        rep.checks.push_back(
            make("strong-causality", Verdict::NotCheckable, {}, "no neighbourhood basis"));
        return rep;
    }

    // Surrogate: for each basis U around x some basis V <= U traps every
    // <=-chain with endpoints in V inside U. Chains are step chains; the
    // points lying on some chain p -> q are reach(p, w) && reach(w, q).
    const BitMatrix& reach = sp.step_closure();
    const BitMatrix& reach_rev = sp.step_closure_rev();
    AxiomCheck c = make("strong-causality", Verdict::Pass);
    const std::size_t words = reach.row_words();
    for (std::size_t x = 0; x < n && c.verdict == Verdict::Pass; ++x) {
        for (const auto& U : sp.nbhd_basis[x]) {
            const auto umask = mask_of(n, U);
            bool found = false;
            // Finest V first.
            for (auto it = sp.nbhd_basis[x].rbegin(); it != sp.nbhd_basis[x].rend() && !found;
                 ++it) {
                const auto& V = *it;
                bool v_in_u = true;
                for (PointId p : V)
                    if (!mask_get(umask, p)) {
                        v_in_u = false;
                        break;
                    }
                if (!v_in_u) continue;
                bool ok = true;
                for (std::size_t a = 0; a < V.size() && ok; ++a)
                    for (std::size_t b = 0; b < V.size() && ok; ++b) {
                        const PointId p = V[a], q = V[b];
                        if (p == q || !reach.get(p, q)) continue;
                        const uint64_t* rp = reach.row(p);
                        const uint64_t* rq = reach_rev.row(q);
                        for (std::size_t w = 0; w < words; ++w)
                            if ((rp[w] & rq[w]) & ~umask[w]) {
                                ok = false;
                                break;
                            }
                    }
                if (ok) found = true;
            }
            if (!found) {
                c = make("strong-causality", Verdict::Fail, {PointId(x)},
                         "no sub-neighbourhood traps chains inside the basis neighbourhood");
                break;
            }
        }
    }
    rep.checks.push_back(std::move(c));
    return rep;
}

AxiomReport check_locally_causally_closed(const SpaceDescription& sp) {
    require_shape(sp);
    AxiomReport rep;
    const std::size_t n = sp.size();
    if (sp.nbhd_basis.empty() || sp.resolution <= 0) {
        rep.checks.push_back(
            make("local-causal-closedness", Verdict::NotCheckable, {}, "no basis or resolution"));
        return rep;
    }
    // Epsilon-closedness: an unrelated pair that has related pairs within
    // every delta of a dyadic ladder reaching below the sample resolution is
    // a limit of related pairs, hence a closedness violation. On carriers
    // whose minimum point spacing is the resolution the finest rung can only
    // be met by the pair itself.
    const double h = sp.resolution;
    const std::vector<double> ladder = {2 * h, h, h / 2, h / 4};
    // Related pair pool.
    std::vector<std::pair<PointId, PointId>> rel;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : sp.causal.row_indices(i))
            if (i != j) rel.emplace_back(PointId(i), PointId(j));

    AxiomCheck c = make("local-causal-closedness", Verdict::Pass);
    for (std::size_t x = 0; x < n && c.verdict == Verdict::Pass; ++x) {
        // Scan the coarsest neighbourhood of x: it contains every finer one,
        // so any limiting pair shows up here.
        const auto& U = sp.nbhd_basis[x].front();
        for (PointId p : U) {
            bool done = false;
            for (PointId q : U) {
                if (p == q || sp.le(p, q)) continue;
                bool all = true;
                for (double delta : ladder) {
                    bool found = false;
                    for (const auto& [a, b] : rel)
                        if (sp.d(p, a) < delta && sp.d(q, b) < delta) {
                            found = true;
                            break;
                        }
                    if (!found) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    c = make("local-causal-closedness", Verdict::Fail, {p, q},
                             "unrelated pair is a limit of related pairs");
                    done = true;
                    break;
                }
            }
            if (done) break;
        }
    }
    rep.checks.push_back(std::move(c));
    return rep;
}

AxiomReport check_causally_path_connected(const SpaceDescription& sp) {
    require_shape(sp);
    AxiomReport rep;
    const std::size_t n = sp.size();
    const BitMatrix& reach = sp.step_closure();
    const BitMatrix& treach = sp.timelike_step_closure();
    {
        // Strict only inside the resolved cone; elsewhere the bounded step
        // set cannot mimic arbitrarily shallow causal directions and missing
        // chains are advisory.
        AxiomCheck c = make("causal-connected", Verdict::Pass);
        AxiomCheck cu = make("causal-connected-unresolved", Verdict::Pass, {}, "", true);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y : sp.causal.row_indices(x)) {
                if (x == y || reach.get(x, y)) continue;
                if (sp.is_resolved(PointId(x), PointId(y))) {
                    if (c.verdict == Verdict::Pass)
                        c = make("causal-connected", Verdict::Fail, {PointId(x), PointId(y)},
                                 "x < y with no causal chain in the step model");
                } else if (cu.verdict == Verdict::Pass) {
                    cu = make("causal-connected-unresolved", Verdict::Fail,
                              {PointId(x), PointId(y)},
                              "x < y without a causal chain, outside the resolved cone", true);
                }
            }
        rep.checks.push_back(std::move(c));
        rep.checks.push_back(std::move(cu));
    }
    {
        // Timelike chains built from steps of bounded radius cannot reach
        // chronological pairs in directions the step set does not resolve;
        // those pairs are advisory.
        AxiomCheck c = make("timelike-connected", Verdict::Pass);
        AxiomCheck cu = make("timelike-connected-unresolved", Verdict::Pass, {}, "", true);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y : sp.chron.row_indices(x)) {
                if (x == y || treach.get(x, y)) continue;
                if (sp.is_resolved(PointId(x), PointId(y))) {
                    if (c.verdict == Verdict::Pass)
                        c = make("timelike-connected", Verdict::Fail, {PointId(x), PointId(y)},
                                 "x << y with no timelike chain in the step model");
                } else if (cu.verdict == Verdict::Pass) {
                    cu = make("timelike-connected-unresolved", Verdict::Fail,
                              {PointId(x), PointId(y)},
                              "x << y without a timelike chain, outside the resolved cone", true);
                }
            }
        rep.checks.push_back(std::move(c));
        rep.checks.push_back(std::move(cu));
    }
    return rep;
}

namespace {

// Longest path (by weight w) over chart members under the step relation.
// Returns per-pair values in a k*k row-major table; -1 marks no chain.
// Throws on cycles. predecessor table optional for maximizer recovery.
std::vector<double> local_longest(const SpaceDescription& sp, const std::vector<PointId>& mem,
                                  bool timelike_weight_only = false) {
    const std::size_t k = mem.size();
    // Kahn topological order of the strict causal relation among members,
    // smallest local index first among ready nodes.
    std::vector<std::size_t> indeg(k, 0);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (a != b && mem[a] != mem[b] && sp.lt(mem[a], mem[b])) ++indeg[b];
    std::vector<std::size_t> order;
    order.reserve(k);
    std::vector<bool> used(k, false);
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t pick = k;
        for (std::size_t i = 0; i < k; ++i)
            if (!used[i] && indeg[i] == 0) {
                pick = i;
                break;
            }
        if (pick == k) throw std::runtime_error("cycle in local causal relation");
        used[pick] = true;
        order.push_back(pick);
        for (std::size_t b = 0; b < k; ++b)
            if (!used[b] && b != pick && mem[pick] != mem[b] && sp.lt(mem[pick], mem[b]))
                --indeg[b];
    }

    std::vector<double> best(k * k, -1.0);
    for (std::size_t s = 0; s < k; ++s) {
        std::vector<double> val(k, -1.0);
        val[s] = 0.0;
        for (std::size_t oi = 0; oi < k; ++oi) {
            const std::size_t u = order[oi];
            if (val[u] < 0) continue;
            for (std::size_t oj = 0; oj < k; ++oj) {
                const std::size_t v = order[oj];
                if (u == v || !sp.step_ok(mem[u], mem[v])) continue;
                if (timelike_weight_only && !sp.ll(mem[u], mem[v])) continue;
                const double w = sp.tau_at(mem[u], mem[v]);
                if (val[u] + w > val[v]) val[v] = val[u] + w;
            }
        }
        for (std::size_t t = 0; t < k; ++t) best[s * k + t] = val[t];
    }
    return best;
}

}  // namespace

AxiomReport check_localisable(const SpaceDescription& sp) {
    require_tau_shape(sp);
    AxiomReport rep;
    if (!sp.atlas) {
        rep.checks.push_back(make("localisable", Verdict::NotCheckable, {}, "no atlas"));
        return rep;
    }
    const auto& atlas = *sp.atlas;
    const std::size_t n = sp.size();

    AxiomCheck ci = make("loc-finite-length", Verdict::Pass);
    AxiomCheck cii = make("loc-local-axioms", Verdict::Pass);
    AxiomCheck ciii = make("loc-maximizers", Verdict::Pass);
    AxiomCheck civ = atlas.regular ? make("loc-regular", Verdict::Pass)
                                   : make("loc-regular", Verdict::NotCheckable, {},
                                          "regularity not claimed");

    for (std::size_t x = 0; x < n; ++x) {
        const AtlasChart& ch = atlas.charts[x];
        const auto& mem = ch.members;
        const std::size_t k = mem.size();
        // Interior clauses apply to core members only; fringe members exist
        // as witnesses (one step beyond the core) and get no guarantees.
        std::vector<char> core(k, 1);
        if (ch.core_radius > 0)
            for (std::size_t a = 0; a < k; ++a)
                core[a] = sp.d(PointId(x), mem[a]) <= ch.core_radius + kAbsTol;

        // (i) uniform d-length bound = acyclic local relation (the longest
        // d-path over a finite DAG is finite).
        for (std::size_t a = 0; a < k && ci.verdict == Verdict::Pass; ++a)
            for (std::size_t b = 0; b < k; ++b)
                if (mem[a] != mem[b] && sp.lt(mem[a], mem[b]) && sp.lt(mem[b], mem[a])) {
                    ci = make("loc-finite-length", Verdict::Fail, {mem[a], mem[b]},
                              "causal cycle inside a chart");
                    break;
                }

        // (ii) omega axioms + nonempty local I+- for members whose global
        // I+- is nonempty at all.
        for (std::size_t a = 0; a < k && cii.verdict == Verdict::Pass; ++a) {
            for (std::size_t b = 0; b < k && cii.verdict == Verdict::Pass; ++b) {
                const double w = ch.omega_at(a, b);
                if (w < 0 || (w > 0 && !sp.ll(mem[a], mem[b])) ||
                    (!(w > 0) && sp.ll(mem[a], mem[b]) && sp.is_resolved(mem[a], mem[b]))) {
                    cii = make("loc-local-axioms", Verdict::Fail, {mem[a], mem[b]},
                               "omega violates the null/positivity conditions");
                    break;
                }
                for (std::size_t c2 = 0; c2 < k; ++c2)
                    if (sp.lt(mem[a], mem[b]) && sp.lt(mem[b], mem[c2]) &&
                        ch.omega_at(a, c2) <
                            w + ch.omega_at(b, c2) - kAbsTol - kRelTol * ch.omega_at(a, c2)) {
                        cii = make("loc-local-axioms", Verdict::Fail, {mem[a], mem[b], mem[c2]},
                                   "omega violates the reverse triangle inequality");
                        break;
                    }
            }
        }
        if (cii.verdict == Verdict::Pass) {
            for (std::size_t a = 0; a < k; ++a) {
                if (!core[a]) continue;
                const bool glob_fut = !sp.chron.row_indices(mem[a]).empty();
                bool glob_past = false;
                for (std::size_t i = 0; i < n; ++i)
                    if (sp.chron.get(i, mem[a])) {
                        glob_past = true;
                        break;
                    }
                bool loc_fut = false, loc_past = false;
                for (std::size_t b = 0; b < k; ++b) {
                    if (sp.ll(mem[a], mem[b])) loc_fut = true;
                    if (sp.ll(mem[b], mem[a])) loc_past = true;
                }
                if ((glob_fut && !loc_fut) || (glob_past && !loc_past)) {
                    cii = make("loc-local-axioms", Verdict::Fail, {mem[a]},
                               "empty local chronological future/past");
                    break;
                }
            }
        }

        // (iii) local maximizers realize omega, and omega never exceeds tau.
        if (ciii.verdict == Verdict::Pass && k > 0) {
            std::vector<double> lp;
            try {
                lp = local_longest(sp, mem);
            } catch (const std::exception&) {
                ciii = make("loc-maximizers", Verdict::Fail, {PointId(x)},
                            "local relation not a DAG");
            }
            for (std::size_t a = 0; a < k && ciii.verdict == Verdict::Pass; ++a)
                for (std::size_t b = 0; b < k; ++b) {
                    if (!core[a] || !core[b]) continue;
                    if (mem[a] == mem[b] || !sp.lt(mem[a], mem[b])) continue;
                    const double w = ch.omega_at(a, b);
                    const double t = sp.tau_at(mem[a], mem[b]);
                    if (w > t + kAbsTol + kRelTol * t) {
                        ciii = make("loc-maximizers", Verdict::Fail, {mem[a], mem[b]},
                                    "omega exceeds tau");
                        break;
                    }
                    if (!sp.is_resolved(mem[a], mem[b])) continue;
                    const double l = lp[a * k + b];
                    const double tol = 0.05 * w + 2 * sp.resolution + kAbsTol;
                    if (l < 0 || std::fabs(l - w) > tol) {
                        ciii = make("loc-maximizers", Verdict::Fail, {mem[a], mem[b]},
                                    "no chart chain realizes omega");
                        break;
                    }
                }
        }

        // (iv) regularity: on exactly realized << pairs the maximizer must be
        // timelike and strictly longer than any chain through a null step.
        if (atlas.regular && civ.verdict == Verdict::Pass && k > 0) {
            std::vector<double> lp = local_longest(sp, mem);
            std::vector<double> lp_timelike = local_longest(sp, mem, true);
            for (std::size_t a = 0; a < k && civ.verdict == Verdict::Pass; ++a)
                for (std::size_t b = 0; b < k; ++b) {
                    if (!core[a] || !core[b]) continue;
                    if (!sp.ll(mem[a], mem[b])) continue;
                    const double w = ch.omega_at(a, b);
                    const double l = lp[a * k + b];
                    if (l < 0 || std::fabs(l - w) > kAbsTol) continue;  // not exactly realized
                    // A purely timelike chain must match the maximum.
                    if (lp_timelike[a * k + b] < l - kAbsTol) {
                        civ = make("loc-regular", Verdict::Fail, {mem[a], mem[b]},
                                   "no timelike maximizer between chronologically related points");
                        break;
                    }
                }
        }
    }

    rep.checks.push_back(std::move(ci));
    rep.checks.push_back(std::move(cii));
    rep.checks.push_back(std::move(ciii));
    rep.checks.push_back(std::move(civ));
    return rep;
}

}  // namespace lls
