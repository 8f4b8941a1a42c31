#include "lorentzlen/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lorentzlen/tolerances.hpp"

namespace lls {

CausalCurve CausalCurve::from_points(std::vector<PointId> pts, bool open_start, bool open_end) {
    CausalCurve c;
    c.points = std::move(pts);
    c.params.resize(c.points.size());
    for (std::size_t i = 0; i < c.params.size(); ++i) c.params[i] = double(i);
    c.open_start = open_start;
    c.open_end = open_end;
    return c;
}

CurveVerdict classify_curve(const SpaceDescription& sp, const CausalCurve& curve) {
    CurveVerdict v;
    const auto& pts = curve.points;
    if (pts.size() < 2) {
        v.cls = CurveClass::Invalid;
        v.reason = "constant";
        return v;
    }
    for (PointId p : pts)
        if (p >= sp.size()) throw std::invalid_argument("curve point outside the carrier");
    if (curve.params.size() != pts.size())
        throw std::invalid_argument("parameter list length mismatch");
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(curve.params[i] < curve.params[i + 1])) {
            v.cls = CurveClass::Invalid;
            v.witness = {{i, i + 1}};
            v.reason = "parameters not strictly increasing";
            return v;
        }
        if (pts[i] == pts[i + 1] || !sp.le(pts[i], pts[i + 1])) {
            v.cls = CurveClass::Invalid;
            v.witness = {{i, i + 1}};
            v.reason = "consecutive points not strictly causally related";
            return v;
        }
    }
    bool all_chron = true, none_chron = true;
    std::size_t wi = 0, wj = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (sp.ll(pts[i], pts[j]))
                none_chron = false;
            else if (all_chron) {
                all_chron = false;
                wi = i;
                wj = j;
            }
        }
    if (all_chron)
        v.cls = CurveClass::Timelike;
    else if (none_chron)
        v.cls = CurveClass::Null;
    else {
        v.cls = CurveClass::Causal;
        v.witness = {{wi, wj}};
    }
    return v;
}

LengthResult tau_length(const SpaceDescription& sp, const CausalCurve& curve) {
    const CurveVerdict cv = classify_curve(sp, curve);
    if (cv.cls == CurveClass::Invalid)
        throw std::invalid_argument("tau_length: not a causal curve (" + cv.reason + ")");
    LengthResult r;
    ExtReal total(0.0);
    for (std::size_t i = 0; i + 1 < curve.points.size(); ++i)
        total += ExtReal(sp.tau_at(curve.points[i], curve.points[i + 1]));
    r.value = total;
    r.partition_used.resize(curve.points.size());
    for (std::size_t i = 0; i < curve.points.size(); ++i) r.partition_used[i] = i;
    r.converged = true;
    return r;
}

namespace {

// Single-source longest tau-path over the step DAG restricted to J+(x),
// optionally further restricted to J-(y). val < 0 marks unreachable;
// pred gives the smallest-id argmax predecessor.
struct DpResult {
    std::vector<double> val;
    std::vector<PointId> pred;
};

DpResult longest_from(const SpaceDescription& sp, PointId x, std::optional<PointId> upto) {
    const std::size_t n = sp.size();
    std::vector<PointId> nodes;
    for (std::size_t j : sp.causal.row_indices(x))
        if (!upto || sp.le(PointId(j), *upto)) nodes.push_back(PointId(j));
    if (std::find(nodes.begin(), nodes.end(), x) == nodes.end()) nodes.push_back(x);
    std::sort(nodes.begin(), nodes.end());

    // Kahn order, smallest id first; a leftover node means a causal cycle.
    const std::size_t k = nodes.size();
    std::vector<std::size_t> indeg(k, 0);
    auto edge = [&](std::size_t a, std::size_t b) {
        return nodes[a] != nodes[b] && sp.lt(nodes[a], nodes[b]);
    };
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (a != b && edge(a, b)) ++indeg[b];
    std::vector<std::size_t> order;
    order.reserve(k);
    std::vector<bool> used(k, false);
    for (std::size_t s = 0; s < k; ++s) {
        std::size_t pick = k;
        for (std::size_t i = 0; i < k; ++i)
            if (!used[i] && indeg[i] == 0) {
                pick = i;
                break;
            }
        if (pick == k)
            throw std::runtime_error("not a DAG: causal cycle through the interval");
        used[pick] = true;
        order.push_back(pick);
        for (std::size_t b = 0; b < k; ++b)
            if (!used[b] && b != pick && edge(pick, b)) --indeg[b];
    }

    DpResult res;
    res.val.assign(n, -1.0);
    res.pred.assign(n, PointId(n));
    res.val[x] = 0.0;
    for (std::size_t oi : order) {
        const PointId u = nodes[oi];
        if (res.val[u] < 0) continue;
        for (std::size_t oj = 0; oj < k; ++oj) {
            const PointId v = nodes[oj];
            if (u == v || !sp.step_ok(u, v)) continue;
            const double cand = res.val[u] + sp.tau_at(u, v);
            if (cand > res.val[v] || (cand == res.val[v] && u < res.pred[v])) {
                res.val[v] = cand;
                res.pred[v] = u;
            }
        }
    }
    return res;
}

}  // namespace

std::vector<double> longest_values_from(const SpaceDescription& sp, PointId x) {
    if (x >= sp.size()) throw std::invalid_argument("point outside carrier");
    return longest_from(sp, x, std::nullopt).val;
}

ExtReal compute_T(const SpaceDescription& sp, PointId x, PointId y) {
    if (x >= sp.size() || y >= sp.size()) throw std::invalid_argument("point outside carrier");
    if (x == y || !sp.le(x, y)) return ExtReal(0.0);
    const DpResult dp = longest_from(sp, x, y);
    if (dp.val[y] < 0) return ExtReal(0.0);
    if (std::isinf(dp.val[y])) return ExtReal::infinity();
    return ExtReal(dp.val[y]);
}

AxiomReport check_length_space(const SpaceDescription& sp) {
    AxiomReport rep;
    const std::size_t n = sp.size();
    AxiomCheck main{"tau-equals-T", Verdict::Pass, {}, "", false};
    AxiomCheck adv{"tau-equals-T-unresolved", Verdict::Pass, {}, "", true};
    double worst = 0, worst_adv = 0;
    for (std::size_t x = 0; x < n; ++x) {
        DpResult dp;
        try {
            dp = longest_from(sp, PointId(x), std::nullopt);
        } catch (const std::exception& e) {
            main.verdict = Verdict::Fail;
            main.witness = {PointId(x)};
            main.detail = e.what();
            break;
        }
        for (std::size_t y : sp.causal.row_indices(x)) {
            if (y == x) continue;
            const double t = sp.tau_at(PointId(x), PointId(y));
            const double T = dp.val[y] < 0 ? 0.0 : dp.val[y];
            if (std::isinf(t) && std::isinf(T)) continue;
            const double dev = std::fabs(T - t);
            // Chains can never beat tau; an excess is a hard failure even on
            // unresolved pairs.
            if (T > t + kAbsTol + kRelTol * t) {
                main.verdict = Verdict::Fail;
                main.witness = {PointId(x), PointId(y)};
                main.detail = "T exceeds tau";
                break;
            }
            const double tol = 0.05 * t + 2 * sp.resolution + kAbsTol;
            if (sp.is_resolved(PointId(x), PointId(y))) {
                if (dev > tol && dev > worst) {
                    worst = dev;
                    main.verdict = Verdict::Fail;
                    main.witness = {PointId(x), PointId(y)};
                    main.detail = "tau not realized by chains within tolerance";
                }
            } else if (dev > tol && dev > worst_adv) {
                worst_adv = dev;
                adv.verdict = Verdict::Fail;
                adv.witness = {PointId(x), PointId(y)};
                adv.detail = "deficit on a pair outside the resolved cone mask";
            }
        }
        if (main.verdict == Verdict::Fail && main.detail == "T exceeds tau") break;
    }
    rep.checks.push_back(std::move(main));
    rep.checks.push_back(std::move(adv));
    return rep;
}

CausalCurve find_maximal_curve(const SpaceDescription& sp, PointId x, PointId y) {
    if (x >= sp.size() || y >= sp.size()) throw std::invalid_argument("point outside carrier");
    if (x == y) throw std::invalid_argument("constant curve requested (x = y)");
    if (!sp.le(x, y)) throw std::invalid_argument("no causal curve: x is not <= y");
    const DpResult dp = longest_from(sp, x, y);
    if (dp.val[y] < 0) throw std::invalid_argument("no causal chain from x to y in the step model");
    std::vector<PointId> rev;
    for (PointId v = y; v != x; v = dp.pred[v]) {
        rev.push_back(v);
        if (rev.size() > sp.size()) throw std::runtime_error("predecessor chain corrupt");
    }
    rev.push_back(x);
    std::reverse(rev.begin(), rev.end());
    return CausalCurve::from_points(std::move(rev));
}

namespace {

double chain_tau_sum(const SpaceDescription& sp, const std::vector<PointId>& pts, std::size_t c,
                     std::size_t d) {
    double s = 0;
    for (std::size_t i = c; i < d; ++i) s += sp.tau_at(pts[i], pts[i + 1]);
    return s;
}

// Does the minimal chart window around t0 realize its chart separation
// exactly? Minimal windows are decisive: with omega equal to tau on chart
// pairs, the reverse triangle inequality squeezes any larger exact window
// into exactness of every sub-window, so a failing minimal window cannot be
// rescued by a wider one.
bool index_covered(const SpaceDescription& sp, const std::vector<PointId>& pts, std::size_t t0,
                   GeodesicVerdict::Window* fail_out) {
    const auto& atlas = *sp.atlas;
    const std::size_t m = pts.size();
    const std::size_t c = t0 > 0 ? t0 - 1 : 0;
    const std::size_t d = t0 + 1 < m ? t0 + 1 : m - 1;
    {
        const double len = chain_tau_sum(sp, pts, c, d);
        for (const AtlasChart& ch : atlas.charts) {
            bool inside = true;
            std::size_t lc = AtlasChart::npos, ld = AtlasChart::npos;
            for (std::size_t i = c; i <= d && inside; ++i) {
                const std::size_t li = ch.local_index(pts[i]);
                if (li == AtlasChart::npos) inside = false;
                if (i == c) lc = li;
                if (i == d) ld = li;
            }
            if (!inside) continue;
            if (std::fabs(len - ch.omega_at(lc, ld)) <= kAbsTol) return true;
        }
    }
    if (fail_out) {
        fail_out->index = t0;
        fail_out->c = t0 > 0 ? t0 - 1 : 0;
        fail_out->d = std::min(m - 1, t0 + 1);
        fail_out->window_length = chain_tau_sum(sp, pts, fail_out->c, fail_out->d);
        try {
            CausalCurve w = find_maximal_curve(sp, pts[fail_out->c], pts[fail_out->d]);
            fail_out->witness_chain = w.points;
            fail_out->witness_length = tau_length(sp, w).value.value();
        } catch (const std::exception&) {
        }
    }
    return false;
}

}  // namespace

GeodesicVerdict is_geodesic(const SpaceDescription& sp, const CausalCurve& curve) {
    GeodesicVerdict v;
    const CurveVerdict cv = classify_curve(sp, curve);
    if (cv.cls == CurveClass::Invalid)
        throw std::invalid_argument("is_geodesic: not a causal curve (" + cv.reason + ")");
    if (!sp.atlas) {
        v.checkable = false;
        v.detail = "no localising atlas";
        return v;
    }
    for (std::size_t t0 = 0; t0 < curve.points.size(); ++t0) {
        GeodesicVerdict::Window w;
        if (!index_covered(sp, curve.points, t0, &w)) {
            v.is_geodesic = false;
            v.failing_window = w;
            v.detail = "no chart window around the index realizes its local separation";
            return v;
        }
    }
    v.is_geodesic = true;
    return v;
}

namespace {

// Check only the windows that involve the final (or initial) index region
// after appending a point; interior coverage is unchanged.
bool end_still_geodesic(const SpaceDescription& sp, const std::vector<PointId>& pts,
                        bool at_end) {
    const std::size_t m = pts.size();
    const std::size_t lo = at_end ? (m >= 3 ? m - 3 : 0) : 0;
    const std::size_t hi = at_end ? m - 1 : std::min<std::size_t>(2, m - 1);
    for (std::size_t t0 = lo; t0 <= hi; ++t0)
        if (!index_covered(sp, pts, t0, nullptr)) return false;
    return true;
}

}  // namespace

namespace {

// A stalled end within one step of the declared frontier is leaving the
// sampled patch: its straight continuation lands outside the carrier box,
// which says nothing about the underlying space.
bool near_frontier(const SpaceDescription& sp, PointId p) {
    if (sp.ambient_frontier.count(p)) return true;
    if (sp.step_radius <= 0) return false;
    for (PointId f : sp.ambient_frontier)
        if (sp.d(p, f) <= sp.step_radius + kAbsTol) return true;
    return false;
}

}  // namespace

ExtendResult extend_geodesic(const SpaceDescription& sp, const CausalCurve& curve) {
    if (!curve.open_end) throw std::invalid_argument("extend_geodesic: curve not half-open at b");
    const PointId last = curve.points.back();
    // Candidates in increasing (distance, id) order.
    std::vector<PointId> cand;
    for (std::size_t j = 0; j < sp.size(); ++j)
        if (sp.step_ok(last, PointId(j))) cand.push_back(PointId(j));
    std::stable_sort(cand.begin(), cand.end(), [&](PointId a, PointId b) {
        if (sp.d(last, a) != sp.d(last, b)) return sp.d(last, a) < sp.d(last, b);
        return a < b;
    });
    for (PointId p : cand) {
        std::vector<PointId> pts = curve.points;
        pts.push_back(p);
        if (!end_still_geodesic(sp, pts, true)) continue;
        CausalCurve ext = CausalCurve::from_points(std::move(pts), curve.open_start, false);
        return ExtendResult{ExtendResult::Status::Extended, std::move(ext), "", };
    }
    ExtendResult r;
    r.status = ExtendResult::Status::Inextendible;
    r.curve = curve;
    if (near_frontier(sp, last))
        r.reason = sp.ambient_complete ? "boundary" : "ambient";
    else
        r.reason = "no limit point in carrier";
    return r;
}

ExtendResult extend_geodesic_past(const SpaceDescription& sp, const CausalCurve& curve) {
    if (!curve.open_start)
        throw std::invalid_argument("extend_geodesic_past: curve not half-open at a");
    const PointId first = curve.points.front();
    std::vector<PointId> cand;
    for (std::size_t j = 0; j < sp.size(); ++j)
        if (sp.step_ok(PointId(j), first)) cand.push_back(PointId(j));
    std::stable_sort(cand.begin(), cand.end(), [&](PointId a, PointId b) {
        if (sp.d(first, a) != sp.d(first, b)) return sp.d(first, a) < sp.d(first, b);
        return a < b;
    });
    for (PointId p : cand) {
        std::vector<PointId> pts;
        pts.push_back(p);
        pts.insert(pts.end(), curve.points.begin(), curve.points.end());
        if (!end_still_geodesic(sp, pts, false)) continue;
        CausalCurve ext = CausalCurve::from_points(std::move(pts), false, curve.open_end);
        return ExtendResult{ExtendResult::Status::Extended, std::move(ext), ""};
    }
    ExtendResult r;
    r.status = ExtendResult::Status::Inextendible;
    r.curve = curve;
    if (near_frontier(sp, first))
        r.reason = sp.ambient_complete ? "boundary" : "ambient";
    else
        r.reason = "no limit point in carrier";
    return r;
}

TCReport check_TC(const SpaceDescription& sp, const SearchBudget& budget) {
    TCReport rep;
    const std::size_t n = sp.size();
    std::size_t seeds = 0;
    for (std::size_t x = 0; x < n && seeds < budget.max_seeds; ++x) {
        for (std::size_t y : sp.chron.row_indices(x)) {
            if (seeds >= budget.max_seeds) break;
            if (y == x) continue;
            ++seeds;
            CausalCurve curve;
            try {
                curve = find_maximal_curve(sp, PointId(x), PointId(y));
            } catch (const std::exception&) {
                continue;
            }
            const LengthResult len = tau_length(sp, curve);
            const double t = sp.tau_at(PointId(x), PointId(y));
            if (len.value.is_infinite() || std::fabs(len.value.value() - t) > kAbsTol) continue;
            if (classify_curve(sp, curve).cls != CurveClass::Timelike) continue;
            if (!is_geodesic(sp, curve).is_geodesic) continue;

            // Maximal extension in both directions within budget.
            curve.open_end = true;
            std::string future_reason = "budget";
            for (std::size_t s = 0; s < budget.max_extension_steps; ++s) {
                ExtendResult er = extend_geodesic(sp, curve);
                if (er.status == ExtendResult::Status::Extended) {
                    curve = std::move(er.curve);
                    curve.open_end = true;
                } else {
                    future_reason = er.reason;
                    break;
                }
            }
            curve.open_end = false;
            curve.open_start = true;
            std::string past_reason = "budget";
            for (std::size_t s = 0; s < budget.max_extension_steps; ++s) {
                ExtendResult er = extend_geodesic_past(sp, curve);
                if (er.status == ExtendResult::Status::Extended) {
                    curve = std::move(er.curve);
                    curve.open_start = true;
                } else {
                    past_reason = er.reason;
                    break;
                }
            }
            curve.open_start = false;

            const bool genuine_future = future_reason == "no limit point in carrier";
            const bool genuine_past = past_reason == "no limit point in carrier";
            if (!genuine_future && !genuine_past) continue;
            const LengthResult full = tau_length(sp, curve);
            if (full.value.is_infinite()) continue;
            if (classify_curve(sp, curve).cls != CurveClass::Timelike) continue;
            rep.holds_within_budget = false;
            rep.witness = curve;
            rep.witness_length = full.value.value();
            rep.witness_reason = genuine_future ? "future: " + future_reason
                                                : "past: " + past_reason;
            return rep;
        }
    }
    rep.holds_within_budget = true;
    return rep;
}

}  // namespace lls
