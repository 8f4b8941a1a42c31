#include "lorentzlen/exemplars.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "lorentzlen/models.hpp"
#include "lorentzlen/tolerances.hpp"

namespace lls {

namespace {

double euclid(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

// Distance of the segment uv to a point r (all same dimension).
double segment_distance(const std::vector<double>& u, const std::vector<double>& v,
                        const std::vector<double>& r) {
    double num = 0, den = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        num += (r[i] - u[i]) * (v[i] - u[i]);
        den += (v[i] - u[i]) * (v[i] - u[i]);
    }
    const double s = den > 0 ? std::max(0.0, std::min(1.0, num / den)) : 0.0;
    double d2 = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double c = u[i] + s * (v[i] - u[i]) - r[i];
        d2 += c * c;
    }
    return std::sqrt(d2);
}

void fill_metric(SpaceDescription& sp) {
    const std::size_t n = sp.coords.size();
    sp.dist.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = euclid(sp.coords[i], sp.coords[j]);
            sp.dist[i * n + j] = sp.dist[j * n + i] = d;
        }
}

// Per-point basis of metric balls at dyadic-ish radii, coarse to fine. The
// finest rung is below the lattice spacing, so it degenerates to the point
// itself on grids — that is what witnesses openness of dense subsets.
void fill_basis(SpaceDescription& sp) {
    const std::size_t n = sp.size();
    const double h = sp.resolution;
    const std::vector<double> radii = {4 * h, 2 * h, 1.5 * h, 0.75 * h};
    sp.nbhd_basis.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (double r : radii) {
            std::vector<PointId> ball;
            for (std::size_t j = 0; j < n; ++j)
                if (sp.d(PointId(i), PointId(j)) < r) ball.push_back(PointId(j));
            sp.nbhd_basis[i].push_back(std::move(ball));
        }
}

// Atlas: one chart per point, members = ball of radius 2 * step_radius,
// augmented so every member with a global chronological successor or
// predecessor also has one inside the chart; omega = tau restricted.
void fill_atlas(SpaceDescription& sp, bool regular) {
    const std::size_t n = sp.size();
    LocalisingAtlas atlas;
    atlas.regular = regular;
    atlas.charts.resize(n);
    const double r = 2 * sp.step_radius;
    for (std::size_t i = 0; i < n; ++i) {
        AtlasChart& ch = atlas.charts[i];
        ch.core_radius = r;
        for (std::size_t j = 0; j < n; ++j)
            if (sp.d(PointId(i), PointId(j)) <= r) ch.members.push_back(PointId(j));
        // Augmentation pass: one future/past step for chart-edge members.
        std::vector<char> inchart(n, 0);
        for (PointId m : ch.members) inchart[m] = 1;
        std::vector<PointId> extra;
        for (PointId m : ch.members) {
            bool glob_fut = false, loc_fut = false, glob_past = false, loc_past = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (sp.ll(m, PointId(j))) {
                    glob_fut = true;
                    if (inchart[j]) loc_fut = true;
                }
                if (sp.ll(PointId(j), m)) {
                    glob_past = true;
                    if (inchart[j]) loc_past = true;
                }
            }
            if (glob_fut && !loc_fut) {
                for (std::size_t j = 0; j < n; ++j)
                    if (sp.ll(m, PointId(j)) && sp.step_ok(m, PointId(j))) {
                        extra.push_back(PointId(j));
                        break;
                    }
            }
            if (glob_past && !loc_past) {
                for (std::size_t j = 0; j < n; ++j)
                    if (sp.ll(PointId(j), m) && sp.step_ok(PointId(j), m)) {
                        extra.push_back(PointId(j));
                        break;
                    }
            }
        }
        for (PointId e : extra)
            if (ch.local_index(e) == AtlasChart::npos) ch.members.push_back(e);
        std::sort(ch.members.begin(), ch.members.end());
        ch.members.erase(std::unique(ch.members.begin(), ch.members.end()), ch.members.end());
        const std::size_t k = ch.members.size();
        ch.omega.assign(k * k, 0.0);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                ch.omega[a * k + b] = sp.tau_at(ch.members[a], ch.members[b]);
    }
    sp.atlas = std::move(atlas);
}

constexpr double kClearance = 0.3;  // of resolution: step segments must miss
                                    // removed points by this much

struct FlatPatch {
    std::vector<std::array<double, 2>> pts;
    std::vector<std::array<double, 2>> removed;
    std::vector<bool> frontier;
};

FlatPatch flat_grid(double extent, double h, const ExemplarSpec& spec) {
    FlatPatch g;
    const int m = int(std::lround(2 * extent / h));
    for (int it = 0; it <= m; ++it)
        for (int ix = 0; ix <= m; ++ix) {
            const double t = -extent + it * h;
            const double x = -extent + ix * h;
            bool removed = false, frontier = false;
            if (spec.name == "punctured_patch" && std::fabs(t) < h / 2 && std::fabs(x) < h / 2)
                removed = true;
            if (spec.name == "slit_patch" && std::fabs(t) < h / 2 && std::fabs(x) <= extent / 2)
                removed = true;
            if (spec.name == "half_space_patch" && t > -h / 2) removed = true;
            if (it == 0 || it == m || ix == 0 || ix == m) frontier = true;
            // The half-space cut at t = 0 is the genuine edge of the carrier,
            // not a sampling artifact: its top row is not frontier.
            if (removed)
                g.removed.push_back({t, x});
            else {
                g.pts.push_back({t, x});
                g.frontier.push_back(frontier);
            }
        }
    return g;
}

bool cone_le(double dt, double dx) { return dt >= std::fabs(dx) - kAbsTol && dt >= -kAbsTol; }
bool cone_ll(double dt, double dx) { return dt > std::fabs(dx) + kAbsTol; }
double mink_tau(double dt, double dx) {
    const double s2 = dt * dt - dx * dx;
    return cone_le(dt, dx) && s2 > 0 ? std::sqrt(s2) : 0.0;
}

void fill_blocked_steps(SpaceDescription& sp, const std::vector<std::array<double, 2>>& removed) {
    if (removed.empty()) return;
    const std::size_t n = sp.size();
    const double clear = kClearance * sp.resolution;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !sp.causal.get(i, j)) continue;
            if (sp.step_radius > 0 && sp.d(PointId(i), PointId(j)) > sp.step_radius * (1 + 1e-12))
                continue;
            for (const auto& r : removed) {
                std::vector<double> rr(sp.coords[i].size(), 0.0);
                rr[0] = r[0];
                rr[1] = r[1];
                if (segment_distance(sp.coords[i], sp.coords[j], rr) < clear) {
                    sp.blocked_steps.insert({PointId(i), PointId(j)});
                    break;
                }
            }
        }
}

// Resolved cone mask for flat-type grids: directions with |dx| <= dt/2 are
// realizable by (1,0)/(2,1)-type steps to within the scaled tolerance; exact
// lattice null diagonals are realizable exactly.
bool flat_resolved(double dt, double dx, double h) {
    if (dt <= 0) return false;
    if (std::fabs(dx) <= dt / 2 + kAbsTol) return true;
    const double k = std::fabs(dx) / h;
    return std::fabs(dt - std::fabs(dx)) < kAbsTol && std::fabs(k - std::lround(k)) < 1e-9;
}

SpaceDescription build_flat_patch(const ExemplarSpec& spec) {
    const double h = spec.resolution, E = spec.extent;
    FlatPatch g = flat_grid(E, h, spec);
    SpaceDescription sp;
    const std::size_t n = g.pts.size();
    sp.coords.resize(n);
    for (std::size_t i = 0; i < n; ++i) sp.coords[i] = {g.pts[i][0], g.pts[i][1]};
    sp.resolution = h;
    sp.step_radius = 2 * std::sqrt(2.0) * h;
    sp.tau_lipschitz = 8.0;
    sp.ambient_complete = false;
    fill_metric(sp);

    sp.chron = BitMatrix(n);
    sp.causal = BitMatrix(n);
    sp.tau.assign(n * n, 0.0);
    sp.resolved = BitMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        sp.causal.set(i, i);
        sp.resolved.set(i, i);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double dt = g.pts[j][0] - g.pts[i][0];
            const double dx = g.pts[j][1] - g.pts[i][1];
            if (cone_le(dt, dx)) {
                sp.causal.set(i, j);
                sp.tau[i * n + j] = mink_tau(dt, dx);
                if (cone_ll(dt, dx)) sp.chron.set(i, j);
                if (flat_resolved(dt, dx, h)) sp.resolved.set(i, j);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (g.frontier[i]) sp.ambient_frontier.insert(PointId(i));
    fill_blocked_steps(sp, g.removed);

    if (!g.removed.empty() && spec.name != "slit_patch") {
        // A removed sample point cuts every null line through it: such pairs
        // have no connecting causal curve left, so the cone relation is
        // dropped. Causal pairs whose chord merely grazes the hole keep their
        // relation but leave the resolved mask (step chains must detour).
        const double clear = kClearance * h;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || !sp.causal.get(i, j)) continue;
                const double dt = g.pts[j][0] - g.pts[i][0];
                const double dx = g.pts[j][1] - g.pts[i][1];
                bool grazes = false;
                for (const auto& r : g.removed) {
                    std::vector<double> rr = {r[0], r[1]};
                    if (segment_distance(sp.coords[i], sp.coords[j], rr) < clear) {
                        grazes = true;
                        break;
                    }
                }
                if (!grazes) continue;
                if (std::fabs(dt - std::fabs(dx)) < kAbsTol) {
                    sp.causal.set(i, j, false);
                    sp.tau[i * n + j] = 0.0;
                }
                sp.resolved.set(i, j, false);
            }
    }

    if (spec.name == "slit_patch") {
        // The slit severs the carrier: relations are what chains can still
        // realize, and tau is the induced chain supremum. Derived from the
        // cone-rule matrices already in place.
        const BitMatrix reach = sp.step_closure();
        BitMatrix causal2(n), chron2(n);
        std::vector<double> tau2(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            causal2.set(i, i);
            // Longest chain values from i under the cone-rule tau weights.
            std::vector<double> val(n, -1.0);
            val[i] = 0.0;
            // Points in t-order already (grid construction order): one sweep
            // suffices since steps increase t.
            for (std::size_t u = 0; u < n; ++u) {
                if (val[u] < 0) continue;
                for (std::size_t v = u + 1; v < n; ++v)
                    if (sp.step_ok(PointId(u), PointId(v)))
                        val[v] = std::max(val[v], val[u] + sp.tau[u * n + v]);
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || !reach.get(i, j)) continue;
                causal2.set(i, j);
                tau2[i * n + j] = std::max(0.0, val[j]);
                if (tau2[i * n + j] > 0) chron2.set(i, j);
            }
        }
        sp.causal = std::move(causal2);
        sp.chron = std::move(chron2);
        sp.tau = std::move(tau2);
        // Resolved where the cone mask holds and the straight segment stays
        // clear of the slit.
        BitMatrix res2(n);
        for (std::size_t i = 0; i < n; ++i) {
            res2.set(i, i);
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || !sp.resolved.get(i, j) || !sp.causal.get(i, j)) continue;
                bool clear = true;
                for (const auto& r : g.removed) {
                    std::vector<double> rr = {r[0], r[1]};
                    if (segment_distance(sp.coords[i], sp.coords[j], rr) < 2 * h) {
                        clear = false;
                        break;
                    }
                }
                if (clear) res2.set(i, j);
            }
        }
        sp.resolved = std::move(res2);
    }

    fill_basis(sp);
    fill_atlas(sp, true);
    return sp;
}

SpaceDescription build_model_patch(const ExemplarSpec& spec) {
    const double h = spec.resolution, E = spec.extent;
    const ModelSpace model{spec.K};
    SpaceDescription sp;
    const int m = int(std::lround(2 * E / h));
    for (int ia = 0; ia <= m; ++ia)
        for (int ib = 0; ib <= m; ++ib)
            sp.coords.push_back({-E + ia * h, -E + ib * h});
    const std::size_t n = sp.coords.size();
    sp.resolution = h;
    sp.step_radius = 2 * std::sqrt(2.0) * h;
    sp.tau_lipschitz = 8.0;
    sp.ambient_complete = false;
    fill_metric(sp);

    sp.chron = BitMatrix(n);
    sp.causal = BitMatrix(n);
    sp.tau.assign(n * n, 0.0);
    sp.resolved = BitMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        sp.causal.set(i, i);
        sp.resolved.set(i, i);
        const ModelPoint p{{sp.coords[i][0], sp.coords[i][1]}};
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const ModelPoint q{{sp.coords[j][0], sp.coords[j][1]}};
            if (!model_causal(model, p, q)) continue;
            sp.causal.set(i, j);
            const ExtReal t = tau_model(model, p, q);
            sp.tau[i * n + j] = t.value();
            if (t > ExtReal(0.0)) sp.chron.set(i, j);
            // Chains realize tau exactly only along the coordinate time axis
            // in the curved covers.
            if (std::fabs(sp.coords[i][1] - sp.coords[j][1]) < kAbsTol) sp.resolved.set(i, j);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const int ia = int(i) / (m + 1), ib = int(i) % (m + 1);
        if (ia == 0 || ia == m || ib == 0 || ib == m) sp.ambient_frontier.insert(PointId(i));
    }
    fill_basis(sp);
    fill_atlas(sp, true);
    return sp;
}

SpaceDescription build_fan_space(const ExemplarSpec& spec) {
    const double h = spec.resolution, E = spec.extent;
    SpaceDescription sp;
    const int m = int(std::lround(2 * E / h));
    // N plane points (t, x, 0); the origin carries the gluing.
    for (int it = 0; it <= m; ++it)
        for (int ix = 0; ix <= m; ++ix)
            sp.coords.push_back({-E + it * h, -E + ix * h, 0.0});
    const std::size_t n_plane = sp.coords.size();
    // Gamma points (0, 0, z), z = h .. 2E.
    const int mz = int(std::lround(2 * E / h));
    for (int iz = 1; iz <= mz; ++iz) sp.coords.push_back({0.0, 0.0, iz * h});
    const std::size_t n = sp.coords.size();

    sp.resolution = h;
    sp.step_radius = 2 * std::sqrt(2.0) * h;
    sp.tau_lipschitz = 8.0;
    sp.ambient_complete = false;
    fill_metric(sp);

    auto is_gamma = [&](std::size_t i) { return i >= n_plane; };
    auto zcoord = [&](std::size_t i) { return sp.coords[i][2]; };
    std::size_t origin = n;
    for (std::size_t i = 0; i < n_plane; ++i)
        if (std::fabs(sp.coords[i][0]) < h / 2 && std::fabs(sp.coords[i][1]) < h / 2) origin = i;
    if (origin == n) throw std::runtime_error("fan grid does not contain the origin");

    sp.chron = BitMatrix(n);
    sp.causal = BitMatrix(n);
    sp.tau.assign(n * n, 0.0);
    sp.resolved = BitMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        sp.causal.set(i, i);
        sp.resolved.set(i, i);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            double tau = 0;
            bool le = false, ll = false, resolved = false;
            if (!is_gamma(i) && !is_gamma(j)) {
                const double dt = sp.coords[j][0] - sp.coords[i][0];
                const double dx = sp.coords[j][1] - sp.coords[i][1];
                le = cone_le(dt, dx);
                ll = cone_ll(dt, dx);
                tau = mink_tau(dt, dx);
                resolved = flat_resolved(dt, dx, h);
            } else if (is_gamma(i) && is_gamma(j)) {
                le = zcoord(i) <= zcoord(j);
                ll = zcoord(i) < zcoord(j);
                tau = le ? zcoord(j) - zcoord(i) : 0.0;
                resolved = le;
            } else if (!is_gamma(i) && is_gamma(j)) {
                const double t = sp.coords[i][0], x = sp.coords[i][1];
                const bool le0 = cone_le(-t, -x);  // i <= origin
                const bool ll0 = cone_ll(-t, -x);
                if (i == origin) {
                    le = ll = true;  // Gamma rule: z = 0 < z
                    tau = zcoord(j);
                    resolved = true;
                } else if (le0) {
                    le = true;
                    // tau must stay positive exactly when the pair is
                    // chronological; the null boundary of J-(0) reaches
                    // Gamma with tau = z > 0, so it is chronological too.
                    ll = true;
                    tau = mink_tau(-t, -x) + zcoord(j);
                    resolved = flat_resolved(-t, -x, h);
                }
            }
            // Gamma never precedes the plane.
            if (le) {
                sp.causal.set(i, j);
                sp.tau[i * n + j] = tau;
                if (ll) sp.chron.set(i, j);
                if (resolved) sp.resolved.set(i, j);
            }
        }
    }

    // Frontier: plane box edge and the top of the sampled ray.
    for (std::size_t i = 0; i < n_plane; ++i) {
        const int it = int(i) / (m + 1), ix = int(i) % (m + 1);
        if (it == 0 || it == m || ix == 0 || ix == m) sp.ambient_frontier.insert(PointId(i));
    }
    sp.ambient_frontier.insert(PointId(n - 1));

    // Null-boundary plane points reach Gamma chronologically but have no
    // short timelike step toward it; the gluing admits a direct one.
    const PointId z1 = PointId(n_plane);  // (0, 0, h)
    for (std::size_t i = 0; i < n_plane; ++i) {
        if (i == origin) continue;
        const double t = sp.coords[i][0], x = sp.coords[i][1];
        if (cone_le(-t, -x) && !cone_ll(-t, -x))
            sp.extra_steps.insert({PointId(i), z1});
    }

    fill_basis(sp);
    fill_atlas(sp, true);
    return sp;
}

SpaceDescription build_toy_dag() {
    SpaceDescription sp;
    sp.coords = {{0, 0}, {1, 0}, {2, -0.5}, {2, 0.5}, {3, 0}};
    const std::size_t n = 5;
    sp.resolution = 0.0;
    sp.step_radius = 0.0;
    sp.tau_lipschitz = 0.0;
    fill_metric(sp);
    sp.chron = BitMatrix(n);
    sp.causal = BitMatrix(n);
    sp.tau.assign(n * n, 0.0);
    auto rel = [&](std::size_t i, std::size_t j, double t) {
        sp.causal.set(i, j);
        sp.chron.set(i, j);
        sp.tau[i * n + j] = t;
    };
    for (std::size_t i = 0; i < n; ++i) sp.causal.set(i, i);
    // s=0, m=1, branches b1=2 / b2=3, e=4; tau additive along both routes.
    rel(0, 1, 1);
    rel(0, 2, 2);
    rel(0, 3, 2);
    rel(0, 4, 3);
    rel(1, 2, 1);
    rel(1, 3, 1);
    rel(1, 4, 2);
    rel(2, 4, 1);
    rel(3, 4, 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<PointId> all;
        for (std::size_t j = 0; j < n; ++j) all.push_back(PointId(j));
        sp.nbhd_basis.push_back({all, {PointId(i)}});
    }
    LocalisingAtlas atlas;
    atlas.regular = true;
    AtlasChart ch;
    for (std::size_t j = 0; j < n; ++j) ch.members.push_back(PointId(j));
    ch.omega = sp.tau;
    atlas.charts.assign(n, ch);
    sp.atlas = std::move(atlas);
    return sp;
}

}  // namespace

SpaceDescription build_exemplar(const ExemplarSpec& spec) {
    if (spec.name == "toy_dag") return build_toy_dag();
    if (spec.resolution <= 0 || spec.extent <= 0)
        throw std::invalid_argument("exemplar needs positive extent and resolution");
    if (spec.name == "minkowski_patch" || spec.name == "punctured_patch" ||
        spec.name == "slit_patch" || spec.name == "half_space_patch")
        return build_flat_patch(spec);
    if (spec.name == "model_patch") return build_model_patch(spec);
    if (spec.name == "fan_space") return build_fan_space(spec);
    throw std::invalid_argument("unknown exemplar kind: " + spec.name);
}

SpaceDescription sprinkle(const SprinklingSpec& spec) {
    if (spec.density <= 0 || spec.extent <= 0)
        throw std::invalid_argument("sprinkling needs positive extent and density");
    std::mt19937_64 rng(spec.seed);
    const double area = 4 * spec.extent * spec.extent;
    std::poisson_distribution<int> pois(spec.density * area);
    const int count = pois(rng);
    if (count == 0) throw std::runtime_error("sprinkling drew zero points");
    std::uniform_real_distribution<double> uni(-spec.extent, spec.extent);
    SpaceDescription sp;
    for (int i = 0; i < count; ++i) {
        const double a = uni(rng);
        const double b = uni(rng);
        sp.coords.push_back({a, b});
    }
    std::sort(sp.coords.begin(), sp.coords.end());
    const std::size_t n = sp.coords.size();
    const ModelSpace model{spec.K};
    sp.resolution = 0.0;
    sp.step_radius = 0.0;
    sp.tau_lipschitz = 0.0;
    sp.ambient_complete = false;
    fill_metric(sp);
    sp.chron = BitMatrix(n);
    sp.causal = BitMatrix(n);
    sp.tau.assign(n * n, 0.0);
    sp.resolved = BitMatrix(n);  // all false: no convergence claims
    for (std::size_t i = 0; i < n; ++i) {
        sp.causal.set(i, i);
        const ModelPoint p{{sp.coords[i][0], sp.coords[i][1]}};
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const ModelPoint q{{sp.coords[j][0], sp.coords[j][1]}};
            if (!model_causal(model, p, q)) continue;
            sp.causal.set(i, j);
            const ExtReal t = tau_model(model, p, q);
            sp.tau[i * n + j] = t.value();
            if (t > ExtReal(0.0)) sp.chron.set(i, j);
        }
    }
    return sp;
}

}  // namespace lls
