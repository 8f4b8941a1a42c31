// lls - command-line front end for the lorentzlen toolkit.
//
// JSON machine output on stdout, human summary on stderr.
// Exit codes: 0 all checks pass, 1 a check failed, 2 structural/usage error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lorentzlen/axioms.hpp"
#include "lorentzlen/curvature.hpp"
#include "lorentzlen/curves.hpp"
#include "lorentzlen/exemplars.hpp"
#include "lorentzlen/extension.hpp"
#include "lorentzlen/json_io.hpp"
#include "lorentzlen/models.hpp"
#include "lorentzlen/tolerances.hpp"

using nlohmann::json;
using namespace lls;

namespace {

void apply_env_tolerances() {
    if (const char* v = std::getenv("LLS_ABS_TOL")) kAbsTol = std::stod(v);
    if (const char* v = std::getenv("LLS_REL_TOL")) kRelTol = std::stod(v);
}

json axiom_check_json(const AxiomCheck& c) {
    json j;
    j["name"] = c.name;
    j["verdict"] = verdict_name(c.verdict);
    j["witness"] = c.witness;
    j["detail"] = c.detail;
    j["advisory"] = c.advisory;
    return j;
}

json axiom_report_json(const AxiomReport& r) {
    json checks = json::array();
    for (const AxiomCheck& c : r.checks) checks.push_back(axiom_check_json(c));
    json j;
    j["checks"] = std::move(checks);
    j["passed"] = r.passed();
    return j;
}

json curve_json(const CausalCurve& c) {
    json j;
    j["points"] = c.points;
    j["params"] = c.params;
    j["open_end"] = json::array({c.open_start, c.open_end});
    return j;
}

json tc_report_json(const TCReport& r) {
    json j;
    j["holds_within_budget"] = r.holds_within_budget;
    if (r.witness) {
        j["witness"] = curve_json(*r.witness);
        j["witness_length"] = r.witness_length;
        j["witness_reason"] = r.witness_reason;
    }
    return j;
}

json curvature_json(const CurvatureVerdict& v) {
    json j;
    j["verdict"] = verdict_name(v.verdict);
    j["K"] = v.K;
    j["direction"] = v.bound == BoundKind::Below ? "below" : "above";
    j["triangles_checked"] = v.triangles_checked;
    j["pairs_checked"] = v.pairs_checked;
    if (v.witness_triangle) {
        const AdmissibleTriangle& t = *v.witness_triangle;
        j["witness_triangle"] = {{"x", t.x}, {"y", t.y}, {"z", t.z},
                                 {"sides", {t.sides.a, t.sides.b, t.sides.c}}};
    }
    if (v.witness_pair) {
        j["witness_pair"] = {{"p", v.witness_pair->p},
                             {"q", v.witness_pair->q},
                             {"tau_space", v.witness_pair->tau_space},
                             {"tau_comparison", v.witness_pair->tau_comparison}};
    }
    j["detail"] = v.detail;
    return j;
}

json branch_json(const BranchWitness& b) {
    json j;
    j["branch_point"] = b.branch_point;
    j["from"] = b.from;
    j["chain1"] = b.chain1;
    j["chain2"] = b.chain2;
    return j;
}

json clause_json(const ClauseResult& c) {
    json j;
    j["name"] = c.name;
    j["verdict"] = verdict_name(c.verdict);
    j["witness"] = c.witness;
    j["detail"] = c.detail;
    return j;
}

std::string curve_class_name(CurveClass c) {
    switch (c) {
        case CurveClass::Causal: return "causal";
        case CurveClass::Timelike: return "timelike";
        case CurveClass::Null: return "null";
        default: return "invalid";
    }
}

int emit(const json& report, bool ok, const std::string& summary) {
    std::cout << report.dump(2) << "\n";
    std::cerr << (ok ? "PASS" : "FAIL") << ": " << summary << "\n";
    return ok ? 0 : 1;
}

// "(a,b,c)" or "a,b,c" -> coordinate tuple.
std::vector<double> parse_tuple(std::string s) {
    std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == ' '; });
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

PointId locate(const SpaceDescription& sp, const std::string& arg) {
    // Accept a bare point id or a coordinate tuple.
    if (arg.find(',') == std::string::npos && arg.find('(') == std::string::npos) {
        const unsigned long id = std::stoul(arg);
        if (id >= sp.size()) throw CLI::ValidationError("point id out of range: " + arg);
        return PointId(id);
    }
    const std::vector<double> c = parse_tuple(arg);
    for (std::size_t i = 0; i < sp.size(); ++i) {
        if (sp.coords[i].size() != c.size()) continue;
        bool match = true;
        for (std::size_t k = 0; k < c.size(); ++k)
            if (std::abs(sp.coords[i][k] - c[k]) > 1e-9) {
                match = false;
                break;
            }
        if (match) return PointId(i);
    }
    throw CLI::ValidationError("no sample point at coordinates " + arg);
}

std::vector<PointId> parse_chain(const SpaceDescription& sp, const std::string& arg) {
    std::vector<PointId> chain;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ';')) chain.push_back(locate(sp, tok));
    if (chain.size() < 2) throw CLI::ValidationError("chain needs at least two points");
    return chain;
}

std::vector<PointId> region_near(const SpaceDescription& sp, PointId center, double radius) {
    std::vector<PointId> out;
    for (std::size_t i = 0; i < sp.size(); ++i)
        if (sp.d(center, PointId(i)) <= radius) out.push_back(PointId(i));
    return out;
}

ExtensionCandidate load_candidate(const SpaceDescription& base, const SpaceDescription& ambient,
                                  const std::string& map_path) {
    std::ifstream in(map_path);
    if (!in) throw CLI::ValidationError("cannot open " + map_path);
    json j;
    in >> j;
    ExtensionCandidate cand;
    cand.base = &base;
    cand.ambient = &ambient;
    cand.iota.assign(base.size(), 0);
    if (!j.is_array() || j.size() != base.size())
        throw CLI::ValidationError("map must list one [base, ambient] pair per base point");
    std::vector<bool> seen(base.size(), false);
    for (const json& e : j) {
        const std::size_t b = e.at(0).get<std::size_t>();
        const std::size_t a = e.at(1).get<std::size_t>();
        if (b >= base.size() || a >= ambient.size() || seen[b])
            throw CLI::ValidationError("bad map entry");
        seen[b] = true;
        cand.iota[b] = PointId(a);
    }
    return cand;
}

}  // namespace

int main(int argc, char** argv) {
    apply_env_tolerances();
    CLI::App app{"lorentzlen - verification toolkit for Lorentzian pre-length spaces"};
    app.require_subcommand(1);

    std::string space_path, which, from_arg, to_arg, chain_arg, out_path;
    std::string base_path, ambient_path, map_path, kind = "minkowski_patch", direction = "below";
    double K = 0.0, a_side = 1, b_side = 1, c_side = 2, extent = 2.0, resolution = 0.25;
    double density = 50.0, region_radius = 0.0;
    std::string region_center;
    std::uint64_t seed = 1;
    std::size_t max_seeds = 20000, max_steps = 10000, max_triangles = 200, samples = 11;
    std::vector<double> sweep_Ks = {0.0, 1.0, -1.0};

    CLI::App* c_check = app.add_subcommand("check", "axiom / structure checks");
    c_check->add_option("which", which, "axioms|ladder|localisable|length-space")->required();
    c_check->add_option("space", space_path, "space JSON file")->required();

    CLI::App* c_tau = app.add_subcommand("tau", "time separation of a point pair");
    c_tau->add_option("space", space_path)->required();
    c_tau->add_option("--from", from_arg, "point id or coordinate tuple")->required();
    c_tau->add_option("--to", to_arg)->required();

    CLI::App* c_len = app.add_subcommand("length", "tau-length of a chain");
    c_len->add_option("space", space_path)->required();
    c_len->add_option("--chain", chain_arg, "semicolon-separated ids or tuples")->required();

    CLI::App* c_geo = app.add_subcommand("geodesic", "local maximality of a chain");
    c_geo->add_option("space", space_path)->required();
    c_geo->add_option("--chain", chain_arg)->required();

    CLI::App* c_tc = app.add_subcommand("tc", "timelike-completeness witness search");
    c_tc->add_option("space", space_path)->required();
    c_tc->add_option("--max-seeds", max_seeds);
    c_tc->add_option("--max-extension-steps", max_steps);

    CLI::App* c_tri = app.add_subcommand("triangle", "realize a comparison triangle");
    c_tri->add_option("--K", K)->required();
    c_tri->add_option("--a", a_side)->required();
    c_tri->add_option("--b", b_side)->required();
    c_tri->add_option("--c", c_side)->required();

    CLI::App* c_curv = app.add_subcommand("curvature", "triangle-comparison curvature bound");
    c_curv->add_option("space", space_path)->required();
    c_curv->add_option("--K", K)->required();
    c_curv->add_option("--direction", direction, "below|above");
    c_curv->add_option("--region", region_center, "center id/tuple of the test region");
    c_curv->add_option("--radius", region_radius, "region radius (0 = whole space)");
    c_curv->add_option("--max-triangles", max_triangles);
    c_curv->add_option("--samples", samples);

    CLI::App* c_sweep = app.add_subcommand("sweep", "curvature sweep + branching scan");
    c_sweep->add_option("space", space_path)->required();
    c_sweep->add_option("--K", sweep_Ks, "curvature values to sweep");
    c_sweep->add_option("--region", region_center);
    c_sweep->add_option("--radius", region_radius);
    c_sweep->add_option("--max-triangles", max_triangles);

    CLI::App* c_ext = app.add_subcommand("extend", "full extension audit");
    c_ext->add_option("--base", base_path)->required();
    c_ext->add_option("--ambient", ambient_path)->required();
    c_ext->add_option("--map", map_path)->required();

    CLI::App* c_bdy = app.add_subcommand("boundary", "future/past boundary of an extension");
    c_bdy->add_option("--base", base_path)->required();
    c_bdy->add_option("--ambient", ambient_path)->required();
    c_bdy->add_option("--map", map_path)->required();

    CLI::App* c_build = app.add_subcommand("build", "build a named example space");
    c_build->set_help_flag("--help", "print help");  // frees -h for the grid step
    c_build->add_option("--kind", kind)->required();
    c_build->add_option("--h", resolution, "grid step");
    c_build->add_option("--extent", extent);
    c_build->add_option("--K", K);
    c_build->add_option("--out", out_path)->required();

    CLI::App* c_spr = app.add_subcommand("sprinkle", "Poisson sprinkling into a model box");
    c_spr->add_option("--density", density)->required();
    c_spr->add_option("--seed", seed)->required();
    c_spr->add_option("--extent", extent);
    c_spr->add_option("--K", K);
    c_spr->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_check) {
            const SpaceDescription sp = load_space(space_path);
            json rep = report_header("check " + which);
            AxiomReport r;
            if (which == "axioms") {
                const AxiomReport parts[] = {check_causal_space(sp), check_prelength(sp),
                                             check_locally_causally_closed(sp),
                                             check_causally_path_connected(sp)};
                for (const AxiomReport& p : parts)
                    r.checks.insert(r.checks.end(), p.checks.begin(), p.checks.end());
            } else if (which == "ladder") {
                r = check_causality_ladder(sp);
            } else if (which == "localisable") {
                r = check_localisable(sp);
            } else if (which == "length-space") {
                r = check_length_space(sp);
            } else {
                std::cerr << "unknown check: " << which << "\n";
                return 2;
            }
            rep["report"] = axiom_report_json(r);
            return emit(rep, r.passed(), "check " + which + " on " + space_path);
        }

        if (*c_tau) {
            const SpaceDescription sp = load_space(space_path);
            const PointId x = locate(sp, from_arg);
            const PointId y = locate(sp, to_arg);
            const double t = sp.tau_at(x, y);
            json rep = report_header("tau");
            rep["from"] = x;
            rep["to"] = y;
            rep["tau"] = std::isinf(t) ? json("inf") : json(t);
            std::ostringstream os;
            os << "tau = ";
            if (std::isinf(t))
                os << "inf";
            else
                os << t;
            return emit(rep, true, os.str());
        }

        if (*c_len) {
            const SpaceDescription sp = load_space(space_path);
            const CausalCurve curve = CausalCurve::from_points(parse_chain(sp, chain_arg));
            const CurveVerdict cls = classify_curve(sp, curve);
            const LengthResult lr = tau_length(sp, curve);
            json rep = report_header("length");
            rep["chain"] = curve.points;
            rep["class"] = curve_class_name(cls.cls);
            rep["length"] = extreal_to_json(lr.value);
            std::ostringstream os;
            os << "L_tau = " << (lr.value.is_infinite() ? std::string("inf")
                                                        : std::to_string(lr.value.value()));
            return emit(rep, cls.cls != CurveClass::Invalid, os.str());
        }

        if (*c_geo) {
            const SpaceDescription sp = load_space(space_path);
            const CausalCurve curve = CausalCurve::from_points(parse_chain(sp, chain_arg));
            const GeodesicVerdict v = is_geodesic(sp, curve);
            json rep = report_header("geodesic");
            rep["chain"] = curve.points;
            rep["is_geodesic"] = v.is_geodesic;
            rep["checkable"] = v.checkable;
            rep["detail"] = v.detail;
            if (v.failing_window) {
                rep["failing_window"] = {{"index", v.failing_window->index},
                                         {"window", {v.failing_window->c, v.failing_window->d}},
                                         {"witness_chain", v.failing_window->witness_chain},
                                         {"window_length", v.failing_window->window_length},
                                         {"witness_length", v.failing_window->witness_length}};
            }
            return emit(rep, v.is_geodesic, v.detail.empty() ? "geodesic check" : v.detail);
        }

        if (*c_tc) {
            const SpaceDescription sp = load_space(space_path);
            SearchBudget budget;
            budget.max_seeds = max_seeds;
            budget.max_extension_steps = max_steps;
            const TCReport r = check_TC(sp, budget);
            json rep = report_header("tc");
            rep["report"] = tc_report_json(r);
            return emit(rep, r.holds_within_budget,
                        r.holds_within_budget ? "no refutation witness within budget"
                                              : "refutation witness: " + r.witness_reason);
        }

        if (*c_tri) {
            const TriangleSides sides{a_side, b_side, c_side};
            json rep = report_header("triangle");
            rep["K"] = K;
            rep["sides"] = {sides.a, sides.b, sides.c};
            rep["size_bounds"] = check_size_bounds(sides, K);
            if (!check_size_bounds(sides, K))
                return emit(rep, false, "size bounds fail: no comparison triangle");
            const ComparisonTriangle tri = realize_triangle(ModelSpace{K}, sides);
            rep["x"] = tri.x.c;
            rep["y"] = tri.y.c;
            rep["z"] = tri.z.c;
            json sides_json = json::array();
            for (TriangleSide s : {TriangleSide::XY, TriangleSide::YZ, TriangleSide::XZ}) {
                json pts = json::array();
                for (int k = 0; k <= 10; ++k)
                    pts.push_back(corresponding_point(tri, s, k / 10.0).c);
                sides_json.push_back(std::move(pts));
            }
            rep["side_samples"] = std::move(sides_json);
            std::ostringstream os;
            os << "apex y = (" << tri.y.c[0] << ", " << tri.y.c[1] << ")";
            return emit(rep, true, os.str());
        }

        if (*c_curv || *c_sweep) {
            const SpaceDescription sp = load_space(space_path);
            std::vector<PointId> region;
            if (!region_center.empty() && region_radius > 0)
                region = region_near(sp, locate(sp, region_center), region_radius);
            if (*c_curv) {
                const BoundKind bk = direction == "above" ? BoundKind::Above : BoundKind::Below;
                const CurvatureVerdict v =
                    check_curvature_bound(sp, K, bk, region, samples, max_triangles);
                json rep = report_header("curvature");
                rep["report"] = curvature_json(v);
                return emit(rep, v.verdict != Verdict::Fail,
                            "curvature bounded " + direction + " by K: " + verdict_name(v.verdict));
            }
            const SingularityReport r = singularity_sweep(sp, sweep_Ks, region, samples,
                                                          max_triangles);
            json rep = report_header("sweep");
            json entries = json::array();
            for (const SweepEntry& e : r.sweep_results)
                entries.push_back({{"K", e.K},
                                   {"below", verdict_name(e.below)},
                                   {"above", verdict_name(e.above)}});
            json branches = json::array();
            for (const BranchWitness& b : r.branching_witnesses) branches.push_back(branch_json(b));
            rep["report"] = {{"sweep_results", std::move(entries)},
                             {"branching_witnesses", std::move(branches)},
                             {"unbounded_below", r.unbounded_below},
                             {"detail", r.detail}};
            return emit(rep, true, r.detail);
        }

        if (*c_ext || *c_bdy) {
            const SpaceDescription base = load_space(base_path);
            const SpaceDescription ambient = load_space(ambient_path);
            const ExtensionCandidate cand = load_candidate(base, ambient, map_path);
            if (*c_bdy) {
                const BoundaryReport r = compute_boundary(cand);
                json rep = report_header("boundary");
                json curves = json::array();
                for (const auto& ch : r.reaching_curves) curves.push_back(ch);
                rep["report"] = {{"future_boundary", r.future_boundary},
                                 {"past_boundary", r.past_boundary},
                                 {"reaching_curves", std::move(curves)}};
                std::ostringstream os;
                os << r.future_boundary.size() << " future / " << r.past_boundary.size()
                   << " past boundary points";
                return emit(rep, true, os.str());
            }
            const ExtensionReport ext = check_extension(cand);
            const ClauseResult mono = check_tau_monotone(cand);
            const BoundaryReport bdy = compute_boundary(cand);
            const ConsistencyReport cons = cross_check_inextendibility(cand);
            json rep = report_header("extend");
            json clauses = json::array();
            for (const ClauseResult& c : ext.clauses) clauses.push_back(clause_json(c));
            json curves = json::array();
            for (const auto& ch : bdy.reaching_curves) curves.push_back(ch);
            json hyps = json::array();
            for (const HypothesisCheck& h : cons.hypotheses)
                hyps.push_back({{"name", h.name},
                                {"verdict", verdict_name(h.verdict)},
                                {"detail", h.detail}});
            rep["extension"] = {{"clauses", std::move(clauses)},
                                {"is_extension", ext.is_extension()}};
            rep["tau_monotone"] = clause_json(mono);
            rep["boundary"] = {{"future_boundary", bdy.future_boundary},
                               {"past_boundary", bdy.past_boundary},
                               {"reaching_curves", std::move(curves)}};
            rep["consistency"] = {{"hypotheses", std::move(hyps)},
                                  {"inconsistency", cons.inconsistency},
                                  {"detail", cons.detail}};
            const bool ok = ext.is_extension() && mono.verdict == Verdict::Pass &&
                            !cons.inconsistency;
            std::ostringstream os;
            os << (ext.is_extension() ? "verified extension" : "not an extension") << "; "
               << bdy.future_boundary.size() + bdy.past_boundary.size() << " boundary points";
            return emit(rep, ok, os.str());
        }

        if (*c_build) {
            ExemplarSpec spec;
            spec.name = kind;
            spec.extent = extent;
            spec.resolution = resolution;
            spec.K = K;
            const SpaceDescription sp = build_exemplar(spec);
            save_space(sp, out_path);
            json rep = report_header("build");
            rep["kind"] = kind;
            rep["points"] = sp.size();
            rep["out"] = out_path;
            std::ostringstream os;
            os << "built " << kind << " with " << sp.size() << " points -> " << out_path;
            return emit(rep, true, os.str());
        }

        if (*c_spr) {
            SprinklingSpec spec;
            spec.extent = extent;
            spec.density = density;
            spec.K = K;
            spec.seed = seed;
            const SpaceDescription sp = sprinkle(spec);
            save_space(sp, out_path);
            json rep = report_header("sprinkle");
            rep["points"] = sp.size();
            rep["seed"] = seed;
            rep["out"] = out_path;
            std::ostringstream os;
            os << "sprinkled " << sp.size() << " points -> " << out_path;
            return emit(rep, true, os.str());
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
