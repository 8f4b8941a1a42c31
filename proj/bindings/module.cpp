#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "lorentzlen/axioms.hpp"
#include "lorentzlen/curvature.hpp"
#include "lorentzlen/curves.hpp"
#include "lorentzlen/exemplars.hpp"
#include "lorentzlen/extension.hpp"
#include "lorentzlen/json_io.hpp"
#include "lorentzlen/models.hpp"
#include "lorentzlen/version.hpp"

namespace py = pybind11;
using namespace lls;
using nlohmann::json;

namespace {

// Reports cross into Python as plain dicts/lists via their JSON form.
py::object to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

json check_json(const AxiomReport& r) {
    json out = json::array();
    for (const auto& c : r.checks)
        out.push_back({{"name", c.name},
                       {"verdict", verdict_name(c.verdict)},
                       {"witness", c.witness},
                       {"detail", c.detail},
                       {"advisory", c.advisory}});
    return {{"passed", r.passed()}, {"checks", out}};
}

json clause_json(const ClauseResult& c) {
    return {{"name", c.name},
            {"verdict", verdict_name(c.verdict)},
            {"witness", c.witness},
            {"detail", c.detail}};
}

json branch_json(const BranchWitness& w) {
    return {{"branch_point", w.branch_point},
            {"from", w.from},
            {"chain1", w.chain1},
            {"chain2", w.chain2}};
}

AxiomReport run_check(const SpaceDescription& sp, const std::string& which) {
    if (which == "axioms") {
        AxiomReport all = check_causal_space(sp);
        for (auto& c : check_prelength(sp).checks) all.checks.push_back(std::move(c));
        for (auto& c : check_causally_path_connected(sp).checks)
            all.checks.push_back(std::move(c));
        for (auto& c : check_locally_causally_closed(sp).checks)
            all.checks.push_back(std::move(c));
        return all;
    }
    if (which == "ladder") return check_causality_ladder(sp);
    if (which == "localisable") return check_localisable(sp);
    if (which == "length-space") return check_length_space(sp);
    throw std::invalid_argument("unknown check: " + which);
}

}  // namespace

PYBIND11_MODULE(_lorentzlen, m) {
    m.doc() = "verification toolkit for Lorentzian pre-length spaces";
    m.attr("__version__") = kVersion;

    py::class_<SpaceDescription>(m, "Space")
        .def_property_readonly("size", &SpaceDescription::size)
        .def_property_readonly("coords",
                               [](const SpaceDescription& sp) { return sp.coords; })
        .def("tau", &SpaceDescription::tau_at)
        .def("d", &SpaceDescription::d)
        .def("le", &SpaceDescription::le)
        .def("ll", &SpaceDescription::ll)
        .def("to_json", [](const SpaceDescription& sp) { return to_py(space_to_json(sp)); })
        .def("__repr__", [](const SpaceDescription& sp) {
            return "<lorentzlen.Space with " + std::to_string(sp.size()) + " points>";
        });

    m.def(
        "build_exemplar",
        [](const std::string& name, double extent, double resolution, double K) {
            ExemplarSpec spec;
            spec.name = name;
            spec.extent = extent;
            spec.resolution = resolution;
            spec.K = K;
            return build_exemplar(spec);
        },
        py::arg("name"), py::arg("extent") = 2.0, py::arg("resolution") = 0.25,
        py::arg("K") = 0.0);
    m.def(
        "sprinkle",
        [](double extent, double density, double K, std::uint64_t seed) {
            return sprinkle({extent, density, K, seed});
        },
        py::arg("extent") = 1.0, py::arg("density") = 50.0, py::arg("K") = 0.0,
        py::arg("seed") = 1);
    m.def("load_space", &load_space, py::arg("path"));
    m.def("save_space", &save_space, py::arg("space"), py::arg("path"));

    m.def(
        "check",
        [](const SpaceDescription& sp, const std::string& which) {
            return to_py(check_json(run_check(sp, which)));
        },
        py::arg("space"), py::arg("which") = "axioms");

    m.def(
        "compute_T",
        [](const SpaceDescription& sp, PointId x, PointId y) {
            return compute_T(sp, x, y).value();
        },
        py::arg("space"), py::arg("x"), py::arg("y"));
    m.def(
        "tau_length",
        [](const SpaceDescription& sp, const std::vector<PointId>& chain) {
            return tau_length(sp, CausalCurve::from_points(chain)).value.value();
        },
        py::arg("space"), py::arg("chain"));
    m.def(
        "find_maximal_curve",
        [](const SpaceDescription& sp, PointId x, PointId y) {
            return find_maximal_curve(sp, x, y).points;
        },
        py::arg("space"), py::arg("x"), py::arg("y"));
    m.def(
        "is_geodesic",
        [](const SpaceDescription& sp, const std::vector<PointId>& chain) {
            const auto v = is_geodesic(sp, CausalCurve::from_points(chain));
            return to_py({{"is_geodesic", v.is_geodesic},
                          {"checkable", v.checkable},
                          {"detail", v.detail}});
        },
        py::arg("space"), py::arg("chain"));
    m.def(
        "check_TC",
        [](const SpaceDescription& sp) {
            const auto r = check_TC(sp);
            json out = {{"holds_within_budget", r.holds_within_budget},
                        {"witness_length", r.witness_length},
                        {"witness_reason", r.witness_reason}};
            out["witness"] = r.witness ? json(r.witness->points) : json();
            return to_py(out);
        },
        py::arg("space"));

    m.def(
        "tau_model",
        [](double K, std::pair<double, double> p, std::pair<double, double> q) {
            return tau_model(ModelSpace{K}, ModelPoint{{p.first, p.second}},
                             ModelPoint{{q.first, q.second}})
                .value();
        },
        py::arg("K"), py::arg("p"), py::arg("q"));
    m.def(
        "check_size_bounds",
        [](double a, double b, double c, double K) {
            return check_size_bounds({a, b, c}, K);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("K"));
    m.def(
        "realize_triangle",
        [](double K, double a, double b, double c) {
            const auto t = realize_triangle(ModelSpace{K}, {a, b, c});
            return to_py({{"x", t.x.c}, {"y", t.y.c}, {"z", t.z.c}});
        },
        py::arg("K"), py::arg("a"), py::arg("b"), py::arg("c"));

    m.def(
        "check_curvature_bound",
        [](const SpaceDescription& sp, double K, const std::string& bound) {
            const auto v = check_curvature_bound(
                sp, K, bound == "below" ? BoundKind::Below : BoundKind::Above);
            return to_py({{"verdict", verdict_name(v.verdict)},
                          {"K", v.K},
                          {"bound", bound},
                          {"triangles_checked", v.triangles_checked},
                          {"pairs_checked", v.pairs_checked},
                          {"detail", v.detail}});
        },
        py::arg("space"), py::arg("K"), py::arg("bound"));
    m.def(
        "detect_branching",
        [](const SpaceDescription& sp) {
            json out = json::array();
            for (const auto& w : detect_branching(sp)) out.push_back(branch_json(w));
            return to_py(out);
        },
        py::arg("space"));
    m.def(
        "singularity_sweep",
        [](const SpaceDescription& sp, const std::vector<double>& Ks) {
            const auto r = singularity_sweep(sp, Ks);
            json entries = json::array();
            for (const auto& e : r.sweep_results)
                entries.push_back({{"K", e.K},
                                   {"below", verdict_name(e.below)},
                                   {"above", verdict_name(e.above)}});
            json ws = json::array();
            for (const auto& w : r.branching_witnesses) ws.push_back(branch_json(w));
            return to_py({{"sweep_results", entries},
                          {"branching_witnesses", ws},
                          {"unbounded_below", r.unbounded_below},
                          {"detail", r.detail}});
        },
        py::arg("space"), py::arg("Ks") = std::vector<double>{0.0, 1.0, -1.0});

    m.def(
        "check_extension",
        [](const SpaceDescription& base, const SpaceDescription& amb,
           const std::vector<PointId>& iota) {
            const ExtensionCandidate cand{&base, &amb, iota};
            const auto rep = check_extension(cand);
            json clauses = json::array();
            for (const auto& c : rep.clauses) clauses.push_back(clause_json(c));
            const auto bdy = compute_boundary(cand);
            return to_py({{"is_extension", rep.is_extension()},
                          {"clauses", clauses},
                          {"tau_monotone", clause_json(check_tau_monotone(cand))},
                          {"future_boundary", bdy.future_boundary},
                          {"past_boundary", bdy.past_boundary}});
        },
        py::arg("base"), py::arg("ambient"), py::arg("iota"));
    m.def(
        "cross_check_inextendibility",
        [](const SpaceDescription& base, const SpaceDescription& amb,
           const std::vector<PointId>& iota) {
            const ExtensionCandidate cand{&base, &amb, iota};
            const auto rep = cross_check_inextendibility(cand);
            json hyps = json::array();
            for (const auto& h : rep.hypotheses)
                hyps.push_back({{"name", h.name},
                                {"verdict", verdict_name(h.verdict)},
                                {"detail", h.detail}});
            return to_py({{"hypotheses", hyps},
                          {"inconsistency", rep.inconsistency},
                          {"detail", rep.detail}});
        },
        py::arg("base"), py::arg("ambient"), py::arg("iota"));
}
