#include "lorentzlen/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lorentzlen/tolerances.hpp"
#include "lorentzlen/version.hpp"

namespace lls {

namespace {

using nlohmann::json;

json tau_cell(double v) {
    if (std::isinf(v)) return json("inf");
    return json(v);
}

double tau_cell_parse(const json& j, const std::string& where) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
        throw std::runtime_error(where + ": only the string \"inf\" is allowed in tau");
    }
    if (!j.is_number()) throw std::runtime_error(where + ": tau entries must be numbers or \"inf\"");
    const double v = j.get<double>();
    if (std::isnan(v) || v < 0) throw std::runtime_error(where + ": tau entries must be >= 0");
    return v;
}

json edges_of(const BitMatrix& m) {
    json edges = json::array();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j : m.row_indices(i)) edges.push_back(json::array({i, j}));
    return edges;
}

BitMatrix edges_to_matrix(const json& j, std::size_t n, const std::string& where) {
    if (!j.is_object() || j.value("kind", "") != "edges" || !j.contains("edges"))
        throw std::runtime_error(where + ": expected {\"kind\":\"edges\",\"edges\":[...]}");
    BitMatrix m(n);
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::runtime_error(where + "/edges: entries must be [from, to]");
        const std::size_t a = e[0].get<std::size_t>();
        const std::size_t b = e[1].get<std::size_t>();
        if (a >= n || b >= n) throw std::runtime_error(where + "/edges: point id out of range");
        m.set(a, b, true);
    }
    return m;
}

json pair_set(const std::set<std::pair<PointId, PointId>>& s) {
    json out = json::array();
    for (const auto& [a, b] : s) out.push_back(json::array({a, b}));
    return out;
}

std::set<std::pair<PointId, PointId>> parse_pair_set(const json& j, std::size_t n,
                                                     const std::string& where) {
    std::set<std::pair<PointId, PointId>> out;
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::runtime_error(where + ": entries must be [from, to]");
        const std::size_t a = e[0].get<std::size_t>();
        const std::size_t b = e[1].get<std::size_t>();
        if (a >= n || b >= n) throw std::runtime_error(where + ": point id out of range");
        out.emplace(PointId(a), PointId(b));
    }
    return out;
}

}  // namespace

json space_to_json(const SpaceDescription& sp) {
    const std::size_t n = sp.size();
    json j;
    json points = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json p;
        p["id"] = i;
        if (i < sp.coords.size() && !sp.coords[i].empty()) p["coords"] = sp.coords[i];
        points.push_back(std::move(p));
    }
    j["points"] = std::move(points);

    json metric;
    metric["kind"] = "matrix";
    metric["values"] = sp.dist;
    j["metric"] = std::move(metric);

    json chron;
    chron["kind"] = "edges";
    chron["edges"] = edges_of(sp.chron);
    j["chron"] = std::move(chron);

    json causal;
    causal["kind"] = "edges";
    causal["edges"] = edges_of(sp.causal);
    j["causal"] = std::move(causal);

    json tau;
    tau["kind"] = "matrix";
    json tv = json::array();
    for (double v : sp.tau) tv.push_back(tau_cell(v));
    tau["values"] = std::move(tv);
    j["tau"] = std::move(tau);

    if (!sp.nbhd_basis.empty()) {
        json basis = json::array();
        for (const auto& rungs : sp.nbhd_basis) {
            json b = json::array();
            for (const auto& ball : rungs) b.push_back(ball);
            basis.push_back(std::move(b));
        }
        j["nbhd_basis"] = std::move(basis);
    }

    if (sp.atlas) {
        json atlas;
        atlas["regular"] = sp.atlas->regular;
        json charts = json::array();
        for (const AtlasChart& ch : sp.atlas->charts) {
            json c;
            c["members"] = ch.members;
            c["core_radius"] = ch.core_radius;
            json om = json::array();
            for (double v : ch.omega) om.push_back(tau_cell(v));
            c["omega"] = std::move(om);
            charts.push_back(std::move(c));
        }
        atlas["charts"] = std::move(charts);
        j["atlas"] = std::move(atlas);
    }

    j["ambient_complete"] = sp.ambient_complete;
    j["ambient_frontier"] = std::vector<PointId>(sp.ambient_frontier.begin(),
                                                 sp.ambient_frontier.end());
    j["resolution"] = sp.resolution;
    j["step_radius"] = sp.step_radius;
    j["tau_lipschitz"] = sp.tau_lipschitz;
    if (!sp.blocked_steps.empty()) j["blocked_steps"] = pair_set(sp.blocked_steps);
    if (!sp.extra_steps.empty()) j["extra_steps"] = pair_set(sp.extra_steps);
    if (sp.resolved.size() > 0) {
        json r;
        r["kind"] = "edges";
        r["edges"] = edges_of(sp.resolved);
        j["resolved"] = std::move(r);
    }
    return j;
}

SpaceDescription space_from_json(const json& j) {
    if (!j.is_object()) throw std::runtime_error("/: space document must be an object");
    if (!j.contains("points") || !j.at("points").is_array())
        throw std::runtime_error("/points: required array missing");
    SpaceDescription sp;
    const std::size_t n = j.at("points").size();
    sp.coords.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& p = j.at("points")[i];
        if (!p.is_object() || !p.contains("id"))
            throw std::runtime_error("/points: entries must be objects with an id");
        if (p.at("id").get<std::size_t>() != i)
            throw std::runtime_error("/points: ids must be 0..n-1 in order");
        if (p.contains("coords")) sp.coords[i] = p.at("coords").get<std::vector<double>>();
    }

    const json& metric = j.at("metric");
    if (metric.value("kind", "") != "matrix")
        throw std::runtime_error("/metric: only kind \"matrix\" is supported");
    sp.dist = metric.at("values").get<std::vector<double>>();
    if (sp.dist.size() != n * n) throw std::runtime_error("/metric/values: expected n*n entries");
    for (double v : sp.dist)
        if (std::isnan(v) || std::isinf(v) || v < 0)
            throw std::runtime_error("/metric/values: entries must be finite and >= 0");

    sp.chron = edges_to_matrix(j.at("chron"), n, "/chron");
    sp.causal = edges_to_matrix(j.at("causal"), n, "/causal");

    const json& tau = j.at("tau");
    if (tau.value("kind", "") != "matrix")
        throw std::runtime_error("/tau: only kind \"matrix\" is supported");
    const json& tv = tau.at("values");
    if (!tv.is_array() || tv.size() != n * n)
        throw std::runtime_error("/tau/values: expected n*n entries");
    sp.tau.resize(n * n);
    for (std::size_t i = 0; i < n * n; ++i) sp.tau[i] = tau_cell_parse(tv[i], "/tau/values");

    if (j.contains("nbhd_basis")) {
        const json& basis = j.at("nbhd_basis");
        if (!basis.is_array() || basis.size() != n)
            throw std::runtime_error("/nbhd_basis: expected one rung list per point");
        sp.nbhd_basis.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            for (const json& ball : basis[i]) {
                std::vector<PointId> ids;
                for (const json& v : ball) {
                    const std::size_t id = v.get<std::size_t>();
                    if (id >= n) throw std::runtime_error("/nbhd_basis: point id out of range");
                    ids.push_back(PointId(id));
                }
                sp.nbhd_basis[i].push_back(std::move(ids));
            }
    }

    if (j.contains("atlas")) {
        const json& atlas = j.at("atlas");
        LocalisingAtlas la;
        la.regular = atlas.value("regular", false);
        for (const json& cj : atlas.at("charts")) {
            AtlasChart ch;
            ch.core_radius = cj.value("core_radius", 0.0);
            for (const json& v : cj.at("members")) {
                const std::size_t id = v.get<std::size_t>();
                if (id >= n) throw std::runtime_error("/atlas/charts: member id out of range");
                ch.members.push_back(PointId(id));
            }
            const json& om = cj.at("omega");
            if (!om.is_array() || om.size() != ch.members.size() * ch.members.size())
                throw std::runtime_error("/atlas/charts: omega must be members^2 entries");
            for (const json& v : om) ch.omega.push_back(tau_cell_parse(v, "/atlas/charts/omega"));
            la.charts.push_back(std::move(ch));
        }
        sp.atlas = std::move(la);
    }

    sp.ambient_complete = j.value("ambient_complete", false);
    if (j.contains("ambient_frontier"))
        for (const json& v : j.at("ambient_frontier")) {
            const std::size_t id = v.get<std::size_t>();
            if (id >= n) throw std::runtime_error("/ambient_frontier: point id out of range");
            sp.ambient_frontier.insert(PointId(id));
        }
    sp.resolution = j.value("resolution", 0.0);
    sp.step_radius = j.value("step_radius", 0.0);
    sp.tau_lipschitz = j.value("tau_lipschitz", 0.0);
    if (j.contains("blocked_steps"))
        sp.blocked_steps = parse_pair_set(j.at("blocked_steps"), n, "/blocked_steps");
    if (j.contains("extra_steps"))
        sp.extra_steps = parse_pair_set(j.at("extra_steps"), n, "/extra_steps");
    if (j.contains("resolved")) sp.resolved = edges_to_matrix(j.at("resolved"), n, "/resolved");
    return sp;
}

SpaceDescription load_space(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return space_from_json(j);
}

void save_space(const SpaceDescription& sp, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << space_to_json(sp).dump(2) << "\n";
}

json report_header(const std::string& command) {
    json h;
    h["tool"] = "lorentzlen";
    h["version"] = kVersion;
    h["command"] = command;
    h["tolerances"] = {{"abs", kAbsTol}, {"rel", kRelTol}};
    return h;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "not_checkable";
    }
}

json extreal_to_json(const ExtReal& v) {
    if (v.is_infinite()) return json("inf");
    return json(v.value());
}

}  // namespace lls
