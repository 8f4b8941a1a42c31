#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lorentzlen/curves.hpp"
#include "lorentzlen/exemplars.hpp"
#include "oracles.hpp"

using namespace lls;

namespace {

SpaceDescription small_grid() {
    ExemplarSpec spec;
    spec.name = "minkowski_patch";
    spec.extent = 0.5;
    spec.resolution = 0.25;  // 5x5 = 25 points
    return build_exemplar(spec);
}

SpaceDescription default_grid() {
    ExemplarSpec spec;
    spec.name = "minkowski_patch";
    return build_exemplar(spec);
}

}  // namespace

TEST_CASE("curve classification") {
    const auto sp = small_grid();
    // locate (t, x) on the 5x5 grid
    auto at = [&](double t, double x) -> PointId {
        for (PointId i = 0; i < sp.size(); ++i)
            if (std::fabs(sp.coords[i][0] - t) < 1e-12 && std::fabs(sp.coords[i][1] - x) < 1e-12)
                return i;
        REQUIRE(false);
        return 0;
    };
    const auto timelike = CausalCurve::from_points({at(-0.5, 0), at(-0.25, 0), at(0, 0)});
    CHECK(classify_curve(sp, timelike).cls == CurveClass::Timelike);
    const auto null = CausalCurve::from_points({at(0, 0), at(0.25, 0.25), at(0.5, 0.5)});
    CHECK(classify_curve(sp, null).cls == CurveClass::Null);
    const auto mixed = CausalCurve::from_points({at(0, 0), at(0.25, 0.25), at(0.5, 0.25)});
    CHECK(classify_curve(sp, mixed).cls == CurveClass::Causal);
    const auto bad = CausalCurve::from_points({at(0, 0), at(0, 0.25)});
    const auto v = classify_curve(sp, bad);
    CHECK(v.cls == CurveClass::Invalid);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->first == 0);
}

TEST_CASE("tau_length equals brute-force partition minimization") {
    const auto sp = default_grid();
    std::mt19937_64 rng(20240817ull);
    for (int trial = 0; trial < 100; ++trial) {
        const auto chain = oracle::random_chain(sp, rng, 12);
        const auto curve = CausalCurve::from_points(chain);
        const auto lr = tau_length(sp, curve);
        REQUIRE_FALSE(lr.value.is_infinite());
        const double expect = oracle::partition_minimum(sp, chain);
        CHECK(lr.value.value() == expect);  // exact, not approximate
    }
}

TEST_CASE("compute_T equals exhaustive path enumeration on the 5x5 grid") {
    const auto sp = small_grid();
    for (PointId x = 0; x < sp.size(); ++x)
        for (PointId y = 0; y < sp.size(); ++y) {
            const ExtReal T = compute_T(sp, x, y);
            REQUIRE_FALSE(T.is_infinite());
            const auto ref = oracle::longest_chain(sp, x, y);
            CHECK(T.value() == (ref ? *ref : 0.0));  // exact, not approximate
        }
}

TEST_CASE("longest_values_from agrees with compute_T") {
    const auto sp = small_grid();
    for (PointId x = 0; x < sp.size(); x += 3) {
        const auto vals = longest_values_from(sp, x);
        REQUIRE(vals.size() == sp.size());
        for (PointId y = 0; y < sp.size(); ++y) {
            if (vals[y] < 0)
                CHECK(compute_T(sp, x, y).value() == 0.0);
            else
                CHECK(compute_T(sp, x, y).value() == vals[y]);
        }
    }
}

TEST_CASE("find_maximal_curve realizes T") {
    const auto sp = default_grid();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<PointId> pick(0, PointId(sp.size() - 1));
    int found = 0;
    while (found < 25) {
        const PointId x = pick(rng), y = pick(rng);
        if (x == y || !sp.le(x, y)) continue;
        ++found;
        const auto curve = find_maximal_curve(sp, x, y);
        REQUIRE(curve.points.front() == x);
        REQUIRE(curve.points.back() == y);
        const auto lr = tau_length(sp, curve);
        CHECK(lr.value.value() == doctest::Approx(compute_T(sp, x, y).value()).epsilon(1e-12));
    }
    CHECK_THROWS(find_maximal_curve(sp, 1, 0));
}

TEST_CASE("tau equals T on resolved pairs of the shipped exemplars") {
    for (const char* name : {"minkowski_patch", "fan_space", "punctured_patch", "toy_dag"}) {
        CAPTURE(name);
        ExemplarSpec spec;
        spec.name = name;
        const auto sp = build_exemplar(spec);
        const auto rep = check_length_space(sp);
        CHECK(rep.passed());
    }
}

TEST_CASE("maximal chains are geodesics; padded chains are not") {
    const auto sp = default_grid();
    const auto curve = find_maximal_curve(sp, 0, PointId(sp.size() - 1));
    const auto gv = is_geodesic(sp, curve);
    REQUIRE(gv.checkable);
    CHECK(gv.is_geodesic);

    // a zig-zag null detour between the same endpoints is not locally maximal
    auto at = [&](double t, double x) -> PointId {
        for (PointId i = 0; i < sp.size(); ++i)
            if (std::fabs(sp.coords[i][0] - t) < 1e-12 && std::fabs(sp.coords[i][1] - x) < 1e-12)
                return i;
        REQUIRE(false);
        return 0;
    };
    const auto zig = CausalCurve::from_points(
        {at(-0.5, 0), at(-0.25, 0.25), at(0, 0), at(0.25, 0.25), at(0.5, 0)});
    const auto gz = is_geodesic(sp, zig);
    REQUIRE(gz.checkable);
    CHECK_FALSE(gz.is_geodesic);
    REQUIRE(gz.failing_window.has_value());
    CHECK(gz.failing_window->witness_length > gz.failing_window->window_length + 1e-9);
}

TEST_CASE("extension inside the patch interior succeeds") {
    const auto sp = default_grid();
    auto curve = find_maximal_curve(sp, 0, PointId(sp.size() / 2));
    curve.open_end = true;
    const auto r = extend_geodesic(sp, curve);
    CHECK(r.status == ExtendResult::Status::Extended);
    CHECK(r.curve.points.size() == curve.points.size() + 1);
}

TEST_CASE("stalls at the sampled box edge are flagged as ambient, not genuine") {
    const auto sp = default_grid();
    const auto rep = check_TC(sp);
    CHECK(rep.holds_within_budget);
}

TEST_CASE("the punctured patch refutes TC with a genuine witness") {
    ExemplarSpec spec;
    spec.name = "punctured_patch";
    const auto sp = build_exemplar(spec);
    const auto rep = check_TC(sp);
    CHECK_FALSE(rep.holds_within_budget);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness_length > 0);
    CHECK(rep.witness_length < 10);
    CHECK(rep.witness_reason.find("ambient") == std::string::npos);

    // the witness replays: timelike geodesic, inextendible at the certified end
    auto w = *rep.witness;
    CHECK(classify_curve(sp, w).cls == CurveClass::Timelike);
    const auto gv = is_geodesic(sp, w);
    CHECK(gv.is_geodesic);
    if (rep.witness_reason.rfind("past", 0) == 0) {
        w.open_start = true;
        const auto er = extend_geodesic_past(sp, w);
        CHECK(er.status == ExtendResult::Status::Inextendible);
        CHECK(er.genuine());
    } else {
        w.open_end = true;
        const auto er = extend_geodesic(sp, w);
        CHECK(er.status == ExtendResult::Status::Inextendible);
        CHECK(er.genuine());
    }
}

TEST_CASE("the half-space patch refutes TC with a genuine witness") {
    ExemplarSpec spec;
    spec.name = "half_space_patch";
    const auto sp = build_exemplar(spec);
    const auto rep = check_TC(sp);
    CHECK_FALSE(rep.holds_within_budget);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness_length > 0);
    CHECK(rep.witness_reason.find("ambient") == std::string::npos);
    CHECK(classify_curve(sp, *rep.witness).cls == CurveClass::Timelike);
    CHECK(is_geodesic(sp, *rep.witness).is_geodesic);
}

TEST_CASE("degenerate curves are rejected by the classifier") {
    const auto sp = small_grid();
    CHECK(classify_curve(sp, CausalCurve::from_points({0})).cls == CurveClass::Invalid);
}
