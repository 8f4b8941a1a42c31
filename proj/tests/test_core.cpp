#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "lorentzlen/axioms.hpp"
#include "lorentzlen/exemplars.hpp"
#include "lorentzlen/extreal.hpp"

using namespace lls;

namespace {

// Minimal abstract space: n isolated points, <= reflexive, tau = 0.
SpaceDescription tiny(std::size_t n) {
    SpaceDescription sp;
    sp.dist.assign(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) sp.dist[i * n + i] = 0.0;
    sp.chron = BitMatrix(n);
    sp.causal = BitMatrix(n);
    for (std::size_t i = 0; i < n; ++i) sp.causal.set(i, i);
    sp.tau.assign(n * n, 0.0);
    return sp;
}

void relate(SpaceDescription& sp, PointId a, PointId b, double t) {
    const std::size_t n = sp.causal.size();
    sp.causal.set(a, b);
    if (t > 0) {
        sp.chron.set(a, b);
        sp.tau[std::size_t(a) * n + b] = t;
    }
}

}  // namespace

TEST_CASE("extended reals") {
    CHECK(ExtReal(2.0) + ExtReal(3.0) == ExtReal(5.0));
    CHECK(ExtReal::infinity().is_infinite());
    CHECK((ExtReal(1.0) + ExtReal::infinity()).is_infinite());
    CHECK(ExtReal(1.0) < ExtReal::infinity());
    CHECK_THROWS(ExtReal(-1.0));
    CHECK_THROWS(ExtReal(std::numeric_limits<double>::quiet_NaN()));
}

TEST_CASE("causal space axioms accept a valid chain") {
    auto sp = tiny(3);
    relate(sp, 0, 1, 1.0);
    relate(sp, 1, 2, 1.0);
    relate(sp, 0, 2, 2.5);
    CHECK(check_causal_space(sp).passed());
    CHECK(check_prelength(sp).passed());
}

TEST_CASE("reflexivity violation is caught") {
    auto sp = tiny(2);
    sp.causal.set(1, 1, false);
    const auto rep = check_causal_space(sp);
    CHECK_FALSE(rep.passed());
    const auto* c = rep.find("le-reflexive");
    REQUIRE(c != nullptr);
    CHECK(c->verdict == Verdict::Fail);
    CHECK(c->witness == std::vector<PointId>{1});
}

TEST_CASE("transitivity violations are caught with lex-smallest witness") {
    auto sp = tiny(4);
    relate(sp, 0, 1, 1.0);
    relate(sp, 1, 2, 1.0);
    relate(sp, 2, 3, 1.0);
    relate(sp, 1, 3, 2.0);
    // 0 <= 1 <= 2 but no 0 <= 2
    const auto rep = check_causal_space(sp);
    const auto* c = rep.find("le-transitive");
    REQUIRE(c != nullptr);
    CHECK(c->verdict == Verdict::Fail);
    CHECK(c->witness == std::vector<PointId>{0, 1, 2});
}

TEST_CASE("chronological relation must sit inside the causal one") {
    auto sp = tiny(2);
    sp.chron.set(0, 1);
    sp.tau[1] = 1.0;
    const auto rep = check_causal_space(sp);
    const auto* c = rep.find("ll-in-le");
    REQUIRE(c != nullptr);
    CHECK(c->verdict == Verdict::Fail);
}

TEST_CASE("tau positivity must match the chronological relation") {
    auto sp = tiny(2);
    sp.causal.set(0, 1);
    sp.tau[1] = 1.0;  // tau > 0 without 0 << 1
    auto rep = check_prelength(sp);
    auto* c = rep.find("tau-null-positivity");
    REQUIRE(c != nullptr);
    CHECK(c->verdict == Verdict::Fail);

    auto sp2 = tiny(2);
    relate(sp2, 0, 1, 1.0);
    sp2.tau[1] = 0.0;  // 0 << 1 but tau = 0
    rep = check_prelength(sp2);
    c = rep.find("tau-null-positivity");
    REQUIRE(c != nullptr);
    CHECK(c->verdict == Verdict::Fail);
}

TEST_CASE("reverse triangle inequality violation is caught") {
    auto sp = tiny(3);
    relate(sp, 0, 1, 2.0);
    relate(sp, 1, 2, 2.0);
    relate(sp, 0, 2, 3.0);  // 3 < 2 + 2
    const auto rep = check_prelength(sp);
    const auto* c = rep.find("reverse-triangle");
    REQUIRE(c != nullptr);
    CHECK(c->verdict == Verdict::Fail);
    CHECK(c->witness == std::vector<PointId>{0, 1, 2});
}

TEST_CASE("chronology violation: a timelike cycle") {
    auto sp = tiny(2);
    relate(sp, 0, 1, 1.0);
    relate(sp, 1, 0, 1.0);
    sp.chron.set(0, 0);
    sp.chron.set(1, 1);
    sp.tau[0] = sp.tau[3] = 2.0;
    const auto rep = check_causality_ladder(sp);
    const auto* c = rep.find("chronology");
    REQUIRE(c != nullptr);
    CHECK(c->verdict == Verdict::Fail);
}

TEST_CASE("causality violation: a two-point causal loop") {
    auto sp = tiny(2);
    sp.causal.set(0, 1);
    sp.causal.set(1, 0);
    const auto rep = check_causality_ladder(sp);
    const auto* c = rep.find("causality");
    REQUIRE(c != nullptr);
    CHECK(c->verdict == Verdict::Fail);
}

TEST_CASE("futures and pasts on a three-chain") {
    auto sp = tiny(3);
    relate(sp, 0, 1, 1.0);
    relate(sp, 1, 2, 1.0);
    relate(sp, 0, 2, 2.0);
    CHECK(chronological_future(sp, 0) == std::vector<PointId>{1, 2});
    CHECK(chronological_past(sp, 2) == std::vector<PointId>{0, 1});
    CHECK(causal_future(sp, 1) == std::vector<PointId>{1, 2});
    CHECK(causal_past(sp, 0) == std::vector<PointId>{0});
}

TEST_CASE("ladder and closedness are not checkable without a basis") {
    auto sp = tiny(3);
    const auto rep = check_locally_causally_closed(sp);
    const auto* c = rep.find("local-causal-closedness");
    REQUIRE(c != nullptr);
    CHECK(c->verdict == Verdict::NotCheckable);
    const auto loc = check_localisable(sp);
    CHECK(loc.find("localisable") != nullptr);
    CHECK(loc.find("localisable")->verdict == Verdict::NotCheckable);
}

TEST_CASE("closedness violation at accumulating boundary points") {
    // points on a line converging to index 0; relation holds along the
    // sequence but fails in the limit
    const std::size_t n = 6;
    auto sp = tiny(n);
    std::vector<double> pos(n);
    pos[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) pos[i] = 1.0 / double(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sp.dist[i * n + j] = std::fabs(pos[i] - pos[j]);
    // n-1 <= ... <= 2 <= 1, but the limit point 0 is unrelated
    for (std::size_t i = 2; i < n; ++i)
        for (std::size_t j = 1; j < i; ++j) sp.causal.set(i, j);
    sp.nbhd_basis.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<PointId> coarse, fine;
        for (std::size_t j = 0; j < n; ++j) {
            if (sp.dist[i * n + j] <= 2.0) coarse.push_back(PointId(j));
            if (sp.dist[i * n + j] <= 0.15) fine.push_back(PointId(j));
        }
        sp.nbhd_basis[i] = {coarse, fine};
    }
    sp.resolution = 1.0;
    const auto rep = check_locally_causally_closed(sp);
    const auto* c = rep.find("local-causal-closedness");
    REQUIRE(c != nullptr);
    CHECK(c->verdict == Verdict::Fail);
}

TEST_CASE("exemplar grids pass the axiom batteries") {
    for (const char* name : {"minkowski_patch", "fan_space", "punctured_patch",
                             "half_space_patch", "slit_patch", "toy_dag"}) {
        CAPTURE(name);
        ExemplarSpec spec;
        spec.name = name;
        const auto sp = build_exemplar(spec);
        CHECK(check_causal_space(sp).passed());
        CHECK(check_prelength(sp).passed());
        CHECK(check_causality_ladder(sp).passed());
        CHECK(check_locally_causally_closed(sp).passed());
        CHECK(check_causally_path_connected(sp).passed());
    }
}

TEST_CASE("curved exemplar grids pass the axiom batteries") {
    for (double K : {1.0, -1.0}) {
        CAPTURE(K);
        ExemplarSpec spec;
        spec.name = "model_patch";
        spec.K = K;
        spec.extent = 1.0;
        const auto sp = build_exemplar(spec);
        CHECK(check_causal_space(sp).passed());
        CHECK(check_prelength(sp).passed());
        CHECK(check_causality_ladder(sp).passed());
        CHECK(check_causally_path_connected(sp).passed());
    }
}

TEST_CASE("exemplar atlases are regularly localisable") {
    for (const char* name : {"minkowski_patch", "fan_space", "punctured_patch"}) {
        CAPTURE(name);
        ExemplarSpec spec;
        spec.name = name;
        const auto sp = build_exemplar(spec);
        REQUIRE(sp.atlas.has_value());
        CHECK(sp.atlas->regular);
        const auto rep = check_localisable(sp);
        CHECK(rep.passed());
        const auto* reg = rep.find("loc-regular");
        REQUIRE(reg != nullptr);
        CHECK(reg->verdict == Verdict::Pass);
    }
}
