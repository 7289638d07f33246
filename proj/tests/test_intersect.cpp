#include <catch2/catch_amalgamated.hpp>

#include "engel/builtins.hpp"
#include "engel/intersect.hpp"
#include "oracles.hpp"

using namespace engel;

TEST_CASE("embedded curves have no self-intersections") {
    REQUIRE(find_self_intersections(unknot_front()).empty());
    REQUIRE(find_self_intersections(unknot_horizontal_geiges()).empty());
    Curve3 tk = stereographic_torus_knot(5, 2);
    REQUIRE(find_self_intersections(tk).empty());
    REQUIRE(oracle::brute_double_points(tk).empty());
}

TEST_CASE("figure eight has exactly one double point, agreeing with brute force") {
    Curve3 c = figure_eight();
    auto found = find_self_intersections(c);
    auto brute = oracle::brute_double_points(c, 4096);
    REQUIRE(found.size() == 1);
    REQUIRE(brute.size() == 1);
    REQUIRE(std::fabs(found[0].t0 - brute[0].t0) < 1e-6);
    REQUIRE(std::fabs(found[0].t1 - brute[0].t1) < 1e-6);
    // designed location: visits at t = 1/4 and 3/4, point (0, z(1/4), w(1/4))
    REQUIRE(found[0].t0 == Catch::Approx(0.25).margin(1e-7));
    REQUIRE(found[0].t1 == Catch::Approx(0.75).margin(1e-7));
    REQUIRE(found[0].residual < 1e-9);
}

TEST_CASE("brute-force agreement across builtin families") {
    for (const Curve3& c : {figure_eight(), unknot_horizontal_geiges(), unknot_front()}) {
        auto found = find_self_intersections(c);
        auto brute = oracle::brute_double_points(c, 4096);
        REQUIRE(found.size() == brute.size());
        for (std::size_t i = 0; i < found.size(); ++i) {
            REQUIRE(std::fabs(found[i].t0 - brute[i].t0) < 1e-6);
            REQUIRE(std::fabs(found[i].t1 - brute[i].t1) < 1e-6);
        }
    }
}

TEST_CASE("intersection reports satisfy their invariants") {
    Curve3 c = figure_eight();
    for (const auto& s : find_self_intersections(c)) {
        REQUIRE(s.t0 < s.t1);
        REQUIRE((c.eval(s.t0) - c.eval(s.t1)).norm() == Catch::Approx(s.residual).margin(1e-12));
        REQUIRE(s.t1 - s.t0 > 1e-3);
        REQUIRE(1.0 - (s.t1 - s.t0) > 1e-3);
    }
}

TEST_CASE("non-generic doubled curve is rejected") {
    // x = sin 2πt, w = sin 6πt is invariant under u -> pi - u: a curve of double points
    Curve3 c = legendrian_from_trig(TrigPoly::sin_k(1), TrigPoly::sin_k(3), Frame::GeigesXZW);
    REQUIRE_THROWS_AS(find_self_intersections(c), NonGeneric);
}
