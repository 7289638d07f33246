#include <catch2/catch_amalgamated.hpp>

#include "engel/builtins.hpp"
#include "engel/curve.hpp"
#include "engel/project.hpp"
#include "engel/quadrature.hpp"
#include "engel/spline.hpp"
#include "oracles.hpp"

using namespace engel;

namespace {

Curve3 circle_geiges() {
    // x = cos 2πt, z = sin 2πt, w = 0 (not Legendrian; area tests only)
    Curve3 c;
    c.frame = Frame::GeigesXZW;
    c.samples = 4096;
    c.eval = [](double t) { return Vec3{{std::cos(tau * t), std::sin(tau * t), 0.0}}; };
    c.deriv = [](double t) { return Vec3{{-tau * std::sin(tau * t), tau * std::cos(tau * t), 0.0}}; };
    return c;
}

}  // namespace

TEST_CASE("builtin Legendrians satisfy their frame conditions exactly") {
    for (const Curve3& c : {unknot_front(), figure_eight(), unknot_horizontal_geiges()}) {
        REQUIRE(max_legendrian_residual(c) < 1e-10);
        REQUIRE((c.eval(0.0) - c.eval(1.0 - 1e-12)).norm() < 1e-9);
        REQUIRE(min_speed(c) > 1e-3);
    }
    REQUIRE(max_horizontal_residual(unknot_horizontal()) < 1e-10);
}

TEST_CASE("total_area of the unit circle front is -pi") {
    Curve3 c = circle_geiges();
    REQUIRE(total_area(c) == Catch::Approx(-std::numbers::pi).margin(1e-9));
    SECTION("z-reflection negates the value") {
        Curve3 m = c;
        m.eval = [e = c.eval](double t) {
            Vec3 p = e(t);
            p[1] = -p[1];
            return p;
        };
        m.deriv = [d = c.deriv](double t) {
            Vec3 v = d(t);
            v[1] = -v[1];
            return v;
        };
        REQUIRE(total_area(m) == Catch::Approx(std::numbers::pi).margin(1e-9));
    }
}

TEST_CASE("segment_area: full window, additivity, closed-form half circle") {
    Curve3 c = circle_geiges();
    double tot = total_area(c);
    REQUIRE(segment_area(c, 0.0, 1.0 - 1e-12) == Catch::Approx(tot).margin(1e-9));
    double s = 0.37;
    REQUIRE(segment_area(c, 0.0, s) + segment_area(c, s, 1.0 - 1e-12) ==
            Catch::Approx(tot).margin(1e-9));
    REQUIRE(segment_area(c, 0.0, 0.5) == Catch::Approx(-std::numbers::pi / 2).margin(1e-9));
    // independent fine-quadrature oracle
    double orc = oracle::simpson([&](double t) { return c.eval(t)[1] * c.deriv(t)[0]; }, 0.13, 0.61);
    REQUIRE(segment_area(c, 0.13, 0.61) == Catch::Approx(orc).margin(1e-10));
}

TEST_CASE("quadrature converges at least quadratically") {
    // smooth builtin: refinement differences stay at rounding level
    Curve3 f8 = figure_eight();
    double d1 = std::fabs(total_area(f8, 512) - total_area(f8, 1024));
    double d2 = std::fabs(total_area(f8, 1024) - total_area(f8, 2048));
    REQUIRE(d2 <= d1 / 4.0 + 1e-12);
    // C^2 spline curve: genuinely quadratic decay
    int m = 48;
    std::vector<double> ts(m), xs(m), zs(m), ws(m);
    for (int i = 0; i < m; ++i) {
        double t = static_cast<double>(i) / m;
        ts[i] = t;
        xs[i] = std::cos(tau * t);
        zs[i] = std::sin(tau * t) + 0.2 * std::sin(2 * tau * t);
        ws[i] = 0.0;
    }
    auto sx = std::make_shared<PeriodicSpline>(ts, xs);
    auto sz = std::make_shared<PeriodicSpline>(ts, zs);
    Curve3 c;
    c.frame = Frame::GeigesXZW;
    c.samples = 4096;
    c.eval = [sx, sz](double t) { return Vec3{{(*sx)(t), (*sz)(t), 0.0}}; };
    c.deriv = [sx, sz](double t) { return Vec3{{sx->derivative(t), sz->derivative(t), 0.0}}; };
    double e1 = std::fabs(total_area(c, 64) - total_area(c, 128));
    double e2 = std::fabs(total_area(c, 128) - total_area(c, 256));
    REQUIRE(e2 <= e1 / 3.0 + 1e-14);
}

TEST_CASE("figure eight: zero total area, four cusps") {
    Curve3 c = figure_eight();
    REQUIRE(std::fabs(total_area(c)) < 1e-9);
    REQUIRE(front_of(c).cusp_ts.size() == 4);
}

TEST_CASE("unknot front has exactly two cusps") {
    REQUIRE(front_of(unknot_front()).cusp_ts.size() == 2);
}

TEST_CASE("front cusp count equals sign changes of x' for x = cos 2 pi t") {
    Curve3 c = unknot_front();  // x = cos 2πt by construction
    auto f = front_of(c);
    REQUIRE(f.cusp_ts.size() == 2);
    REQUIRE(circ_dist(f.cusp_ts[0], 0.0) < 1e-6);
    REQUIRE(circ_dist(f.cusp_ts[1], 0.5) < 1e-6);
}

TEST_CASE("geiges projection of builtin horizontal families has zero area") {
    Curve4 h = unknot_horizontal();
    Curve3 g = geiges_project(h);
    REQUIRE(std::fabs(total_area(g, 4096)) < 1e-9);
    SECTION("constant-y translate projects identically") {
        Curve4 shifted = h;
        shifted.eval = [e = h.eval](double t) {
            Vec4 p = e(t);
            p[1] += 3.25;
            return p;
        };
        Curve3 g2 = geiges_project(shifted);
        for (int i = 0; i < 64; ++i) {
            double t = i / 64.0;
            REQUIRE((g2.eval(t) - g.eval(t)).norm() < 1e-12);
        }
    }
}

TEST_CASE("geiges projection rejects non-horizontal input") {
    Curve4 bad;
    bad.samples = 512;
    bad.eval = [](double t) { return Vec4{{std::cos(tau * t), std::sin(tau * t), 0.0, 0.0}}; };
    bad.deriv = [](double t) { return Vec4{{-tau * std::sin(tau * t), tau * std::cos(tau * t), 0.0, 0.0}}; };
    REQUIRE_THROWS_AS(geiges_project(bad), HorizontalViolation);
}

TEST_CASE("stereographic torus knot specials") {
    // (1,0): planar circle of radius 3 in the xy-plane
    Curve3 c = stereographic_torus_knot(1, 0);
    for (int i = 0; i < 32; ++i) {
        double t = i / 32.0;
        Vec3 p = c.eval(t);
        REQUIRE(std::hypot(p[0], p[1]) == Catch::Approx(3.0).margin(1e-12));
        REQUIRE(p[2] == Catch::Approx(0.0).margin(1e-12));
    }
    REQUIRE_THROWS_AS(stereographic_torus_knot(4, 2), BadParameters);
    // (p,-q) is the z-mirror of (p,q)
    Curve3 a = stereographic_torus_knot(5, 2), b = stereographic_torus_knot(5, -2);
    for (int i = 0; i < 64; ++i) {
        double t = i / 64.0;
        Vec3 pa = a.eval(t), pb = b.eval(t);
        REQUIRE(pa[0] == Catch::Approx(pb[0]).margin(1e-12));
        REQUIRE(pa[1] == Catch::Approx(pb[1]).margin(1e-12));
        REQUIRE(pa[2] == Catch::Approx(-pb[2]).margin(1e-12));
    }
}

TEST_CASE("periodic spline reproduces smooth samples") {
    int m = 64;
    std::vector<double> ts(m), ys(m);
    for (int i = 0; i < m; ++i) {
        ts[i] = static_cast<double>(i) / m;
        ys[i] = std::sin(tau * ts[i]) + 0.3 * std::cos(2 * tau * ts[i]);
    }
    PeriodicSpline s(ts, ys);
    for (int i = 0; i < 257; ++i) {
        double t = i / 257.0;
        double exact = std::sin(tau * t) + 0.3 * std::cos(2 * tau * t);
        double dexact = tau * std::cos(tau * t) - 0.6 * tau * std::sin(2 * tau * t);
        REQUIRE(s(t) == Catch::Approx(exact).margin(2e-5));
        REQUIRE(s.derivative(t) == Catch::Approx(dexact).margin(5e-3));
    }
}

TEST_CASE("lagrangian builder rejects non-closing data") {
    // v x' = 2π cos^2 has positive mean: z would be secular
    REQUIRE_THROWS_AS(legendrian_from_trig(TrigPoly::sin_k(1), TrigPoly::cos_k(1), Frame::GeigesXZW),
                      BadParameters);
}

TEST_CASE("area twist slices are Legendrian with zero area") {
    for (double th : {0.0, 0.125, 0.25, 0.5, 0.75}) {
        Curve3 s = area_twist_slice(std::cos(tau * th), std::sin(tau * th), 2048);
        REQUIRE(max_legendrian_residual(s) < 1e-8);
        REQUIRE(std::fabs(total_area(s, 4096)) < 1e-8);
    }
}
