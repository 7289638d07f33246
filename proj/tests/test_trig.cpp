#include <catch2/catch_amalgamated.hpp>

#include "engel/trig.hpp"
#include "engel/smooth.hpp"

using namespace engel;

TEST_CASE("trig product matches pointwise evaluation") {
    TrigPoly f = TrigPoly::cos_k(1, 0.7) + TrigPoly::sin_k(3, -1.2) + TrigPoly(0.4);
    TrigPoly g = TrigPoly::sin_k(2, 2.0) + TrigPoly::cos_k(5, 0.3);
    TrigPoly p = f * g;
    for (int i = 0; i < 97; ++i) {
        double t = i / 97.0;
        REQUIRE(p(t) == Catch::Approx(f(t) * g(t)).margin(1e-12));
    }
}

TEST_CASE("trig derivative and antiderivative invert") {
    TrigPoly f = TrigPoly::cos_k(2, 1.5) + TrigPoly::sin_k(7, 0.25);
    TrigPoly F = f.antiderivative();
    REQUIRE(F(0.0) == Catch::Approx(0.0).margin(1e-15));
    TrigPoly back = F.derivative();
    for (int i = 0; i < 53; ++i) {
        double t = i / 53.0;
        REQUIRE(back(t) == Catch::Approx(f(t)).margin(1e-11));
    }
}

TEST_CASE("cumulative integral cache is accurate") {
    Fn f = [](double t) { return std::sin(tau * t) + 0.5 * std::cos(2 * tau * t); };
    CumInt F(f, 0.0, 1.0, 2048);
    // exact antiderivative: (1 - cos tau t)/tau + sin(2 tau t)/(4 tau)
    for (int i = 0; i <= 40; ++i) {
        double t = i / 40.0;
        double exact = (1 - std::cos(tau * t)) / tau + std::sin(2 * tau * t) / (2 * tau * 2);
        REQUIRE(F(t) == Catch::Approx(exact).margin(1e-12));
    }
}

TEST_CASE("smoothstep is C^4-flat at the ends") {
    REQUIRE(smoothstep(0.0) == 0.0);
    REQUIRE(smoothstep(1.0) == 1.0);
    REQUIRE(std::fabs(smoothstep(1e-3)) < 1e-12);
    REQUIRE(std::fabs(1.0 - smoothstep(1.0 - 1e-3)) < 1e-12);
    REQUIRE(std::fabs(smoothstep_d(1e-3)) < 1e-9);
}
