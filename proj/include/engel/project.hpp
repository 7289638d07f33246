// Projections between Engel R^4 and the Geiges contact R^3, and front traces.
#pragma once

#include <vector>

#include "engel/core.hpp"
#include "engel/curve.hpp"

namespace engel {

// Geiges projection (x,y,z,w) -> (x,z,w). Horizontal curves map to Legendrian
// immersions of ker(dz - w dx); the Legendrian residual equals the second
// Engel residual of the input.
inline Curve3 geiges_project(const Curve4& c, Tolerances tol = {}) {
    if (max_horizontal_residual(c) > tol.leg)
        throw HorizontalViolation("curve fails the Engel conditions beyond tolerance");
    Curve3 g;
    g.frame = Frame::GeigesXZW;
    g.samples = c.samples;
    g.legendrian = true;
    auto ev = c.eval, dv = c.deriv;
    g.eval = [ev](double t) {
        Vec4 p = ev(t);
        return Vec3{{p[0], p[2], p[3]}};
    };
    g.deriv = [dv](double t) {
        Vec4 d = dv(t);
        return Vec3{{d[0], d[2], d[3]}};
    };
    return g;
}

// Planar (x,z) trace with analytic derivative and located front cusps.
struct FrontCurve {
    std::function<Vec2(double)> eval;
    std::function<Vec2(double)> deriv;
    std::vector<double> cusp_ts;  // zeros of x'
    int samples = 4096;
};

namespace detail {

// zeros of f on the unit circle by sign-change scan + bisection
inline std::vector<double> circle_zeros(const std::function<double(double)>& f, int n) {
    std::vector<double> zs;
    double prev = f(0.0);
    for (int i = 1; i <= n; ++i) {
        double t = static_cast<double>(i) / n;
        double cur = f(wrap01(t));
        if (prev == 0.0) zs.push_back(wrap01(static_cast<double>(i - 1) / n));
        else if ((prev < 0) != (cur < 0)) {
            double a = static_cast<double>(i - 1) / n, b = t, fa = prev;
            for (int k = 0; k < 80; ++k) {
                double m = 0.5 * (a + b), fm = f(wrap01(m));
                if ((fa < 0) != (fm < 0))
                    b = m;
                else {
                    a = m;
                    fa = fm;
                }
            }
            zs.push_back(wrap01(0.5 * (a + b)));
        }
        prev = cur;
    }
    return zs;
}

}  // namespace detail

// Front Geiges projection: the (x,z) trace of a horizontal curve. Cusp
// parameters are the zeros of x' (z' = w x' vanishes with them).
inline FrontCurve front_geiges(const Curve4& c, Tolerances tol = {}) {
    if (max_horizontal_residual(c) > tol.leg)
        throw HorizontalViolation("curve fails the Engel conditions beyond tolerance");
    FrontCurve f;
    f.samples = c.samples;
    auto ev = c.eval, dv = c.deriv;
    f.eval = [ev](double t) {
        Vec4 p = ev(t);
        return Vec2{{p[0], p[2]}};
    };
    f.deriv = [dv](double t) {
        Vec4 d = dv(t);
        return Vec2{{d[0], d[2]}};
    };
    f.cusp_ts = detail::circle_zeros([dv](double t) { return dv(t)[0]; }, 4 * c.samples);
    return f;
}

// Front of a Legendrian curve in either R^3 frame: the (x,z) trace.
inline FrontCurve front_of(const Curve3& c) {
    FrontCurve f;
    f.samples = c.samples;
    int zi = idx_z(c.frame);
    auto ev = c.eval, dv = c.deriv;
    f.eval = [ev, zi](double t) {
        Vec3 p = ev(t);
        return Vec2{{p[0], p[zi]}};
    };
    f.deriv = [dv, zi](double t) {
        Vec3 d = dv(t);
        return Vec2{{d[0], d[zi]}};
    };
    f.cusp_ts = detail::circle_zeros([dv](double t) { return dv(t)[0]; }, 4 * c.samples);
    return f;
}

}  // namespace engel
