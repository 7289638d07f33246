// Local x-monotone front-branch evaluation near a double point or crossing:
// solve x(t) = x_target on the branch through t_seed and report z there.
#pragma once

#include "engel/core.hpp"
#include "engel/curve.hpp"

namespace engel {

// Newton solve for the branch parameter with x(t) = xt, seeded at t_seed.
// Requires x' != 0 along the branch (callers stay away from cusps).
inline double branch_param_at_x(const Curve3& c, double t_seed, double xt) {
    double t = t_seed;
    for (int it = 0; it < 80; ++it) {
        double x = c.eval(wrap01(t))[0];
        double xd = c.deriv(wrap01(t))[0];
        if (std::fabs(xd) < 1e-14) throw DegenerateTangency("branch hits a cusp");
        double step = (xt - x) / xd;
        step = std::clamp(step, -0.02, 0.02);
        t += step;
        if (std::fabs(step) < 1e-15) break;
    }
    if (std::fabs(c.eval(wrap01(t))[0] - xt) > 1e-9) throw DegenerateTangency("branch x-solve failed");
    return wrap01(t);
}

inline double branch_z_at_x(const Curve3& c, double t_seed, double xt) {
    return c.eval(branch_param_at_x(c, t_seed, xt))[idx_z(c.frame)];
}

// Signed vertical gap z_b(x) - z_a(x) of the branches through tb/ta at offset
// x0 + h, where x0 is the common x of the two branch points.
inline double branch_gap(const Curve3& c, double ta, double tb, double h) {
    double x0 = c.eval(ta)[0];
    return branch_z_at_x(c, tb, x0 + h) - branch_z_at_x(c, ta, x0 + h);
}

}  // namespace engel
