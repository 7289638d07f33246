// Robust winding numbers by angle accumulation with step-size control.
#pragma once

#include <functional>

#include "engel/core.hpp"

namespace engel {

// Winding number of the closed plane path t in [0,1) -> dir(t) != 0 around the
// origin. Refines the grid until every angular step is < pi/2.
inline int winding_number(const std::function<Vec2(double)>& dir, int start_samples = 1024,
                          double min_norm = 1e-12, int max_refine = 8) {
    int n = start_samples;
    for (int pass = 0;; ++pass) {
        double acc = 0.0;
        bool ok = true;
        Vec2 prev = dir(0.0);
        if (prev.norm() < min_norm) throw DerivTooSmall("winding: vanishing vector at t=0");
        double prev_ang = std::atan2(prev[1], prev[0]);
        for (int i = 1; i <= n; ++i) {
            Vec2 cur = dir(wrap01(static_cast<double>(i) / n));
            if (cur.norm() < min_norm) throw DerivTooSmall("winding: vanishing vector");
            double ang = std::atan2(cur[1], cur[0]);
            double d = ang - prev_ang;
            while (d > std::numbers::pi) d -= tau;
            while (d < -std::numbers::pi) d += tau;
            if (std::fabs(d) >= std::numbers::pi / 2) {
                ok = false;
                break;
            }
            acc += d;
            prev_ang = ang;
        }
        if (ok) {
            double w = acc / tau;
            long r = std::lround(w);
            if (std::fabs(w - r) > 0.25) throw ResolutionExhausted("winding did not settle on an integer");
            return static_cast<int>(r);
        }
        if (pass >= max_refine) throw ResolutionExhausted("winding: angular steps stayed >= pi/2");
        n *= 2;
    }
}

}  // namespace engel
