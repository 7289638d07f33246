// Line-integral quadrature for closed curves: the area functionals ∮ z dx and
// their windowed versions.
#pragma once

#include <functional>

#include "engel/core.hpp"
#include "engel/curve.hpp"

namespace engel {

// ∮ z(t) x'(t) dt by the composite trapezoid rule on the periodic grid
// (spectrally accurate for smooth integrands). Deterministic for fixed N.
inline double total_area(const Curve3& c, int resolution = 0) {
    int n = resolution > 0 ? resolution : c.samples;
    int zi = idx_z(c.frame);
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = static_cast<double>(i) / n;
        s += c.eval(t)[zi] * c.deriv(t)[idx_x(c.frame)];
    }
    return s / n;
}

// ∫_{t0}^{t1} z x' dt by composite Simpson clipped to the window; node count
// scales with the window length so results are additive to quadrature accuracy.
inline double segment_area(const Curve3& c, double t0, double t1, int resolution = 0) {
    if (t1 < t0) throw BadParameters("segment_area: t1 < t0");
    int n = resolution > 0 ? resolution : c.samples;
    int zi = idx_z(c.frame), xi = idx_x(c.frame);
    auto f = [&](double t) { return c.eval(t)[zi] * c.deriv(t)[xi]; };
    int cells = std::max(16, static_cast<int>((t1 - t0) * n + 0.5));
    double h = (t1 - t0) / cells;
    double s = 0.0;
    for (int i = 0; i < cells; ++i) {
        double a = t0 + i * h;
        s += h / 6.0 * (f(a) + 4.0 * f(a + 0.5 * h) + f(a + h));
    }
    return s;
}

// Window segment integral that follows the curve orientation, wrapping past 1.
inline double segment_area_wrapped(const Curve3& c, double t0, double t1, int resolution = 0) {
    if (t1 >= t0) return segment_area(c, t0, t1, resolution);
    return segment_area(c, t0, t1 + 1.0, resolution);
}

}  // namespace engel
