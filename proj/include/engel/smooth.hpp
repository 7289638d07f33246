// Smooth glue primitives (C^4-flat steps and bumps) and cached cumulative integrals.
#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "engel/core.hpp"

namespace engel {

// Degree-9 smoothstep: C^4-flat at 0 and 1.
inline double smoothstep(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double t5 = t * t * t * t * t;
    return t5 * (126.0 + t * (-420.0 + t * (540.0 + t * (-315.0 + t * 70.0))));
}

inline double smoothstep_d(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    double t4 = t * t * t * t;
    return t4 * (630.0 + t * (-2520.0 + t * (3780.0 + t * (-2520.0 + t * 630.0))));
}

// Bump on [0,1]: 0 at the ends (C^4-flat), 1 at t = 1/2.
inline double bump(double t) { return smoothstep(2.0 * t) * smoothstep(2.0 - 2.0 * t); }

inline double bump_d(double t) {
    return 2.0 * smoothstep_d(2.0 * t) * smoothstep(2.0 - 2.0 * t) -
           2.0 * smoothstep(2.0 * t) * smoothstep_d(2.0 - 2.0 * t);
}

// Bump supported on [a,b].
inline double bump_on(double t, double a, double b) { return bump((t - a) / (b - a)); }
inline double bump_on_d(double t, double a, double b) { return bump_d((t - a) / (b - a)) / (b - a); }

using Fn = std::function<double(double)>;

// F(t) = integral of f from t0 to t, cached on a uniform grid with composite
// Simpson node values and cubic Hermite evaluation in between (F' = f).
class CumInt {
  public:
    CumInt() = default;
    CumInt(Fn f, double t0, double t1, std::size_t cells = 4096)
        : f_(std::move(f)), t0_(t0), t1_(t1), h_((t1 - t0) / static_cast<double>(cells)) {
        F_.resize(cells + 1);
        fv_.resize(cells + 1);
        F_[0] = 0.0;
        fv_[0] = f_(t0_);
        for (std::size_t i = 0; i < cells; ++i) {
            double a = t0_ + h_ * static_cast<double>(i);
            double fm = f_(a + 0.5 * h_);
            fv_[i + 1] = f_(a + h_);
            F_[i + 1] = F_[i] + h_ / 6.0 * (fv_[i] + 4.0 * fm + fv_[i + 1]);
        }
    }

    double total() const { return F_.back(); }

    double operator()(double t) const {
        if (t <= t0_) return 0.0;
        if (t >= t1_) return total();
        double s = (t - t0_) / h_;
        auto i = static_cast<std::size_t>(s);
        if (i >= F_.size() - 1) i = F_.size() - 2;
        double u = s - static_cast<double>(i);
        // cubic Hermite with values F_i, F_{i+1} and slopes h*f_i, h*f_{i+1}
        double u2 = u * u, u3 = u2 * u;
        double h00 = 2 * u3 - 3 * u2 + 1, h10 = u3 - 2 * u2 + u;
        double h01 = -2 * u3 + 3 * u2, h11 = u3 - u2;
        return h00 * F_[i] + h10 * h_ * fv_[i] + h01 * F_[i + 1] + h11 * h_ * fv_[i + 1];
    }

  private:
    Fn f_;
    double t0_ = 0.0, t1_ = 1.0, h_ = 1.0;
    std::vector<double> F_, fv_;
};

// Periodic cumulative integral on the unit circle: F(t + 1) = F(t) + F(1).
class PeriodicCumInt {
  public:
    PeriodicCumInt() = default;
    explicit PeriodicCumInt(Fn f, std::size_t cells = 8192) : base_(std::move(f), 0.0, 1.0, cells) {}

    double period_total() const { return base_.total(); }

    double operator()(double t) const {
        double k = std::floor(t);
        return base_(t - k) + k * base_.total();
    }

  private:
    CumInt base_;
};

}  // namespace engel
