// Periodic cubic spline interpolation for table-defined curves.
#pragma once

#include <cstddef>
#include <vector>

#include "engel/core.hpp"

namespace engel {

// C^2 periodic cubic spline through (t_i, y_i), t_i strictly increasing in [0,1),
// period 1. Second derivatives from the cyclic tridiagonal system.
class PeriodicSpline {
  public:
    PeriodicSpline() = default;
    PeriodicSpline(std::vector<double> ts, std::vector<double> ys) : t_(std::move(ts)), y_(std::move(ys)) {
        const std::size_t n = t_.size();
        if (n < 3 || y_.size() != n) throw BadParameters("periodic spline needs >= 3 rows");
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (t_[i + 1] <= t_[i]) throw BadParameters("table times must be strictly increasing");
        if (t_.front() < 0.0 || t_.back() >= 1.0) throw BadParameters("table times must lie in [0,1)");
        solve_moments();
    }

    double operator()(double t) const { return piece(t).value; }
    double derivative(double t) const { return piece(t).deriv; }

  private:
    struct Eval {
        double value, deriv;
    };

    double h(std::size_t i) const {  // knot spacing, wrapping the last interval
        const std::size_t n = t_.size();
        return (i + 1 < n) ? t_[i + 1] - t_[i] : 1.0 - t_[n - 1] + t_[0];
    }

    void solve_moments() {
        const std::size_t n = t_.size();
        // cyclic system A m = r with A tridiagonal + corners; Sherman-Morrison
        std::vector<double> dl(n), dd(n), du(n), r(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t im = (i + n - 1) % n;
            double hi = h(im), hj = h(i);
            dl[i] = hi / 6.0;
            dd[i] = (hi + hj) / 3.0;
            du[i] = hj / 6.0;
            double yi = y_[i], yp = y_[(i + 1) % n], ym = y_[im];
            r[i] = (yp - yi) / hj - (yi - ym) / hi;
        }
        auto trisolve = [&](std::vector<double> b) {
            // plain tridiagonal solve (no corners) via Thomas
            std::vector<double> c(n), d(n), x(n);
            c[0] = du[0] / dd[0];
            d[0] = b[0] / dd[0];
            for (std::size_t i = 1; i < n; ++i) {
                double m = dd[i] - dl[i] * c[i - 1];
                c[i] = du[i] / m;
                d[i] = (b[i] - dl[i] * d[i - 1]) / m;
            }
            x[n - 1] = d[n - 1];
            for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
            return x;
        };
        // corners: A[0][n-1] = dl[0], A[n-1][0] = du[n-1]
        double alpha = dl[0], beta = du[n - 1];
        double gamma = -dd[0];
        std::vector<double> u(n, 0.0);
        u[0] = gamma;
        u[n - 1] = beta;
        std::vector<double> ddmod = dd;
        dd[0] -= gamma;
        dd[n - 1] -= alpha * beta / gamma;
        std::vector<double> x = trisolve(r);
        std::vector<double> zq = trisolve(u);
        double vx = x[0] + alpha * x[n - 1] / gamma;
        double vz = 1.0 + zq[0] + alpha * zq[n - 1] / gamma;
        m_.resize(n);
        for (std::size_t i = 0; i < n; ++i) m_[i] = x[i] - vx / vz * zq[i];
        dd = ddmod;
    }

    Eval piece(double t) const {
        const std::size_t n = t_.size();
        double tt = wrap01(t);
        // find interval by binary search (t_ sorted); interval n-1 wraps
        std::size_t lo = 0, hi = n;
        while (lo + 1 < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (t_[mid] <= tt)
                lo = mid;
            else
                hi = mid;
        }
        std::size_t i = (tt < t_[0]) ? n - 1 : lo;
        double hi_ = h(i);
        double a = (tt < t_[0]) ? tt - (t_[n - 1] - 1.0) : tt - t_[i];
        double b = hi_ - a;
        std::size_t j = (i + 1) % n;
        double mi = m_[i], mj = m_[j];
        double value = (mi * b * b * b + mj * a * a * a) / (6.0 * hi_) +
                       (y_[i] / hi_ - mi * hi_ / 6.0) * b + (y_[j] / hi_ - mj * hi_ / 6.0) * a;
        double deriv = (-mi * b * b + mj * a * a) / (2.0 * hi_) - (y_[i] / hi_ - mi * hi_ / 6.0) +
                       (y_[j] / hi_ - mj * hi_ / 6.0);
        return {value, deriv};
    }

    std::vector<double> t_, y_, m_;
};

}  // namespace engel
