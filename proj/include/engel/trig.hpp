// Trigonometric polynomials on the unit-period circle: f(t) = c0 + sum a_k cos(2πkt) + b_k sin(2πkt).
// Exact derivative, antiderivative and product keep the builtin curve families closed-form.
#pragma once

#include <cstddef>
#include <vector>

#include "engel/core.hpp"

namespace engel {

class TrigPoly {
  public:
    TrigPoly() = default;
    explicit TrigPoly(double c) : c0_(c) {}

    static TrigPoly cos_k(int k, double amp = 1.0) {
        TrigPoly f;
        k = std::abs(k);
        if (k == 0) {
            f.c0_ = amp;
        } else {
            f.grow(k);
            f.a_[k - 1] = amp;
        }
        return f;
    }
    static TrigPoly sin_k(int k, double amp = 1.0) {
        TrigPoly f;
        if (k < 0) {
            k = -k;
            amp = -amp;
        }
        if (k != 0) {
            f.grow(k);
            f.b_[k - 1] = amp;
        }
        return f;
    }

    int degree() const { return static_cast<int>(a_.size()); }
    double constant() const { return c0_; }

    double operator()(double t) const {
        double s = c0_;
        for (int k = 1; k <= degree(); ++k) {
            double w = tau * k * t;
            s += a_[k - 1] * std::cos(w) + b_[k - 1] * std::sin(w);
        }
        return s;
    }

    TrigPoly derivative() const {
        TrigPoly d;
        d.grow(degree());
        for (int k = 1; k <= degree(); ++k) {
            d.a_[k - 1] = tau * k * b_[k - 1];
            d.b_[k - 1] = -tau * k * a_[k - 1];
        }
        return d;
    }

    // Antiderivative with F(0) = 0. The caller must keep the mean zero
    // (checked) or the result would pick up a secular term.
    TrigPoly antiderivative() const {
        TrigPoly F;
        F.grow(degree());
        for (int k = 1; k <= degree(); ++k) {
            F.a_[k - 1] = -b_[k - 1] / (tau * k);
            F.b_[k - 1] = a_[k - 1] / (tau * k);
        }
        double at0 = F(0.0);
        F.c0_ = -at0;
        return F;
    }

    double mean() const { return c0_; }

    TrigPoly& operator+=(const TrigPoly& o) {
        grow(o.degree());
        c0_ += o.c0_;
        for (int k = 1; k <= o.degree(); ++k) {
            a_[k - 1] += o.a_[k - 1];
            b_[k - 1] += o.b_[k - 1];
        }
        return *this;
    }
    friend TrigPoly operator+(TrigPoly f, const TrigPoly& g) { return f += g; }
    friend TrigPoly operator-(TrigPoly f, const TrigPoly& g) {
        TrigPoly ng = g;
        ng *= -1.0;
        return f += ng;
    }
    TrigPoly& operator*=(double s) {
        c0_ *= s;
        for (auto& x : a_) x *= s;
        for (auto& x : b_) x *= s;
        return *this;
    }
    friend TrigPoly operator*(double s, TrigPoly f) { return f *= s; }
    friend TrigPoly operator*(TrigPoly f, double s) { return f *= s; }

    // product via the product-to-sum identities
    friend TrigPoly operator*(const TrigPoly& f, const TrigPoly& g) {
        TrigPoly p;
        p.grow(f.degree() + g.degree());
        auto addc = [&p](int k, double v) {  // v * cos(2π k t), k may be negative
            k = std::abs(k);
            if (k == 0)
                p.c0_ += v;
            else
                p.a_[k - 1] += v;
        };
        auto adds = [&p](int k, double v) {  // v * sin(2π k t)
            if (k == 0) return;
            if (k < 0) {
                k = -k;
                v = -v;
            }
            p.b_[k - 1] += v;
        };
        addc(0, f.c0_ * g.c0_);
        for (int k = 1; k <= g.degree(); ++k) {
            addc(k, f.c0_ * g.a_[k - 1]);
            adds(k, f.c0_ * g.b_[k - 1]);
        }
        for (int k = 1; k <= f.degree(); ++k) {
            addc(k, g.c0_ * f.a_[k - 1]);
            adds(k, g.c0_ * f.b_[k - 1]);
        }
        for (int i = 1; i <= f.degree(); ++i) {
            double ai = f.a_[i - 1], bi = f.b_[i - 1];
            if (ai == 0.0 && bi == 0.0) continue;
            for (int j = 1; j <= g.degree(); ++j) {
                double aj = g.a_[j - 1], bj = g.b_[j - 1];
                if (aj == 0.0 && bj == 0.0) continue;
                // cos i cos j, cos i sin j, sin i cos j, sin i sin j
                addc(i - j, 0.5 * ai * aj);
                addc(i + j, 0.5 * ai * aj);
                adds(i + j, 0.5 * ai * bj);
                adds(j - i, 0.5 * ai * bj);
                adds(i + j, 0.5 * bi * aj);
                adds(i - j, 0.5 * bi * aj);
                addc(i - j, 0.5 * bi * bj);
                addc(i + j, -0.5 * bi * bj);
            }
        }
        return p;
    }

  private:
    void grow(int k) {
        if (k > degree()) {
            a_.resize(k, 0.0);
            b_.resize(k, 0.0);
        }
    }

    double c0_ = 0.0;
    std::vector<double> a_, b_;  // a_[k-1] cos(2πkt), b_[k-1] sin(2πkt)
};

}  // namespace engel
