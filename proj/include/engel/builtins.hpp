// Builtin curve families. Legendrian/horizontal ones are generated from
// Lagrangian trig data so the defining PDEs hold exactly; z (and y for lifts)
// are closed-form antiderivatives.
#pragma once

#include <memory>
#include <numeric>

#include "engel/core.hpp"
#include "engel/curve.hpp"
#include "engel/smooth.hpp"
#include "engel/trig.hpp"

namespace engel {

// Horizontal curve from geiges Lagrangian trig data: z = ∫ w dx, y = y0 + ∫ z dx.
// Requires both integrands to have zero mean (closure in z and zero total area).
inline Curve4 horizontal_from_trig(const TrigPoly& x, const TrigPoly& w, double y0 = 0.0,
                                   double z0 = 0.0, int samples = 4096) {
    TrigPoly xd = x.derivative();
    TrigPoly zp = w * xd;
    if (std::fabs(zp.mean()) > 1e-12) throw BadParameters("data does not close in z");
    TrigPoly z = zp.antiderivative() + TrigPoly(z0);
    TrigPoly yp = z * xd;
    if (std::fabs(yp.mean()) > 1e-12) throw AreaObstruction("nonzero total area; no horizontal lift");
    TrigPoly y = yp.antiderivative() + TrigPoly(y0);
    auto sx = std::make_shared<TrigPoly>(x);
    auto sy = std::make_shared<TrigPoly>(y);
    auto sz = std::make_shared<TrigPoly>(z);
    auto sw = std::make_shared<TrigPoly>(w);
    auto sxd = std::make_shared<TrigPoly>(xd);
    auto syd = std::make_shared<TrigPoly>(yp);
    auto szd = std::make_shared<TrigPoly>(zp);
    auto swd = std::make_shared<TrigPoly>(w.derivative());
    Curve4 c;
    c.samples = samples;
    c.horizontal = true;
    c.eval = [=](double t) { return Vec4{{(*sx)(t), (*sy)(t), (*sz)(t), (*sw)(t)}}; };
    c.deriv = [=](double t) { return Vec4{{(*sxd)(t), (*syd)(t), (*szd)(t), (*swd)(t)}}; };
    return c;
}

// Standard 2-cusp Legendrian unknot (contact frame): Lagrangian projection
// (cos 2πt, -1/2 sin 4πt); rot = 0, tb = -1.
inline Curve3 unknot_front(int samples = 4096) {
    return legendrian_from_trig(TrigPoly::cos_k(1), TrigPoly::sin_k(2, -0.5), Frame::ContactXYZ, 0.0,
                                samples);
}

// Symmetric Legendrian figure eight (geiges frame): one transverse double point
// at (t0,t1) = (1/4, 3/4) whose tangency area vanishes; total area 0; rot 0.
inline Curve3 figure_eight(int samples = 4096) {
    TrigPoly w = TrigPoly::cos_k(1, 0.5) + TrigPoly::cos_k(5, 0.7);
    return legendrian_from_trig(TrigPoly::sin_k(2), w, Frame::GeigesXZW, 0.0, samples);
}

// Embedded zero-area Legendrian (geiges frame) whose lift is the horizontal
// unknot; the cos(6πt) term moves the figure-eight double point apart in z.
inline Curve3 unknot_horizontal_geiges(int samples = 4096) {
    TrigPoly w = TrigPoly::cos_k(1, 0.5) + TrigPoly::cos_k(5, 0.7) + TrigPoly::cos_k(3, 0.3);
    return legendrian_from_trig(TrigPoly::sin_k(2), w, Frame::GeigesXZW, 0.0, samples);
}

inline Curve4 unknot_horizontal(int samples = 4096) {
    TrigPoly w = TrigPoly::cos_k(1, 0.5) + TrigPoly::cos_k(5, 0.7) + TrigPoly::cos_k(3, 0.3);
    Curve4 c = horizontal_from_trig(TrigPoly::sin_k(2), w, 0.0, 0.0, samples);
    c.embedded = true;  // validated by the self-intersection scan in the test suite
    return c;
}

// Smooth stereographic (p,q) torus knot (not Legendrian):
// ((cos 2πqt + 2) cos 2πpt, (cos 2πqt + 2) sin 2πpt, -sin 2πqt).
inline Curve3 stereographic_torus_knot(int p, int q, int samples = 4096) {
    if (std::gcd(p, q) != 1) throw BadParameters("gcd(p,q) must be 1");
    TrigPoly radial = TrigPoly::cos_k(q) + TrigPoly(2.0);
    TrigPoly X = radial * TrigPoly::cos_k(p);
    TrigPoly Y = radial * TrigPoly::sin_k(p);
    TrigPoly Z = TrigPoly::sin_k(q, -1.0);
    auto sx = std::make_shared<TrigPoly>(X);
    auto sy = std::make_shared<TrigPoly>(Y);
    auto sz = std::make_shared<TrigPoly>(Z);
    auto sxd = std::make_shared<TrigPoly>(X.derivative());
    auto syd = std::make_shared<TrigPoly>(Y.derivative());
    auto szd = std::make_shared<TrigPoly>(Z.derivative());
    Curve3 c;
    c.frame = Frame::ContactXYZ;
    c.samples = samples;
    c.legendrian = false;
    c.eval = [=](double t) { return Vec3{{(*sx)(t), (*sy)(t), (*sz)(t)}}; };
    c.deriv = [=](double t) { return Vec3{{(*sxd)(t), (*syd)(t), (*szd)(t)}}; };
    return c;
}

// ---- Legendrian approximation -----------------------------------------------
//
// C^0-approximates a smooth closed curve given by trig coordinates (X,Y,Z) by
// an exactly Legendrian curve (contact frame). Lagrangian data
//   x = X + lam/(2πN) sin(2πNt),   y = Y + (2 E'/lam) cos(2πNt),
// with E' = Z' - Y X', makes z = ∫ y dx track Z with an O(1/N) defect; z is a
// closed trig polynomial as soon as N exceeds three times the input degree.
inline Curve3 legendrian_approximation(const TrigPoly& X, const TrigPoly& Y, const TrigPoly& Z,
                                       int wiggles, double lambda = 0.0, int samples = 8192) {
    TrigPoly Xd = X.derivative();
    TrigPoly Ed = Z.derivative() - Y * Xd;
    int top = std::max({X.degree(), Y.degree(), Z.degree()});
    if (wiggles <= 3 * top) throw BadParameters("wiggle frequency too low for closed z");
    if (lambda <= 0.0) {
        double emax = 0, xmax = 0;
        for (int i = 0; i < 2048; ++i) {
            double t = i / 2048.0;
            emax = std::max(emax, std::fabs(Ed(t)));
            xmax = std::max(xmax, std::fabs(Xd(t)));
        }
        lambda = std::max(std::sqrt(tau * wiggles * emax), 1.25 * xmax);
    }
    TrigPoly x = X + TrigPoly::sin_k(wiggles, lambda / (tau * wiggles));
    TrigPoly y = Y + (Ed * TrigPoly::cos_k(wiggles)) * (2.0 / lambda);
    return legendrian_from_trig(x, y, Frame::ContactXYZ, Z(0.0), samples);
}

// Legendrian (p,q) torus knot: approximation of the stereographic model.
// Wiggle counts were chosen so the result passes the self-intersection scan.
inline int torus_knot_default_wiggles(int p, int q) {
    int a = std::abs(p), b = std::abs(q);
    if (a == 2 && b == 5) return 96;
    if (a == 5 && b == 2) return 48;
    if ((a == 2 && b == 3) || (a == 3 && b == 2)) return 64;
    if ((a == 3 && b == 4) || (a == 4 && b == 3)) return 40;
    return std::max(64, 3 * (a + b) + 4);
}

inline Curve3 torus_knot(int p, int q, int wiggles = 0, int samples = 8192) {
    if (std::gcd(p, q) != 1) throw BadParameters("gcd(p,q) must be 1");
    TrigPoly radial = TrigPoly::cos_k(std::abs(q)) + TrigPoly(2.0);
    TrigPoly X = radial * TrigPoly::cos_k(std::abs(p));
    TrigPoly Y = radial * TrigPoly::sin_k(p);
    TrigPoly Z = TrigPoly::sin_k(q, -1.0);
    if (wiggles <= 0) wiggles = torus_knot_default_wiggles(p, q);
    return legendrian_approximation(X, Y, Z, wiggles, 0.0, samples);
}

// ---- area twist --------------------------------------------------------------
//
// Two-parameter unfolding of the figure eight. re scales a trig perturbation
// separating the double point in z (embedded slices); im scales an area pump
// built from two balanced bump pairs, one inside the tangency window and one
// outside, shifting epsilon_A while preserving z-closure, the double point and
// the zero total area. The boundary circle of the unfolding is the area twist
// loop of horizontal embeddings.
namespace detail {

struct AreaPump {
    // delta-w(t); coefficients solved at construction
    double a1 = 0, k1 = 0, a2 = 0, k2 = 0;
    double operator()(double t) const {
        return a1 * (bump_on(t, 0.30, 0.42) - k1 * bump_on(t, 0.56, 0.70)) +
               a2 * (bump_on(t, 0.80, 0.90) - k2 * bump_on(t, 0.92, 0.995));
    }
    double d(double t) const {
        return a1 * (bump_on_d(t, 0.30, 0.42) - k1 * bump_on_d(t, 0.56, 0.70)) +
               a2 * (bump_on_d(t, 0.80, 0.90) - k2 * bump_on_d(t, 0.92, 0.995));
    }
};

inline const AreaPump& area_pump() {
    static const AreaPump pump = [] {
        AreaPump p;
        TrigPoly x = TrigPoly::sin_k(2);
        TrigPoly xd = x.derivative();
        auto integ = [&](double lo, double hi, auto&& f) {
            int cells = 4096;
            double h = (hi - lo) / cells, s = 0;
            for (int i = 0; i < cells; ++i) {
                double a = lo + i * h;
                s += h / 6.0 * (f(a) + 4 * f(a + 0.5 * h) + f(a + h));
            }
            return s;
        };
        // balance each pair so its windowed ∫ dw x' dt vanishes
        auto wint = [&](double a, double b) {
            return integ(a, b, [&](double t) { return bump_on(t, a, b) * xd(t); });
        };
        p.k1 = wint(0.30, 0.42) / wint(0.56, 0.70);
        p.k2 = wint(0.80, 0.90) / wint(0.92, 0.995);
        // per-unit epsilon_A shifts of the two pairs over the tangency window [1/4, 3/4]
        auto seg_shift = [&](double a1, double a2) {
            AreaPump q{a1, p.k1, a2, p.k2};
            auto dz = [&](double t) {  // cumulative ∫ q x'
                return integ(0.0, t, [&](double s) { return q(s) * xd(s); });
            };
            return std::pair<double, double>{
                integ(0.25, 0.75, [&](double t) { return dz(t) * xd(t); }),
                integ(0.0, 1.0, [&](double t) { return dz(t) * xd(t); })};
        };
        auto [s1, tot1] = seg_shift(1.0, 0.0);
        auto [s2, tot2] = seg_shift(0.0, 1.0);
        // solve a1 s1 + a2 s2 = target, a1 tot1 + a2 tot2 = 0
        double target = 0.05;
        double det = s1 * tot2 - s2 * tot1;
        p.a1 = target * tot2 / det;
        p.a2 = -target * tot1 / det;
        return p;
    }();
    return pump;
}

}  // namespace detail

// Geiges-frame slice of the area twist unfolding at (re, im) in the unit disk.
inline Curve3 area_twist_slice(double re, double im, int samples = 4096) {
    static const TrigPoly x = TrigPoly::sin_k(2);
    static const TrigPoly xd = x.derivative();
    static const TrigPoly wbase = TrigPoly::cos_k(1, 0.5) + TrigPoly::cos_k(5, 0.7);
    static const TrigPoly wbreak = TrigPoly::cos_k(3, 0.3);
    static const TrigPoly wbased = wbase.derivative();
    static const TrigPoly wbreakd = wbreak.derivative();
    const auto& pump = detail::area_pump();
    return legendrian_from_lagrangian(
        [](double t) { return x(t); }, [](double t) { return xd(t); },
        [re, im, &pump](double t) { return wbase(t) + re * wbreak(t) + im * pump(t); },
        [re, im, &pump](double t) { return wbased(t) + re * wbreakd(t) + im * pump.d(t); },
        Frame::GeigesXZW, 0.0, samples, 1e-7);
}

// The area twist loop as a family of horizontal embeddings (lifted slices).
inline CurveFamily area_twist(int theta_samples = 256, int samples = 4096) {
    CurveFamily f;
    f.theta_samples = theta_samples;
    f.slice4 = [samples](double theta) {
        Curve3 g = area_twist_slice(std::cos(tau * theta), std::sin(tau * theta), samples);
        auto yint = std::make_shared<PeriodicCumInt>(
            Fn([g](double t) { return g.eval(t)[1] * g.deriv(t)[0]; }), std::size_t{16384});
        Curve4 c;
        c.samples = samples;
        c.horizontal = true;
        c.embedded = true;
        c.eval = [g, yint](double t) {
            Vec3 p = g.eval(t);
            return Vec4{{p[0], (*yint)(t), p[1], p[2]}};
        };
        c.deriv = [g, yint](double t) {
            Vec3 p = g.eval(t), d = g.deriv(t);
            return Vec4{{d[0], p[1] * d[0], d[1], d[2]}};
        };
        return c;
    };
    f.loop_dir = [](double theta) {
        Curve3 g = area_twist_slice(std::cos(tau * theta), std::sin(tau * theta), 64);
        return frame_components(Frame::GeigesXZW, g.deriv(0.0));
    };
    return f;
}

}  // namespace engel
