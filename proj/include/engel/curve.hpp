// Closed parametrized curves in contact R^3, the Geiges R^3(x,z,w) and Engel R^4,
// as position/derivative evaluators tagged with their coordinate frame.
#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "engel/core.hpp"
#include "engel/smooth.hpp"
#include "engel/trig.hpp"

namespace engel {

enum class Frame { ContactXYZ, GeigesXZW, EngelXYZW };

inline const char* frame_name(Frame f) {
    switch (f) {
        case Frame::ContactXYZ: return "contact-xyz";
        case Frame::GeigesXZW: return "geiges-xzw";
        case Frame::EngelXYZW: return "engel-xyzw";
    }
    return "?";
}

// Component indices per frame. Storage follows the frame tag order:
// contact-xyz stores (x,y,z); geiges-xzw stores (x,z,w).
inline int idx_x(Frame) { return 0; }
inline int idx_z(Frame f) { return f == Frame::ContactXYZ ? 2 : 1; }
inline int idx_slope(Frame f) { return f == Frame::ContactXYZ ? 1 : 2; }

struct Curve3 {
    std::function<Vec3(double)> eval;
    std::function<Vec3(double)> deriv;
    Frame frame = Frame::ContactXYZ;
    int samples = 4096;
    bool legendrian = false;

    Vec3 operator()(double t) const { return eval(t); }
};

struct Curve4 {
    std::function<Vec4(double)> eval;   // (x,y,z,w)
    std::function<Vec4(double)> deriv;
    Frame frame = Frame::EngelXYZW;
    int samples = 4096;
    bool horizontal = false;
    bool embedded = false;  // certificate set by lift_horizontal / constructors

    Vec4 operator()(double t) const { return eval(t); }
};

// Legendrian residual of a velocity vector: distance of v' from the plane field,
// measured as |z' - slope * x'|.
inline double legendrian_residual(Frame f, const Vec3& p, const Vec3& d) {
    return std::fabs(d[idx_z(f)] - p[idx_slope(f)] * d[idx_x(f)]);
}

// Engel conditions for a 4D velocity: y' = z x' and z' = w x'.
inline Vec2 horizontal_residual(const Vec4& p, const Vec4& d) {
    return {{std::fabs(d[1] - p[2] * d[0]), std::fabs(d[2] - p[3] * d[0])}};
}

// Components of a tangent vector in the trivializing frame of the plane field:
// contact-xyz (ker(dz - y dx), frame {∂_y, ∂_x + y ∂_z}) -> (x', y');
// geiges-xzw  (ker(dz - w dx), frame {∂_w, ∂_x + w ∂_z}) -> (x', w').
// The pair is ordered so its winding is the Lagrangian-projection turning number.
inline Vec2 frame_components(Frame f, const Vec3& d) {
    return {{d[idx_x(f)], d[idx_slope(f)]}};
}

template <typename V>
double curve_diameter(const std::function<V(double)>& eval, int samples) {
    V lo = eval(0.0), hi = lo;
    for (int i = 1; i < samples; ++i) {
        V p = eval(static_cast<double>(i) / samples);
        for (std::size_t k = 0; k < lo.a.size(); ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    }
    return (hi - lo).norm();
}

inline double curve_diameter(const Curve3& c) { return curve_diameter(c.eval, c.samples); }
inline double curve_diameter(const Curve4& c) { return curve_diameter(c.eval, c.samples); }

inline double max_legendrian_residual(const Curve3& c) {
    double worst = 0.0;
    for (int i = 0; i < c.samples; ++i) {
        double t = static_cast<double>(i) / c.samples;
        worst = std::max(worst, legendrian_residual(c.frame, c.eval(t), c.deriv(t)));
    }
    return worst;
}

inline double max_horizontal_residual(const Curve4& c) {
    double worst = 0.0;
    for (int i = 0; i < c.samples; ++i) {
        double t = static_cast<double>(i) / c.samples;
        Vec2 r = horizontal_residual(c.eval(t), c.deriv(t));
        worst = std::max({worst, r[0], r[1]});
    }
    return worst;
}

inline double min_speed(const Curve3& c) {
    double m = c.deriv(0.0).norm();
    for (int i = 1; i < c.samples; ++i) m = std::min(m, c.deriv(static_cast<double>(i) / c.samples).norm());
    return m;
}

// ---- Legendrian curves from Lagrangian data -------------------------------
//
// A Legendrian in either R^3 frame is determined by the plane path
// (x(t), v(t)) (v = slope coordinate) and z(0): z' = v x'. Building z by
// integration keeps the Legendrian condition exact by construction.

// Exact variant: x, v trig polynomials. Throws if v x' has nonzero mean
// (the curve would not close in z).
inline Curve3 legendrian_from_trig(const TrigPoly& x, const TrigPoly& v, Frame frame, double z0 = 0.0,
                                   int samples = 4096) {
    TrigPoly zp = v * x.derivative();
    if (std::fabs(zp.mean()) > 1e-12) throw BadParameters("lagrangian data does not close in z");
    TrigPoly z = zp.antiderivative();
    TrigPoly xd = x.derivative(), vd = v.derivative();
    auto sx = std::make_shared<TrigPoly>(x);
    auto sv = std::make_shared<TrigPoly>(v);
    auto sz = std::make_shared<TrigPoly>(z);
    auto sxd = std::make_shared<TrigPoly>(xd);
    auto svd = std::make_shared<TrigPoly>(vd);
    auto szd = std::make_shared<TrigPoly>(zp);
    Curve3 c;
    c.frame = frame;
    c.samples = samples;
    c.legendrian = true;
    int zi = idx_z(frame), si = idx_slope(frame);
    c.eval = [=](double t) {
        Vec3 p;
        p[0] = (*sx)(t);
        p[zi] = (*sz)(t) + z0;
        p[si] = (*sv)(t);
        return p;
    };
    c.deriv = [=](double t) {
        Vec3 d;
        d[0] = (*sxd)(t);
        d[zi] = (*szd)(t);
        d[si] = (*svd)(t);
        return d;
    };
    return c;
}

// General variant: evaluator Lagrangian data, z from a cached cumulative
// integral. The integrand's period total must vanish (within tol) or the
// curve does not close.
inline Curve3 legendrian_from_lagrangian(Fn x, Fn xd, Fn v, Fn vd, Frame frame, double z0 = 0.0,
                                         int samples = 4096, double close_tol = 1e-9) {
    auto fx = std::make_shared<Fn>(std::move(x));
    auto fxd = std::make_shared<Fn>(std::move(xd));
    auto fv = std::make_shared<Fn>(std::move(v));
    auto fvd = std::make_shared<Fn>(std::move(vd));
    auto zint = std::make_shared<PeriodicCumInt>(Fn([fv, fxd](double t) { return (*fv)(t) * (*fxd)(t); }),
                                                 std::size_t{16384});
    if (std::fabs(zint->period_total()) > close_tol)
        throw BadParameters("lagrangian data does not close in z");
    Curve3 c;
    c.frame = frame;
    c.samples = samples;
    c.legendrian = true;
    int zi = idx_z(frame), si = idx_slope(frame);
    c.eval = [=](double t) {
        Vec3 p;
        p[0] = (*fx)(t);
        p[zi] = (*zint)(t) + z0;
        p[si] = (*fv)(t);
        return p;
    };
    c.deriv = [=](double t) {
        Vec3 d;
        d[0] = (*fxd)(t);
        d[zi] = (*fv)(t) * (*fxd)(t);
        d[si] = (*fvd)(t);
        return d;
    };
    return c;
}

// ---- families --------------------------------------------------------------

// One-parameter family of curves; loop_dir feeds loop_rotation_number with the
// plane-field components of the slice derivative (or formal F_1) at t = 0.
struct CurveFamily {
    int theta_samples = 256;
    std::function<Curve3(double)> slice3;            // null when slices are 4D
    std::function<Curve4(double)> slice4;            // null when slices are 3D
    std::function<Vec2(double)> loop_dir;

    bool is3() const { return static_cast<bool>(slice3); }
};

}  // namespace engel
