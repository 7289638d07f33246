// Classical invariants: rotation numbers, Thurston-Bennequin from front
// combinatorics and from a Gauss-linking push-off oracle, and the parity law.
#pragma once

#include <vector>

#include "engel/core.hpp"
#include "engel/curve.hpp"
#include "engel/front.hpp"
#include "engel/intersect.hpp"
#include "engel/project.hpp"
#include "engel/winding.hpp"

namespace engel {

// Rotation number: winding of the derivative in the trivializing frame of the
// plane field; equivalently the turning number of the Lagrangian projection.
inline int rotation_number(const Curve3& c, Tolerances tol = {}) {
    auto dir = [&c](double t) { return frame_components(c.frame, c.deriv(t)); };
    return winding_number(dir, std::max(1024, c.samples), tol.deriv);
}

// Rotation number of a loop of curves: winding of the slice direction at t=0.
inline int loop_rotation_number(const CurveFamily& f, Tolerances tol = {}) {
    return winding_number(f.loop_dir, std::max(256, 4 * f.theta_samples), tol.deriv);
}

// tb from a generic front: writhe - cusps/2.
inline int thurston_bennequin(const FrontDiagram& d) {
    if (d.cusps.size() % 2 != 0) throw NonGeneric("odd cusp count in front diagram");
    return d.writhe() - static_cast<int>(d.cusps.size()) / 2;
}

namespace detail {

// Signed solid angle of the spherical triangle spanned by A, B, C
// (van Oosterom-Strackee).
inline double solid_angle(const Vec3& A, const Vec3& B, const Vec3& C) {
    double la = A.norm(), lb = B.norm(), lc = C.norm();
    double num = A.dot(cross(B, C));
    double den = la * lb * lc + A.dot(B) * lc + B.dot(C) * la + C.dot(A) * lb;
    return 2.0 * std::atan2(num, den);
}

// Gauss linking integral of the polygons inscribed in the two curves,
// evaluated in closed form: each segment pair contributes the signed area of
// its Gauss-map image, a spherical quadrilateral. Exact up to rounding, so
// the result is integer-sharp once n resolves the geometry.
inline double gauss_linking(const std::function<Vec3(double)>& a, const std::function<Vec3(double)>&,
                            const std::function<Vec3(double)>& b, const std::function<Vec3(double)>&,
                            int n) {
    std::vector<Vec3> pa(n), pb(n);
    for (int i = 0; i < n; ++i) {
        double t = static_cast<double>(i) / n;
        pa[i] = a(t);
        pb[i] = b(t);
    }
    double omega = 0.0;
    for (int i = 0; i < n; ++i) {
        const Vec3& p1 = pa[i];
        const Vec3& p2 = pa[(i + 1) % n];
        for (int j = 0; j < n; ++j) {
            const Vec3& q1 = pb[j];
            const Vec3& q2 = pb[(j + 1) % n];
            Vec3 r1 = p1 - q1, r2 = p1 - q2, r3 = p2 - q2, r4 = p2 - q1;
            omega += solid_angle(r1, r2, r3) + solid_angle(r1, r3, r4);
        }
    }
    return omega / (2.0 * tau);
}

}  // namespace detail

// tb of an embedded Legendrian via the linking number with its Reeb push-off
// c + eps * d/dz. The push-off collides with the curve exactly when eps hits
// the height gap of some crossing of the vertical projection, so eps defaults
// to half the smallest such gap. The polygonal Gauss integral is then
// integer-sharp at the curve's own resolution.
inline int tb_linking_oracle(const Curve3& c, Tolerances tol = {}, double eps = 0.0) {
    const int n = c.samples;
    const int zi = idx_z(c.frame);
    const int xi = 0, yi = 3 - zi;  // the two components spanning the projection plane
    std::vector<Vec3> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = c.eval(static_cast<double>(i) / n);
    double diam = 0;
    for (int i = 0; i < n; ++i) diam = std::max(diam, (pts[i] - pts[0]).norm());
    if (eps <= 0.0) {
        double gap = 1e300;
        for (int i = 0; i < n; ++i) {
            Vec2 a{{pts[i][xi], pts[i][yi]}};
            Vec2 a2{{pts[(i + 1) % n][xi], pts[(i + 1) % n][yi]}};
            Vec2 r = a2 - a;
            for (int j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) continue;
                Vec2 b{{pts[j][xi], pts[j][yi]}};
                Vec2 b2{{pts[(j + 1) % n][xi], pts[(j + 1) % n][yi]}};
                Vec2 s = b2 - b;
                double den = det2(r, s);
                if (std::fabs(den) < 1e-18) continue;
                Vec2 dq = b - a;
                double u = det2(dq, s) / den, v = det2(dq, r) / den;
                if (u >= 0 && u < 1 && v >= 0 && v < 1) {
                    double za = pts[i][zi] + u * (pts[(i + 1) % n][zi] - pts[i][zi]);
                    double zb = pts[j][zi] + v * (pts[(j + 1) % n][zi] - pts[j][zi]);
                    gap = std::min(gap, std::fabs(za - zb));
                }
            }
        }
        if (gap == 1e300) gap = 0.5 * diam;  // diagram without crossings
        eps = 0.5 * gap;
        if (!(eps > tol.pos_abs(diam)))
            throw PushoffCollision("projected crossing with vanishing height gap");
    }
    auto push = [ev = c.eval, eps, zi](double t) {
        Vec3 p = ev(t);
        p[zi] += eps;
        return p;
    };
    // linking is taken in the contact orientation alpha ^ d(alpha): for the
    // geiges storage order (x,z,w) that is the reverse of the coordinate
    // orientation (dz ^ dx ^ dw = -dx ^ dz ^ dw)
    const double orient = (c.frame == Frame::ContactXYZ) ? 1.0 : -1.0;
    double lk = orient * detail::gauss_linking(c.eval, c.deriv, push, c.deriv, n);
    long r = std::lround(lk);
    if (std::fabs(lk - r) > 1e-6) {
        lk = orient * detail::gauss_linking(c.eval, c.deriv, push, c.deriv, 2 * n);
        r = std::lround(lk);
        if (std::fabs(lk - r) > 1e-6) throw NotConverged("linking integral did not settle");
    }
    return static_cast<int>(r);
}

inline int tb_linking_oracle_checked(const Curve3& c, Tolerances tol = {}) {
    if (!find_self_intersections(c, tol).empty())
        throw NonGeneric("tb_linking_oracle requires an embedded curve");
    return tb_linking_oracle(c, tol);
}

// tb + rot is odd for every Legendrian embedding in R^3.
inline bool parity_check(const Curve3& c, Tolerances tol = {}) {
    int tb = thurston_bennequin(front_diagram(c, tol));
    int rot = rotation_number(c, tol);
    return ((tb + rot) % 2 + 2) % 2 == 1;
}

// Rotation number of a horizontal curve = rotation of its Geiges projection.
inline int horizontal_rotation_number(const Curve4& c, Tolerances tol = {}) {
    return rotation_number(geiges_project(c, tol), tol);
}

}  // namespace engel
