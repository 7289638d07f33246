// Combinatorial front diagrams: crossings with signs and over/under strand,
// cusps with orientation, extracted from a Legendrian curve's (x,z) trace.
#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "engel/core.hpp"
#include "engel/curve.hpp"
#include "engel/branch.hpp"
#include "engel/project.hpp"

namespace engel {

struct FrontCrossing {
    double t_over = 0, t_under = 0;
    int sign = 0;
    Vec2 point{};
};

struct FrontCusp {
    double t = 0;
    enum Kind { Left, Right } kind = Left;  // Right: tip at an x-maximum
};

struct FrontDiagram {
    std::vector<FrontCrossing> crossings;
    std::vector<FrontCusp> cusps;
    Frame frame = Frame::ContactXYZ;

    int writhe() const {
        int w = 0;
        for (const auto& c : crossings) w += c.sign;
        return w;
    }
};

namespace detail {

struct Key2 {
    std::int64_t x, y;
    bool operator==(const Key2& o) const { return x == o.x && y == o.y; }
};
struct Key2Hash {
    std::size_t operator()(const Key2& k) const {
        return static_cast<std::size_t>(k.x * 0x9e3779b97f4a7c15ull ^ (k.y + 0x7f4a7c15u));
    }
};

}  // namespace detail

// Crossings by planar segment intersection + Newton refinement; cusps as sign
// changes of x'. The over-strand convention: the strand with the larger slope
// coordinate is the under-strand; the sign is the determinant of the ordered
// (over, under) front tangents. Front tangencies (equal slopes at a double
// point of the 3D curve) are not crossings and are skipped.
inline FrontDiagram front_diagram(const Curve3& c, Tolerances tol = {}) {
    const int n = c.samples;
    FrontDiagram d;
    d.frame = c.frame;
    const int zi = idx_z(c.frame), si = idx_slope(c.frame);

    std::vector<Vec2> f(n);
    for (int i = 0; i < n; ++i) {
        Vec3 p = c.eval(static_cast<double>(i) / n);
        f[i] = {{p[0], p[zi]}};
    }
    Vec2 lo = f[0], hi = f[0];
    for (const Vec2& p : f)
        for (int k = 0; k < 2; ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    const double diam = std::max((hi - lo).norm(), 1e-300);
    const double pos_tol = tol.pos_abs(diam);

    // cusps
    for (double t0 : detail::circle_zeros([&](double t) { return c.deriv(t)[0]; }, 4 * n)) {
        double before = c.deriv(wrap01(t0 - 0.5 / n))[0];
        FrontCusp cu;
        cu.t = t0;
        cu.kind = before > 0 ? FrontCusp::Right : FrontCusp::Left;
        d.cusps.push_back(cu);
    }
    std::sort(d.cusps.begin(), d.cusps.end(), [](const FrontCusp& a, const FrontCusp& b) { return a.t < b.t; });

    // candidate segment pairs via a hash on segment bounding boxes
    double hmax = 0;
    for (int i = 0; i < n; ++i) hmax = std::max(hmax, (f[(i + 1) % n] - f[i]).norm());
    const double cell = std::max(2.0 * hmax, 1e-12);
    std::unordered_map<detail::Key2, std::vector<int>, detail::Key2Hash> hash;
    auto cell_of = [&](const Vec2& p) {
        return detail::Key2{static_cast<std::int64_t>(std::floor(p[0] / cell)),
                            static_cast<std::int64_t>(std::floor(p[1] / cell))};
    };
    for (int i = 0; i < n; ++i) hash[cell_of(f[i])].push_back(i);

    struct Hit {
        double ta, tb;  // refined parameters, ta < tb
        Vec2 p;
    };
    std::vector<Hit> hits;
    const int sep_idx = std::max(2, static_cast<int>(tol.sep_min * n));

    auto segint = [&](int i, int j) -> bool {
        Vec2 p = f[i], r = f[(i + 1) % n] - f[i];
        Vec2 q = f[j], s = f[(j + 1) % n] - f[j];
        double den = det2(r, s);
        if (std::fabs(den) < 1e-18) return false;
        Vec2 dq = q - p;
        double u = det2(dq, s) / den, v = det2(dq, r) / den;
        return u >= 0 && u < 1 && v >= 0 && v < 1;
    };

    for (int i = 0; i < n; ++i) {
        detail::Key2 k = cell_of(f[i]);
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                auto it = hash.find({k.x + dx, k.y + dy});
                if (it == hash.end()) continue;
                for (int j : it->second) {
                    if (j <= i) continue;
                    int didx = std::min(j - i, n - (j - i));
                    if (didx < sep_idx) continue;
                    if (!segint(i, j)) continue;
                    // Newton on (x,z)(ta) - (x,z)(tb) = 0. Hard convergence is
                    // required: spurious candidates hugging a front tangency
                    // cannot reach it and get dropped.
                    double ta = (i + 0.5) / n, tb = (j + 0.5) / n;
                    bool ok = false;
                    const double conv_hard = 1e-10 * diam;
                    for (int itn = 0; itn < 60; ++itn) {
                        Vec3 pa = c.eval(wrap01(ta)), pb = c.eval(wrap01(tb));
                        Vec2 g{{pa[0] - pb[0], pa[zi] - pb[zi]}};
                        if (g.norm() < conv_hard) {
                            ok = true;
                            break;
                        }
                        Vec3 da = c.deriv(wrap01(ta)), db = c.deriv(wrap01(tb));
                        Vec2 ca{{da[0], da[zi]}}, cb{{-db[0], -db[zi]}};
                        double det = det2(ca, cb);
                        if (std::fabs(det) < 1e-18) break;
                        double sa = -det2(g, cb) / det, sb = -det2(ca, g) / det;
                        double lim = 2.0 / n;
                        sa = std::clamp(sa, -lim, lim);
                        sb = std::clamp(sb, -lim, lim);
                        ta += sa;
                        tb += sb;
                        if (std::fabs(sa) + std::fabs(sb) < 1e-16) break;
                    }
                    if (!ok) continue;
                    ta = wrap01(ta);
                    tb = wrap01(tb);
                    if (circ_dist(ta, tb) < tol.sep_min) continue;
                    if (tb < ta) std::swap(ta, tb);
                    Vec3 pa = c.eval(ta);
                    hits.push_back({ta, tb, Vec2{{pa[0], pa[zi]}}});
                }
            }
    }

    // dedupe refined hits; hard Newton convergence makes duplicates from
    // neighboring segment-pair seeds numerically identical
    std::vector<Hit> uniq;
    for (const Hit& h : hits) {
        bool dup = false;
        for (const Hit& u : uniq)
            if (circ_dist(h.ta, u.ta) < 1e-6 && circ_dist(h.tb, u.tb) < 1e-6) {
                dup = true;
                break;
            }
        if (!dup) uniq.push_back(h);
    }

    // classify: a front tangency (equal slopes at an exact front coincidence,
    // i.e. a double point of the 3D curve) is not a crossing
    std::vector<Hit> crossings_raw, tangencies;
    for (const Hit& h : uniq) {
        double slope_a = c.eval(h.ta)[si], slope_b = c.eval(h.tb)[si];
        double scale = std::max({1.0, std::fabs(slope_a), std::fabs(slope_b)});
        if (std::fabs(slope_a - slope_b) < 1e-5 * scale)
            tangencies.push_back(h);
        else
            crossings_raw.push_back(h);
    }

    // genericity: triple points, and crossings too close to a cusp for the
    // tangent-pair sign to be conditioned
    for (const Hit& h : crossings_raw) {
        int count = 0;
        for (const Hit& u : crossings_raw)
            if ((u.p - h.p).norm() < 8 * pos_tol) ++count;
        if (count > 1) throw NonGeneric("triple point");
    }

    double speed2 = 0;
    for (int i = 0; i < n; ++i) {
        Vec3 dd = c.deriv(static_cast<double>(i) / n);
        speed2 = std::max(speed2, dd[0] * dd[0] + dd[zi] * dd[zi]);
    }

    for (const Hit& h : crossings_raw) {
        Vec3 pa = c.eval(h.ta), pb = c.eval(h.tb);
        Vec3 da = c.deriv(h.ta), db = c.deriv(h.tb);
        double slope_a = pa[si], slope_b = pb[si];
        Vec2 ta{{da[0], da[zi]}}, tb2{{db[0], db[zi]}};
        double det = det2(ta, tb2);
        if (std::fabs(det) < 1e-9 * speed2) throw NonGeneric("crossing at a cusp");
        FrontCrossing cr;
        bool a_under = slope_a > slope_b;  // larger slope = under-strand
        cr.t_under = a_under ? h.ta : h.tb;
        cr.t_over = a_under ? h.tb : h.ta;
        Vec2 over_dir = a_under ? tb2 : ta, under_dir = a_under ? ta : tb2;
        cr.sign = det2(over_dir, under_dir) > 0 ? +1 : -1;
        cr.point = h.p;
        d.crossings.push_back(cr);
    }
    std::sort(d.crossings.begin(), d.crossings.end(),
              [](const FrontCrossing& a, const FrontCrossing& b) {
                  return std::min(a.t_over, a.t_under) < std::min(b.t_over, b.t_under);
              });
    return d;
}

}  // namespace engel
