// Self-intersection detection for closed curves in R^3: uniform sampling, a
// spatial hash for candidate pairs, Gauss-Newton refinement of |c(t0)-c(t1)|^2.
#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "engel/core.hpp"
#include "engel/curve.hpp"

namespace engel {

struct SelfIntersection {
    double t0 = 0, t1 = 0;   // t0 < t1 in [0,1)
    Vec3 point{};
    double residual = 0;     // |c(t0) - c(t1)|
};

namespace detail {

struct CellKey {
    std::int64_t x, y, z;
    bool operator==(const CellKey& o) const { return x == o.x && y == o.y && z == o.z; }
};
struct CellHash {
    std::size_t operator()(const CellKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t v : {k.x, k.y, k.z}) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct GNResult {
    bool converged = false;
    bool tangential = false;
    double t0 = 0, t1 = 0, residual = 0;
    Vec3 point{};
};

inline GNResult refine_pair(const Curve3& c, double t0, double t1, double sep_min, double conv_tol) {
    GNResult r;
    for (int it = 0; it < 60; ++it) {
        Vec3 f = c.eval(wrap01(t0)) - c.eval(wrap01(t1));
        Vec3 d0 = c.deriv(wrap01(t0)), d1 = c.deriv(wrap01(t1));
        // normal equations for J = [d0, -d1]
        double a = d0.dot(d0), b = -d0.dot(d1), d = d1.dot(d1);
        double g0 = d0.dot(f), g1 = -d1.dot(f);
        double det = a * d - b * b;
        double denom = std::sqrt(a) * std::sqrt(d);
        double sin2 = det / (denom * denom > 0 ? denom * denom : 1.0);
        if (det <= 0 || sin2 < 1e-12) {
            r.tangential = f.norm() < conv_tol * 10;
            return r;
        }
        double s0 = -(d * g0 - b * g1) / det;
        double s1 = -(-b * g0 + a * g1) / det;
        double lim = 0.25 * circ_dist(t0, t1);
        s0 = std::clamp(s0, -lim, lim);
        s1 = std::clamp(s1, -lim, lim);
        t0 += s0;
        t1 += s1;
        if (circ_dist(t0, t1) < 0.5 * sep_min) return r;  // collapsing to the diagonal
        if (std::fabs(s0) + std::fabs(s1) < 1e-15) break;
    }
    t0 = wrap01(t0);
    t1 = wrap01(t1);
    Vec3 p0 = c.eval(t0), p1 = c.eval(t1);
    r.residual = (p0 - p1).norm();
    if (r.residual > conv_tol) return r;
    Vec3 d0 = c.deriv(t0), d1 = c.deriv(t1);
    double sinang = cross(d0, d1).norm() / (d0.norm() * d1.norm());
    if (sinang < 1e-5) {
        r.tangential = true;
        return r;
    }
    if (t1 < t0) std::swap(t0, t1);
    r.converged = true;
    r.t0 = t0;
    r.t1 = t1;
    r.point = 0.5 * (p0 + p1);
    return r;
}

}  // namespace detail

// All transverse double points of an immersed closed curve windows, sorted by t0.
// Throws NonGeneric when refinement lands on a tangential/non-isolated double point.
inline std::vector<SelfIntersection> find_self_intersections(const Curve3& c, Tolerances tol = {}) {
    const int n = c.samples;
    std::vector<Vec3> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = c.eval(static_cast<double>(i) / n);

    double diam = 1e-300;
    {
        Vec3 lo = pts[0], hi = pts[0];
        for (const Vec3& p : pts)
            for (int k = 0; k < 3; ++k) {
                lo[k] = std::min(lo[k], p[k]);
                hi[k] = std::max(hi[k], p[k]);
            }
        diam = std::max(diam, (hi - lo).norm());
    }
    const double conv_tol = tol.pos_abs(diam);

    double hmax = 0;
    for (int i = 0; i < n; ++i) hmax = std::max(hmax, (pts[(i + 1) % n] - pts[i]).norm());
    const double cell = std::max(2.5 * hmax, 1e-12);

    std::unordered_map<detail::CellKey, std::vector<int>, detail::CellHash> hash;
    auto key_of = [&](const Vec3& p) {
        return detail::CellKey{static_cast<std::int64_t>(std::floor(p[0] / cell)),
                               static_cast<std::int64_t>(std::floor(p[1] / cell)),
                               static_cast<std::int64_t>(std::floor(p[2] / cell))};
    };
    for (int i = 0; i < n; ++i) hash[key_of(pts[i])].push_back(i);

    const int sep_idx = std::max(2, static_cast<int>(tol.sep_min * n));
    std::vector<std::pair<int, int>> cand;
    for (int i = 0; i < n; ++i) {
        detail::CellKey k = key_of(pts[i]);
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dz = -1; dz <= 1; ++dz) {
                    auto it = hash.find({k.x + dx, k.y + dy, k.z + dz});
                    if (it == hash.end()) continue;
                    for (int j : it->second) {
                        if (j <= i) continue;
                        int didx = std::min(j - i, n - (j - i));
                        if (didx < sep_idx) continue;
                        if ((pts[i] - pts[j]).norm() < cell) cand.emplace_back(i, j);
                    }
                }
    }

    std::vector<SelfIntersection> out;
    int tangential_hits = 0;
    for (auto [i, j] : cand) {
        auto r = detail::refine_pair(c, static_cast<double>(i) / n, static_cast<double>(j) / n,
                                     tol.sep_min, conv_tol);
        if (r.tangential) {
            ++tangential_hits;
            continue;
        }
        if (!r.converged) continue;
        bool dup = false;
        for (auto& s : out) {
            if (circ_dist(s.t0, r.t0) < tol.sep_min && circ_dist(s.t1, r.t1) < tol.sep_min) {
                dup = true;
                if (r.residual < s.residual) s = {r.t0, r.t1, r.point, r.residual};
                break;
            }
        }
        if (!dup) out.push_back({r.t0, r.t1, r.point, r.residual});
    }
    if (tangential_hits > 0)
        throw NonGeneric("tangential or non-isolated double point (residual plateau)");
    std::sort(out.begin(), out.end(), [](const SelfIntersection& a, const SelfIntersection& b) {
        return a.t0 < b.t0;
    });
    return out;
}

}  // namespace engel
