// Independent test oracles: brute-force routines kept free of the library's
// candidate-generation and refinement paths.
#pragma once

#include <algorithm>
#include <vector>

#include "engel/core.hpp"
#include "engel/curve.hpp"

namespace oracle {

using engel::Curve3;
using engel::Vec2;
using engel::Vec3;

// O(N^2) pairwise scan for double points: local minima of the sample-pair
// distance below threshold, polished by alternating golden-section search.
struct BrutePair {
    double t0, t1, dist;
};

inline std::vector<BrutePair> brute_double_points(const Curve3& c, int n = 4096,
                                                  double rel_tol = 1e-6, double sep = 2e-3) {
    std::vector<Vec3> p(n);
    for (int i = 0; i < n; ++i) p[i] = c.eval(static_cast<double>(i) / n);
    double diam = 0;
    for (int i = 0; i < n; ++i) diam = std::max(diam, (p[i] - p[0]).norm());
    double thresh = std::max(8.0 * diam / n, 1e-9);
    int sepi = std::max(2, static_cast<int>(sep * n));

    auto golden = [&](double a0, double b0, double a1, double b1) {
        // minimize |c(s)-c(t)| over the box by coordinate descent
        auto dist = [&](double s, double t) { return (c.eval(engel::wrap01(s)) - c.eval(engel::wrap01(t))).norm(); };
        double s = 0.5 * (a0 + b0), t = 0.5 * (a1 + b1);
        const double gr = 0.6180339887498949;
        for (int round = 0; round < 60; ++round) {
            double lo = s - (b0 - a0), hi = s + (b0 - a0);
            for (int k = 0; k < 40; ++k) {
                double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
                if (dist(m1, t) < dist(m2, t))
                    hi = m2;
                else
                    lo = m1;
            }
            s = 0.5 * (lo + hi);
            lo = t - (b1 - a1);
            hi = t + (b1 - a1);
            for (int k = 0; k < 40; ++k) {
                double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
                if (dist(s, m1) < dist(s, m2))
                    hi = m2;
                else
                    lo = m1;
            }
            t = 0.5 * (lo + hi);
            a0 = s - (b0 - a0) * 0.5;
            b0 = s + (b0 - a0) * 0.5;
            a1 = t - (b1 - a1) * 0.5;
            b1 = t + (b1 - a1) * 0.5;
            if (b0 - a0 < 1e-13) break;
        }
        return BrutePair{engel::wrap01(s), engel::wrap01(t), dist(s, t)};
    };

    std::vector<BrutePair> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + sepi; j < n; ++j) {
            if (n - (j - i) < sepi) continue;
            double d = (p[i] - p[j]).norm();
            if (d > thresh) continue;
            // local minimum on the sample grid?
            auto dd = [&](int a, int b) { return (p[(a % n + n) % n] - p[(b % n + n) % n]).norm(); };
            if (d > dd(i + 1, j) || d > dd(i - 1, j) || d > dd(i, j + 1) || d > dd(i, j - 1)) continue;
            double h = 2.0 / n;
            BrutePair bp = golden(static_cast<double>(i) / n - h, static_cast<double>(i) / n + h,
                                  static_cast<double>(j) / n - h, static_cast<double>(j) / n + h);
            if (bp.dist > rel_tol * diam) continue;
            if (bp.t1 < bp.t0) std::swap(bp.t0, bp.t1);
            bool dup = false;
            for (auto& o : out)
                if (engel::circ_dist(o.t0, bp.t0) < sep && engel::circ_dist(o.t1, bp.t1) < sep) dup = true;
            if (!dup) out.push_back(bp);
        }
    std::sort(out.begin(), out.end(), [](const BrutePair& a, const BrutePair& b) { return a.t0 < b.t0; });
    return out;
}

// Plain angle accumulation at a fixed grid; no refinement logic.
inline double winding_oracle(const std::function<Vec2(double)>& dir, int n = 8192) {
    double acc = 0.0;
    double prev = std::atan2(dir(0.0)[1], dir(0.0)[0]);
    for (int i = 1; i <= n; ++i) {
        Vec2 v = dir(engel::wrap01(static_cast<double>(i) / n));
        double a = std::atan2(v[1], v[0]);
        double d = a - prev;
        while (d > std::numbers::pi) d -= engel::tau;
        while (d < -std::numbers::pi) d += engel::tau;
        acc += d;
        prev = a;
    }
    return acc / engel::tau;
}

// Brute-force O(N^2) planar segment-intersection count of a closed polyline.
inline int brute_crossing_count(const std::function<Vec2(double)>& f, int n = 8192, int sep = 8) {
    std::vector<Vec2> p(n);
    for (int i = 0; i < n; ++i) p[i] = f(static_cast<double>(i) / n);
    int count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (std::min(j - i, n - (j - i)) < sep) continue;
            Vec2 a = p[i], r = p[(i + 1) % n] - a;
            Vec2 b = p[j], s = p[(j + 1) % n] - b;
            double den = engel::det2(r, s);
            if (std::fabs(den) < 1e-16) continue;
            Vec2 dq = b - a;
            double u = engel::det2(dq, s) / den, v = engel::det2(dq, r) / den;
            if (u >= 0 && u < 1 && v >= 0 && v < 1) ++count;
        }
    return count;
}

// Simpson quadrature of a scalar function at fixed high resolution.
inline double simpson(const std::function<double(double)>& f, double a, double b, int cells = 1 << 16) {
    double h = (b - a) / cells, s = 0;
    for (int i = 0; i < cells; ++i) {
        double x = a + i * h;
        s += h / 6.0 * (f(x) + 4.0 * f(x + 0.5 * h) + f(x + h));
    }
    return s;
}

// Linking number of two disjoint closed polylines by counting signed crossings
// of the generic plane projection along direction axis (0=x,1=y,2=z view).
inline int crossing_linking(const std::function<Vec3(double)>& A, const std::function<Vec3(double)>& B,
                            int n = 4096) {
    std::vector<Vec3> a(n), b(n);
    for (int i = 0; i < n; ++i) {
        a[i] = A(static_cast<double>(i) / n);
        b[i] = B(static_cast<double>(i) / n);
    }
    // project out a slightly tilted direction to dodge degenerate alignments
    Vec3 dir{{0.013, 0.027, 0.9995}};
    dir = dir.normalized();
    Vec3 e1{{1, 0, 0}};
    e1 = e1 - dir.dot(e1) * dir;
    e1 = e1.normalized();
    Vec3 e2 = engel::cross(dir, e1);
    auto proj = [&](const Vec3& p) { return Vec2{{p.dot(e1), p.dot(e2)}}; };
    auto height = [&](const Vec3& p) { return p.dot(dir); };
    long sum = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec2 pa = proj(a[i]), ra = proj(a[(i + 1) % n]) - pa;
            Vec2 pb = proj(b[j]), rb = proj(b[(j + 1) % n]) - pb;
            double den = engel::det2(ra, rb);
            if (std::fabs(den) < 1e-18) continue;
            Vec2 dq = pb - pa;
            double u = engel::det2(dq, rb) / den, v = engel::det2(dq, ra) / den;
            if (u >= 0 && u < 1 && v >= 0 && v < 1) {
                double ha = height(a[i]) + u * (height(a[(i + 1) % n]) - height(a[i]));
                double hb = height(b[j]) + v * (height(b[(j + 1) % n]) - height(b[j]));
                int sign = den > 0 ? 1 : -1;
                sum += (ha > hb) ? sign : -sign;
            }
        }
    return static_cast<int>(sum / 2);
}

}  // namespace oracle
