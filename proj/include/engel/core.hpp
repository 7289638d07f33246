// Small fixed-size vectors, tolerances and error types shared by the library.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

namespace engel {

inline constexpr double tau = 2.0 * std::numbers::pi;

template <std::size_t N>
struct Vec {
    std::array<double, N> a{};

    double& operator[](std::size_t i) { return a[i]; }
    double operator[](std::size_t i) const { return a[i]; }

    Vec& operator+=(const Vec& o) {
        for (std::size_t i = 0; i < N; ++i) a[i] += o.a[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (std::size_t i = 0; i < N; ++i) a[i] -= o.a[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (std::size_t i = 0; i < N; ++i) a[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec u, const Vec& v) { return u += v; }
    friend Vec operator-(Vec u, const Vec& v) { return u -= v; }
    friend Vec operator*(double s, Vec u) { return u *= s; }
    friend Vec operator*(Vec u, double s) { return u *= s; }
    friend Vec operator/(Vec u, double s) { return u *= (1.0 / s); }
    friend Vec operator-(Vec u) { return u *= -1.0; }

    double dot(const Vec& o) const {
        double s = 0;
        for (std::size_t i = 0; i < N; ++i) s += a[i] * o.a[i];
        return s;
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    Vec normalized() const { return *this / norm(); }
};

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;
using Vec4 = Vec<4>;

inline Vec3 cross(const Vec3& u, const Vec3& v) {
    return {{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]}};
}

inline double det2(const Vec2& u, const Vec2& v) { return u[0] * v[1] - u[1] * v[0]; }

// 4x4 determinant by cofactor expansion; used by the S^3 degree integrand.
inline double det4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) {
    auto m3 = [](double a0, double a1, double a2, double b0, double b1, double b2, double c0,
                 double c1, double c2) {
        return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
    };
    double det = 0;
    for (int j = 0; j < 4; ++j) {
        std::array<double, 3> bb{}, cc{}, dd{};
        int k = 0;
        for (int i = 0; i < 4; ++i) {
            if (i == j) continue;
            bb[k] = b[i];
            cc[k] = c[i];
            dd[k] = d[i];
            ++k;
        }
        double cof = m3(bb[0], bb[1], bb[2], cc[0], cc[1], cc[2], dd[0], dd[1], dd[2]);
        det += ((j % 2) ? -1.0 : 1.0) * a[j] * cof;
    }
    return det;
}

// fractional part in [0,1)
inline double wrap01(double t) {
    double f = t - std::floor(t);
    return (f == 1.0) ? 0.0 : f;
}

// distance on the parameter circle
inline double circ_dist(double a, double b) {
    double d = std::fabs(wrap01(a) - wrap01(b));
    return std::min(d, 1.0 - d);
}

// Numerical thresholds. Defaults follow the library-wide conventions; every
// public operation that needs one accepts a Tolerances argument.
struct Tolerances {
    double pos_rel = 1e-7;    // closure / double-point residual, relative to curve diameter
    double leg = 1e-6;        // Legendrian / horizontal residual
    double deriv = 1e-8;      // minimal derivative norm for windings
    double sep_min = 1e-3;    // minimal parameter separation of double points
    double area = 1e-7;       // zero-area and epsilon_A thresholds

    double pos_abs(double diameter) const { return pos_rel * diameter; }
};

struct Error : std::runtime_error {
    Error(std::string n, const std::string& what) : std::runtime_error(n + ": " + what), name_(std::move(n)) {}
    const std::string& name() const { return name_; }

  private:
    std::string name_;
};

#define ENGEL_ERROR(NAME)                                                              \
    struct NAME : Error {                                                              \
        explicit NAME(const std::string& what = "") : Error(#NAME, what) {}            \
    }

ENGEL_ERROR(HorizontalViolation);
ENGEL_ERROR(NonGeneric);
ENGEL_ERROR(DerivTooSmall);
ENGEL_ERROR(PushoffCollision);
ENGEL_ERROR(DegenerateTangency);
ENGEL_ERROR(AreaObstruction);
ENGEL_ERROR(NotRegular);
ENGEL_ERROR(WindowOverlap);
ENGEL_ERROR(MoveNotApplicable);
ENGEL_ERROR(ResolutionExhausted);
ENGEL_ERROR(NotConverged);
ENGEL_ERROR(NotRegularValue);
ENGEL_ERROR(InterpolationDegenerate);
ENGEL_ERROR(BadParameters);
ENGEL_ERROR(ParseError);

#undef ENGEL_ERROR

}  // namespace engel
