#pragma once

#include <cmath>
#include <array>

namespace funk {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }

    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }
};

constexpr inline Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
/// Rotate by +90 degrees (counterclockwise).
constexpr inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }
inline Vec2 normalized(Vec2 v) { return v / v.norm(); }
inline Vec2 dir(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

/// 2x2 matrix, row-major.
struct Mat2 {
    double a = 1.0, b = 0.0;  // row 0
    double c = 0.0, d = 1.0;  // row 1

    constexpr Vec2 operator*(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    constexpr Mat2 operator*(const Mat2& m) const {
        return {a * m.a + b * m.c, a * m.b + b * m.d,
                c * m.a + d * m.c, c * m.b + d * m.d};
    }
    constexpr double det() const { return a * d - b * c; }
    constexpr Mat2 inverse() const {
        const double id = 1.0 / det();
        return {d * id, -b * id, -c * id, a * id};
    }
    constexpr Mat2 transpose() const { return {a, c, b, d}; }

    static constexpr Mat2 identity() { return {}; }
    static Mat2 rows(Vec2 r0, Vec2 r1) { return {r0.x, r0.y, r1.x, r1.y}; }
};

/// Symmetric 2x2 form g_ij.
struct Sym2 {
    double g11 = 0.0, g12 = 0.0, g22 = 0.0;

    constexpr double apply(Vec2 u, Vec2 v) const {
        return g11 * u.x * v.x + g12 * (u.x * v.y + u.y * v.x) + g22 * u.y * v.y;
    }
    constexpr double trace() const { return g11 + g22; }
    constexpr double det() const { return g11 * g22 - g12 * g12; }
    /// Eigenvalues, ascending.
    std::array<double, 2> eigenvalues() const {
        const double h = 0.5 * trace();
        const double r = std::sqrt(std::max(0.0, h * h - det()));
        return {h - r, h + r};
    }
    bool positive_definite() const { return g11 > 0.0 && det() > 0.0; }
};

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Wrap angle into [0, 2*pi).
inline double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0.0 ? a + kTwoPi : a;
}

}  // namespace funk
