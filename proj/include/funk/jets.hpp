#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace funk {

/// Truncated Taylor expansion of a scalar function of one variable,
/// kept to order 4: c[k] = f^(k)(t0) / k!.
///
/// Boundary radial functions and their compositions are differentiated
/// through this type, so fourth-order jets stay exact to roundoff.
struct Taylor5 {
    std::array<double, 5> c{};

    Taylor5() = default;
    explicit Taylor5(double value) { c[0] = value; }

    /// The independent variable itself: value + 1 * dt.
    static Taylor5 variable(double value) {
        Taylor5 r(value);
        r.c[1] = 1.0;
        return r;
    }
    static Taylor5 constant(double value) { return Taylor5(value); }

    double value() const { return c[0]; }
    /// k-th derivative (not Taylor coefficient).
    double deriv(int k) const {
        static constexpr double kFact[5] = {1, 1, 2, 6, 24};
        return c[static_cast<size_t>(k)] * kFact[k];
    }

    Taylor5 operator+(const Taylor5& o) const {
        Taylor5 r;
        for (int k = 0; k < 5; ++k) r.c[k] = c[k] + o.c[k];
        return r;
    }
    Taylor5 operator-(const Taylor5& o) const {
        Taylor5 r;
        for (int k = 0; k < 5; ++k) r.c[k] = c[k] - o.c[k];
        return r;
    }
    Taylor5 operator-() const {
        Taylor5 r;
        for (int k = 0; k < 5; ++k) r.c[k] = -c[k];
        return r;
    }
    Taylor5 operator*(const Taylor5& o) const {
        Taylor5 r;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; i + j < 5; ++j) r.c[i + j] += c[i] * o.c[j];
        return r;
    }
    Taylor5 operator*(double s) const {
        Taylor5 r;
        for (int k = 0; k < 5; ++k) r.c[k] = c[k] * s;
        return r;
    }
    Taylor5 operator+(double s) const {
        Taylor5 r = *this;
        r.c[0] += s;
        return r;
    }
    Taylor5 operator-(double s) const {
        Taylor5 r = *this;
        r.c[0] -= s;
        return r;
    }

    /// 1 / this; requires nonzero value.
    Taylor5 reciprocal() const {
        if (c[0] == 0.0) throw std::domain_error("Taylor5: reciprocal of zero");
        Taylor5 r;
        r.c[0] = 1.0 / c[0];
        for (int k = 1; k < 5; ++k) {
            double s = 0.0;
            for (int j = 1; j <= k; ++j) s += c[j] * r.c[k - j];
            r.c[k] = -s / c[0];
        }
        return r;
    }
    Taylor5 operator/(const Taylor5& o) const { return *this * o.reciprocal(); }
};

inline Taylor5 operator*(double s, const Taylor5& t) { return t * s; }
inline Taylor5 operator+(double s, const Taylor5& t) { return t + s; }
inline Taylor5 operator-(double s, const Taylor5& t) { return (-t) + s; }

inline Taylor5 sqrt(const Taylor5& a) {
    if (a.c[0] <= 0.0) throw std::domain_error("Taylor5: sqrt of non-positive value");
    Taylor5 r;
    r.c[0] = std::sqrt(a.c[0]);
    for (int k = 1; k < 5; ++k) {
        double s = 0.0;
        for (int j = 1; j < k; ++j) s += r.c[j] * r.c[k - j];
        r.c[k] = (a.c[k] - s) / (2.0 * r.c[0]);
    }
    return r;
}

/// sin/cos of a jet whose linear coefficient drives the chain rule.
inline void sincos(const Taylor5& a, Taylor5& s, Taylor5& c) {
    // Derivative recursion: s' = a' c, c' = -a' s, expressed on Taylor
    // coefficients: (k+1) s_{k+1} = sum_{j} (j+1) a_{j+1} c_{k-j}.
    s = Taylor5(std::sin(a.c[0]));
    c = Taylor5(std::cos(a.c[0]));
    for (int k = 0; k < 4; ++k) {
        double ds = 0.0, dc = 0.0;
        for (int j = 0; j <= k; ++j) {
            ds += (j + 1) * a.c[j + 1] * c.c[k - j];
            dc -= (j + 1) * a.c[j + 1] * s.c[k - j];
        }
        s.c[k + 1] = ds / (k + 1);
        c.c[k + 1] = dc / (k + 1);
    }
}

inline Taylor5 sin(const Taylor5& a) {
    Taylor5 s, c;
    sincos(a, s, c);
    return s;
}
inline Taylor5 cos(const Taylor5& a) {
    Taylor5 s, c;
    sincos(a, s, c);
    return c;
}

/// Jet of a planar curve: value and derivatives of both components.
struct CurveJet4 {
    Taylor5 x, y;
};

}  // namespace funk
