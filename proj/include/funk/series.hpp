#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "funk/errors.hpp"

namespace funk {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Element of Q(sqrt(2)): a + b sqrt(2) with rational a, b. Closed under
/// the field operations, which keeps the Rund-curvature branch (constant
/// term 1 + sqrt(2)) inside exact arithmetic.
struct Quad {
    Rational a{0};
    Rational b{0};

    Quad() = default;
    Quad(int v) : a(v) {}
    Quad(const Rational& r) : a(r) {}
    Quad(Rational av, Rational bv) : a(std::move(av)), b(std::move(bv)) {}

    static Quad sqrt2() { return Quad(Rational(0), Rational(1)); }

    Quad operator+(const Quad& o) const { return {a + o.a, b + o.b}; }
    Quad operator-(const Quad& o) const { return {a - o.a, b - o.b}; }
    Quad operator-() const { return {-a, -b}; }
    Quad operator*(const Quad& o) const {
        return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
    }
    Quad operator/(const Quad& o) const {
        const Rational n = o.a * o.a - 2 * o.b * o.b;
        if (n == 0) throw std::domain_error("Quad: division by zero");
        return {(a * o.a - 2 * b * o.b) / n, (b * o.a - a * o.b) / n};
    }
    bool operator==(const Quad& o) const { return a == o.a && b == o.b; }
    bool is_zero() const { return a == 0 && b == 0; }

    double to_double() const {
        return a.convert_to<double>() + b.convert_to<double>() * 1.4142135623730951;
    }
};

namespace num {

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Quad& x) { return x.is_zero(); }
inline double to_double(double x) { return x; }
inline double to_double(const Quad& x) { return x.to_double(); }

inline double sqrt_coeff(double x) {
    if (!(x > 0.0)) throw std::domain_error("series sqrt: leading coefficient not positive");
    return std::sqrt(x);
}
/// Exact square root of a rational perfect square (b must be 0).
inline Quad sqrt_coeff(const Quad& x) {
    if (!(x.b == 0)) throw std::domain_error("series sqrt: leading term not rational");
    const BigInt num = boost::multiprecision::numerator(x.a);
    const BigInt den = boost::multiprecision::denominator(x.a);
    if (num < 0) throw std::domain_error("series sqrt: negative leading coefficient");
    const BigInt rn = boost::multiprecision::sqrt(num);
    const BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den)
        throw std::domain_error("series sqrt: leading coefficient not a perfect square");
    return Quad(Rational(rn, rd));
}

}  // namespace num

/// Truncated series on the half-power grid: coef[i] multiplies s^(kmin+i)
/// where s stands for x2^(1/2) (or e^(-r/2) after the sphere substitution
/// x2 = e^-r, which is the identity on this grid). kmin may be negative.
///
/// trust is the last exponent the series is reliable through; arithmetic
/// propagates it conservatively.
template <class T>
struct PSeries {
    int kmin = 0;
    std::vector<T> coef;
    int trust = 0;

    static constexpr int kBigTrust = 1 << 20;

    PSeries() = default;

    static PSeries zero(int trust_order) {
        PSeries r;
        r.trust = trust_order;
        return r;
    }
    /// Single term c * s^k.
    static PSeries monomial(T c, int k, int trust_order) {
        PSeries r;
        r.trust = trust_order;
        if (!num::is_zero(c) && k <= trust_order) {
            r.kmin = k;
            r.coef.push_back(std::move(c));
        }
        return r;
    }
    static PSeries constant(T c, int trust_order) { return monomial(std::move(c), 0, trust_order); }

    bool is_zero() const { return coef.empty(); }
    /// Exponent of the leading nonzero term; one past trust when zero.
    int ord() const { return coef.empty() ? trust + 1 : kmin; }
    int kmax_stored() const { return kmin + static_cast<int>(coef.size()) - 1; }

    T coeff(int k) const {
        if (k < kmin || k > kmax_stored()) return T(0);
        return coef[static_cast<size_t>(k - kmin)];
    }

    void normalize() {
        while (!coef.empty() && num::is_zero(coef.front())) {
            coef.erase(coef.begin());
            ++kmin;
        }
        while (!coef.empty() && kmax_stored() > trust) coef.pop_back();
        while (!coef.empty() && num::is_zero(coef.back())) coef.pop_back();
        if (coef.empty()) kmin = 0;
    }

    PSeries truncated(int k) const {
        PSeries r = *this;
        r.trust = std::min(trust, k);
        r.normalize();
        return r;
    }

    double eval(double s) const {
        double acc = 0.0;
        for (size_t i = 0; i < coef.size(); ++i)
            acc += num::to_double(coef[i]) * std::pow(s, kmin + static_cast<int>(i));
        return acc;
    }
};

namespace series_ops {

template <class T>
PSeries<T> add(const PSeries<T>& a, const PSeries<T>& b) {
    PSeries<T> r;
    r.trust = std::min(a.trust, b.trust);
    if (a.is_zero() && b.is_zero()) return r;
    r.kmin = std::min(a.is_zero() ? b.kmin : a.kmin, b.is_zero() ? a.kmin : b.kmin);
    const int hi = std::min(std::max(a.kmax_stored(), b.kmax_stored()), r.trust);
    for (int k = r.kmin; k <= hi; ++k) r.coef.push_back(a.coeff(k) + b.coeff(k));
    r.normalize();
    return r;
}

template <class T>
PSeries<T> negate(const PSeries<T>& a) {
    PSeries<T> r = a;
    for (auto& c : r.coef) c = -c;
    return r;
}

template <class T>
PSeries<T> sub(const PSeries<T>& a, const PSeries<T>& b) { return add(a, negate(b)); }

template <class T>
PSeries<T> scale(const PSeries<T>& a, const T& s) {
    PSeries<T> r = a;
    for (auto& c : r.coef) c = c * s;
    r.normalize();
    return r;
}

template <class T>
PSeries<T> mul(const PSeries<T>& a, const PSeries<T>& b) {
    PSeries<T> r;
    const long t1 = static_cast<long>(a.ord()) + b.trust;
    const long t2 = static_cast<long>(b.ord()) + a.trust;
    r.trust = static_cast<int>(std::min({t1, t2, static_cast<long>(PSeries<T>::kBigTrust)}));
    if (a.is_zero() || b.is_zero()) return r;
    r.kmin = a.kmin + b.kmin;
    const int hi = std::min(a.kmax_stored() + b.kmax_stored(), r.trust);
    if (hi < r.kmin) return r;
    r.coef.assign(static_cast<size_t>(hi - r.kmin + 1), T(0));
    for (size_t i = 0; i < a.coef.size(); ++i) {
        for (size_t j = 0; j < b.coef.size(); ++j) {
            const int k = a.kmin + static_cast<int>(i) + b.kmin + static_cast<int>(j);
            if (k > hi) break;
            r.coef[static_cast<size_t>(k - r.kmin)] = r.coef[static_cast<size_t>(k - r.kmin)] +
                                                      a.coef[i] * b.coef[j];
        }
    }
    r.normalize();
    return r;
}

template <class T>
PSeries<T> reciprocal(const PSeries<T>& a) {
    if (a.is_zero())
        raise(ErrorCode::ZeroLeadingTerm, "series reciprocal of zero");
    const int m = a.kmin;
    const int new_trust = std::min(a.trust - 2 * m, PSeries<T>::kBigTrust);
    PSeries<T> r;
    r.trust = new_trust;
    r.kmin = -m;
    const int count = new_trust - (-m) + 1;
    if (count <= 0) return r;
    r.coef.assign(static_cast<size_t>(count), T(0));
    const T inv0 = T(1) / a.coef[0];
    r.coef[0] = inv0;
    for (int n = 1; n < count; ++n) {
        T s(0);
        const int jmax = std::min<int>(n, static_cast<int>(a.coef.size()) - 1);
        for (int j = 1; j <= jmax; ++j) s = s + a.coef[static_cast<size_t>(j)] * r.coef[static_cast<size_t>(n - j)];
        r.coef[static_cast<size_t>(n)] = -s * inv0;
    }
    r.normalize();
    return r;
}

template <class T>
PSeries<T> sqrt(const PSeries<T>& a) {
    if (a.is_zero()) raise(ErrorCode::ZeroLeadingTerm, "series sqrt of zero");
    if (a.kmin % 2 != 0)
        raise(ErrorCode::ZeroLeadingTerm, "series sqrt: odd leading exponent");
    const int m = a.kmin;
    const int new_trust = std::min(a.trust - m / 2, PSeries<T>::kBigTrust);
    PSeries<T> r;
    r.trust = new_trust;
    r.kmin = m / 2;
    const int count = new_trust - m / 2 + 1;
    if (count <= 0) return r;
    r.coef.assign(static_cast<size_t>(count), T(0));
    r.coef[0] = num::sqrt_coeff(a.coef[0]);
    const T two_r0 = r.coef[0] + r.coef[0];
    for (int n = 1; n < count; ++n) {
        T s(0);
        for (int j = 1; j < n; ++j) s = s + r.coef[static_cast<size_t>(j)] * r.coef[static_cast<size_t>(n - j)];
        const T an = (n < static_cast<int>(a.coef.size())) ? a.coef[static_cast<size_t>(n)] : T(0);
        r.coef[static_cast<size_t>(n)] = (an - s) / two_r0;
    }
    r.normalize();
    return r;
}

/// Compose a polynomial p (coefficients p[0] + p[1] u + ...) with a series u
/// of positive order.
template <class T>
PSeries<T> poly_compose(const std::vector<T>& p, const PSeries<T>& u, int trust_order) {
    PSeries<T> acc = PSeries<T>::zero(trust_order);
    // Horner from the top.
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = add(mul(acc, u), PSeries<T>::constant(*it, trust_order));
    }
    return acc;
}

}  // namespace series_ops

template <class T>
PSeries<T> operator+(const PSeries<T>& a, const PSeries<T>& b) { return series_ops::add(a, b); }
template <class T>
PSeries<T> operator-(const PSeries<T>& a, const PSeries<T>& b) { return series_ops::sub(a, b); }
template <class T>
PSeries<T> operator*(const PSeries<T>& a, const PSeries<T>& b) { return series_ops::mul(a, b); }

template <class T>
T sqrt2_value();
template <>
inline double sqrt2_value<double>() { return 1.4142135623730951; }
template <>
inline Quad sqrt2_value<Quad>() { return Quad::sqrt2(); }

/// -------------------------------------------------------------------------
/// Model boundary: the normalized quartic graph
///   f(u) = u^2/4 + (f3/6) u^3 + (f4/24) u^4,
/// which carries every expansion of the normalized configuration.
/// -------------------------------------------------------------------------

template <class T>
struct BoundaryModel {
    T f3{0};
    T f4{0};

    std::vector<T> f_poly() const {
        return {T(0), T(0), T(1) / T(4), f3 / T(6), f4 / T(24)};
    }
    std::vector<T> fp_poly() const {  // f'
        return {T(0), T(1) / T(2), f3 / T(2), f4 / T(6)};
    }
    std::vector<T> fpp_poly() const {  // f''
        return {T(1) / T(2), f3, f4 / T(2)};
    }
};

/// Solve x2 = f(direction * t) for the ray parameter t as a half-power
/// series t = B sqrt(x2) + C x2 + ..., branch B = 2 * direction; the A = 0
/// branch (t -> 0 with x2) is selected. Newton iteration on series.
template <class T>
PSeries<T> solve_ray_series(const BoundaryModel<T>& model, int direction, int order) {
    if (direction != 1 && direction != -1)
        raise(ErrorCode::InvalidDomainSpec, "direction must be +1 or -1");
    const int W = order + 4;
    using namespace series_ops;
    const PSeries<T> x2 = PSeries<T>::monomial(T(1), 2, W);
    const T d = direction == 1 ? T(1) : T(-1);
    // u = direction * t satisfies x2 = f(u) with u ~ 2 sqrt(x2).
    PSeries<T> u = PSeries<T>::monomial(T(2), 1, W);
    const auto f = model.f_poly();
    const auto fp = model.fp_poly();
    const int iters = 2 + static_cast<int>(std::ceil(std::log2(W + 2.0)));
    for (int i = 0; i < iters; ++i) {
        const PSeries<T> res = sub(poly_compose(f, u, W), x2);
        if (res.is_zero()) break;
        u = sub(u, mul(res, reciprocal(poly_compose(fp, u, W))));
    }
    PSeries<T> t = scale(u, d);
    return t.truncated(std::min(t.ord() + order, t.trust));
}

/// Residual of the ray functional equation for a candidate t-series:
/// f(direction * t) - x2, which must vanish through the retained orders.
template <class T>
PSeries<T> ray_equation_residual(const BoundaryModel<T>& model, int direction,
                                 const PSeries<T>& t) {
    using namespace series_ops;
    const T d = direction == 1 ? T(1) : T(-1);
    const PSeries<T> x2 = PSeries<T>::monomial(T(1), 2, t.trust);
    return sub(poly_compose(model.f_poly(), scale(t, d), t.trust), x2);
}

/// Everything evaluated along the inner normal ray at (0, x2) in direction
/// (1, 0): the tangent-direction Funk metric, its x-jets and the metric
/// tensor, each as a half-power series in sqrt(x2).
template <class T>
struct FrameSeries {
    PSeries<T> t_plus, t_minus;
    PSeries<T> theta;      // Theta(0,x2,1,0)
    PSeries<T> t_x2, t_x2x2;
    PSeries<T> theta_x1, theta_x2, theta_x1x1, theta_x1x2, theta_x2x2;
    PSeries<T> g11, g12, g22;
};

template <class T>
FrameSeries<T> frame_series(const BoundaryModel<T>& model, int order) {
    using namespace series_ops;
    const int W = order + 6;
    FrameSeries<T> fs;
    fs.t_plus = solve_ray_series(model, 1, W);
    fs.t_minus = solve_ray_series(model, -1, W);

    const PSeries<T>& t = fs.t_plus;
    fs.theta = reciprocal(t);
    const PSeries<T> fp = poly_compose(model.fp_poly(), t, W);
    const PSeries<T> fpp = poly_compose(model.fpp_poly(), t, W);
    fs.t_x2 = reciprocal(fp);
    fs.t_x2x2 = negate(mul(fpp, mul(fs.t_x2, mul(fs.t_x2, fs.t_x2))));

    const PSeries<T> th2 = mul(fs.theta, fs.theta);
    const PSeries<T> th3 = mul(th2, fs.theta);
    // t_x1 = -1 and t_x1x1 = t_x1x2 = 0 along this ray.
    fs.theta_x1 = th2;
    fs.theta_x2 = negate(mul(fs.t_x2, th2));
    fs.theta_x1x1 = scale(th3, T(2));
    fs.theta_x1x2 = scale(mul(th3, fs.t_x2), T(-2));
    fs.theta_x2x2 = sub(scale(mul(th3, mul(fs.t_x2, fs.t_x2)), T(2)), mul(th2, fs.t_x2x2));

    // g_ij = (Theta Theta_xixj - Theta_xi Theta_xj) / Theta^2.
    const PSeries<T> inv_th2 = reciprocal(th2);
    const auto assemble = [&](const PSeries<T>& dij, const PSeries<T>& di, const PSeries<T>& dj) {
        return mul(sub(mul(fs.theta, dij), mul(di, dj)), inv_th2);
    };
    fs.g11 = assemble(fs.theta_x1x1, fs.theta_x1, fs.theta_x1);
    fs.g12 = assemble(fs.theta_x1x2, fs.theta_x1, fs.theta_x2);
    fs.g22 = assemble(fs.theta_x2x2, fs.theta_x2, fs.theta_x2);

    const auto cut = [&](PSeries<T>& p) { p = p.truncated(std::min(p.trust, p.ord() + order)); };
    cut(fs.t_plus); cut(fs.t_minus); cut(fs.theta); cut(fs.t_x2); cut(fs.t_x2x2);
    cut(fs.theta_x1); cut(fs.theta_x2); cut(fs.theta_x1x1); cut(fs.theta_x1x2);
    cut(fs.theta_x2x2); cut(fs.g11); cut(fs.g12); cut(fs.g22);
    return fs;
}

/// Sphere-asymptotics series in s = e^(-r/2): the three curvature notions
/// along the forward geodesic circle through the normalized study point,
/// traversed with c'(0) along +x1.
template <class T>
struct SphereSeries {
    PSeries<T> kn_inner, kn_outer;
    PSeries<T> kF2, kF, kR;
    PSeries<T> t1, t2;           // Rund branch parameters
    PSeries<T> ortho_residual;   // g_T(nabla, T), vanishes identically
};

template <class T>
SphereSeries<T> sphere_series(const BoundaryModel<T>& model, const T& chord_h,
                              const T& top_height, int order) {
    using namespace series_ops;
    const int W = order + 6;
    const FrameSeries<T> fr = frame_series(model, W);

    // x2 = e^-r = s^2; the frame series reads verbatim on the s-grid.
    const PSeries<T> s2 = PSeries<T>::monomial(T(1), 2, W);
    const PSeries<T> one = PSeries<T>::constant(T(1), W);
    const PSeries<T> tau = sub(one, s2);                       // 1 - e^-r
    const PSeries<T> q = scale(tau, T(1) / T(2));              // c''_2(0)
    const PSeries<T> theta_c = mul(tau, fr.theta);             // Theta(c, c')
    const PSeries<T> inv_theta_c2 = reciprocal(mul(theta_c, theta_c));

    // Normal curvatures: numerator g_n(c'', n) with n = (0, +-1) scaled to
    // unit Funk length; both reduce to chord expressions.
    SphereSeries<T> out;
    const PSeries<T> inv_tau2_th2 = reciprocal(mul(mul(tau, tau), mul(fr.theta, fr.theta)));
    const PSeries<T> top = sub(PSeries<T>::constant(top_height, W), s2);
    out.kn_inner = mul(q, mul(reciprocal(top), inv_tau2_th2));
    out.kn_outer = negate(mul(q, mul(reciprocal(s2), inv_tau2_th2)));

    // Arc-length acceleration through eq-nabl, mirrored in series.
    const PSeries<T> V1 = mul(mul(tau, tau), fr.theta);  // nabla_t component 1
    const PSeries<T>& V2 = q;                            // component 2
    const PSeries<T> gVT = mul(tau, add(mul(fr.g11, V1), mul(fr.g12, V2)));
    const PSeries<T> bracket = sub(theta_c, mul(gVT, inv_theta_c2));
    const PSeries<T> A1 = mul(mul(tau, bracket), inv_theta_c2);
    const PSeries<T> A2 = mul(q, inv_theta_c2);

    out.ortho_residual = mul(tau, add(mul(fr.g11, A1), mul(fr.g12, A2)));
    out.kF2 = add(add(mul(fr.g11, mul(A1, A1)), scale(mul(fr.g12, mul(A1, A2)), T(2))),
                  mul(fr.g22, mul(A2, A2)));
    out.kF = sqrt(out.kF2);

    // Rund branch: x2 + t A2 = f(t A1) (and the reflected branch), solved
    // by series Newton from the constant roots 1 +- sqrt(2).
    const auto branch = [&](const PSeries<T>& B1, const PSeries<T>& B2, T t0) {
        PSeries<T> t = PSeries<T>::constant(t0, W);
        const auto f = model.f_poly();
        const auto fp = model.fp_poly();
        const int iters = 3 + static_cast<int>(std::ceil(std::log2(W + 2.0)));
        for (int i = 0; i < iters; ++i) {
            const PSeries<T> u = mul(t, B1);
            const PSeries<T> res = sub(add(s2, mul(t, B2)), poly_compose(f, u, W));
            if (res.is_zero()) break;
            const PSeries<T> dres = sub(B2, mul(B1, poly_compose(fp, u, W)));
            t = sub(t, mul(res, reciprocal(dres)));
        }
        return t;
    };
    const T sqrt2 = sqrt2_value<T>();
    out.t1 = branch(A1, A2, T(1) + sqrt2);
    out.t2 = branch(negate(A1), negate(A2), sqrt2 - T(1));
    out.kR = reciprocal(out.t1);

    const auto cut = [&](PSeries<T>& p) { p = p.truncated(std::min(p.trust, p.ord() + order)); };
    cut(out.kn_inner); cut(out.kn_outer); cut(out.kF2); cut(out.kF); cut(out.kR);
    cut(out.t1); cut(out.t2);
    out.ortho_residual = out.ortho_residual.truncated(std::min(out.ortho_residual.trust, order));
    return out;
}

}  // namespace funk
