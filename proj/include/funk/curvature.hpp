#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "funk/domain.hpp"
#include "funk/errors.hpp"
#include "funk/geometry.hpp"
#include "funk/metric.hpp"

namespace funk {

/// Curve data at one parameter value; t is arbitrary, not arc length.
struct CurvePointData {
    Vec2 c;
    Vec2 c_prime;
    Vec2 c_second;
};

/// Unit normal: Theta(x, n) = 1 and g_n(T, n) = 0 for the curve tangent T.
struct UnitNormal {
    Vec2 n;
    bool inner = true;
};

/// Chern-Rund covariant derivative along the curve in the t-parametrization:
/// (nabla_{c'} c')^i = c''^i + Theta(c, c') c'^i.
inline Vec2 covariant_accel_t(const BoundaryCurve& curve, const CurvePointData& cp) {
    return cp.c_second + theta(curve, {cp.c, cp.c_prime}) * cp.c_prime;
}

/// Acceleration of the arc-length reparametrization:
/// [c'' + c' (Theta - g_{c'}(nabla_{c'}c', c') / Theta^2)] / Theta^2.
inline Vec2 covariant_accel_arclength(const BoundaryCurve& curve, const CurvePointData& cp) {
    const double th = theta(curve, {cp.c, cp.c_prime});
    const Vec2 nab = cp.c_second + th * cp.c_prime;
    const Sym2 g = metric_tensor(curve, {cp.c, cp.c_prime});
    const double bracket = th - g.apply(nab, cp.c_prime) / (th * th);
    return (cp.c_second + bracket * cp.c_prime) / (th * th);
}

/// The two unit normals at x against tangent T, classified by the hint
/// direction. Solves g_{n(theta)}(T, n(theta)) = 0 on a 720-point grid of
/// direction angles followed by bisection. The normality condition is
/// equivalent to the boundary tangent at the hit of the ray x + s n being
/// parallel to T, which is what the sign function below evaluates.
inline std::pair<UnitNormal, UnitNormal> unit_normals(const BoundaryCurve& curve, Vec2 x,
                                                      Vec2 T, Vec2 inward) {
    if (!(T.norm() > 0.0)) raise(ErrorCode::InvalidDomainSpec, "zero tangent");
    const auto sign_fn = [&](double ang) {
        const RayHit hit = curve.ray_intersect(x, dir(ang));
        return dot(T, curve.outward_normal(hit.phi));
    };

    constexpr int kGrid = 720;
    std::vector<double> roots;
    double prev = sign_fn(0.0);
    for (int i = 1; i <= kGrid; ++i) {
        const double ang = i * kTwoPi / kGrid;
        const double cur = sign_fn(ang);
        if ((prev < 0.0) != (cur < 0.0)) {
            double lo = (i - 1) * kTwoPi / kGrid, hi = ang;
            double flo = prev;
            while (hi - lo > 1e-14) {
                const double mid = 0.5 * (lo + hi);
                const double fm = sign_fn(mid);
                if ((flo < 0.0) != (fm < 0.0)) hi = mid;
                else { lo = mid; flo = fm; }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    if (roots.size() != 2)
        raise(ErrorCode::NormalSolveFailed, "expected two normal directions, found " +
                                                std::to_string(roots.size()));

    const auto make = [&](double ang) {
        const RayHit hit = curve.ray_intersect(x, dir(ang));
        UnitNormal n;
        n.n = dir(ang) * hit.t;  // Theta(x, n) = 1 by construction
        n.inner = dot(n.n, inward) > 0.0;
        return n;
    };
    UnitNormal a = make(roots[0]);
    UnitNormal b = make(roots[1]);
    if (a.inner == b.inner)
        raise(ErrorCode::NormalSolveFailed, "normals not separated by the hint direction");
    if (!a.inner) std::swap(a, b);
    return {a, b};  // (inner, outer)
}

/// Normal curvature k_n = g_n(c'', n) / Theta(c, c')^2.
inline double normal_curvature(const BoundaryCurve& curve, const CurvePointData& cp,
                               const UnitNormal& n) {
    const double th = theta(curve, {cp.c, cp.c_prime});
    const Sym2 g = metric_tensor(curve, {cp.c, n.n});
    return g.apply(cp.c_second, n.n) / (th * th);
}

/// Finsler curvature k_F = sqrt(g_{cdot}(nabla, nabla)).
inline double finsler_curvature(const BoundaryCurve& curve, const CurvePointData& cp) {
    const Vec2 acc = covariant_accel_arclength(curve, cp);
    const Sym2 g = metric_tensor(curve, {cp.c, cp.c_prime});
    return std::sqrt(std::max(0.0, g.apply(acc, acc)));
}

/// Rund curvature: the Funk length of the arc-length acceleration,
/// k_R = Theta(c, nabla). Returns 0 on geodesics.
inline double rund_curvature(const BoundaryCurve& curve, const CurvePointData& cp) {
    const Vec2 acc = covariant_accel_arclength(curve, cp);
    if (acc.norm() < 1e-12) return 0.0;
    return theta(curve, {cp.c, acc});
}

/// Cross-check route for the Rund curvature through the quadratic form,
/// sqrt(g_{nabla}(nabla, nabla)). Coincides with rund_curvature.
inline double rund_curvature_form(const BoundaryCurve& curve, const CurvePointData& cp) {
    const Vec2 acc = covariant_accel_arclength(curve, cp);
    if (acc.norm() < 1e-12) return 0.0;
    const Sym2 g = metric_tensor(curve, {cp.c, acc});
    return std::sqrt(std::max(0.0, g.apply(acc, acc)));
}

}  // namespace funk
