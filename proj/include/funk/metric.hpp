#pragma once

#include <cmath>
#include <optional>

#include "funk/domain.hpp"
#include "funk/errors.hpp"
#include "funk/geometry.hpp"
#include "funk/normalization.hpp"

namespace funk {

/// Base point x (interior, o-centered coordinates) and direction y != 0.
struct PointedVector {
    Vec2 x;
    Vec2 y;
};

/// Funk metric Theta(x, y) = |y| / |x - x0| = 1 / t with x0 = x + t y the
/// forward boundary hit.
inline double theta(const BoundaryCurve& curve, const PointedVector& pv) {
    return 1.0 / curve.ray_intersect(pv.x, pv.y).t;
}

/// Closed form of the Funk metric on the unit disk about its center
/// (projectively flat Randers form). Oracle for theta() on the disk.
inline double theta_randers_disk(Vec2 x, Vec2 y) {
    const double x2 = x.norm2();
    if (x2 >= 1.0) raise(ErrorCode::OutsideDisk, "point outside the unit disk");
    const double y2 = y.norm2();
    const double xy = dot(x, y);
    return (std::sqrt(y2 - (x2 * y2 - xy * xy)) + xy) / (1.0 - x2);
}

/// Asymmetric Funk distance ln(|p - r| / |q - r|), r the boundary hit of
/// the ray from p through q. Returns 0 for coincident points.
inline double funk_distance(const BoundaryCurve& curve, Vec2 p, Vec2 q) {
    const Vec2 d = q - p;
    if (d.norm() < 1e-13) return 0.0;
    if (!curve.is_interior(q)) raise(ErrorCode::NotInterior, "q not strictly interior");
    const double t = curve.ray_intersect(p, d).t;  // t > 1 since q is interior
    return std::log(t / (t - 1.0));
}

/// Hilbert metric: symmetrization of the Funk metric.
inline double hilbert_metric(const BoundaryCurve& curve, const PointedVector& pv) {
    return 0.5 * (theta(curve, pv) + theta(curve, {pv.x, -pv.y}));
}

/// Theta together with its first and second derivatives in the base point.
struct MetricJet {
    double theta = 0.0;
    Vec2 dtheta_dx;
    Sym2 d2theta_dx2;
    RayHit hit;
};

/// Derivatives of the ray parameter t(x) at fixed y, from implicit
/// differentiation of the boundary graph at the hit point. In the hit
/// frame f'(0) = 0, so with Y the frame components of y:
///   t_X = (0, -1/Y2),
///   t_XX = f''(0)/Y2 * [[1, -Y1/Y2], [-Y1/Y2, Y1^2/Y2^2]].
/// Y2 < 0 at a forward transversal hit.
inline MetricJet theta_x_jets(const BoundaryCurve& curve, const PointedVector& pv,
                              const std::optional<GraphFrame>& frame = std::nullopt) {
    const RayHit hit = curve.ray_intersect(pv.x, pv.y);
    const GraphFrame fr = frame ? *frame : graph_frame_at(curve, hit.phi);
    const Vec2 Y = fr.dir_to_frame(pv.y);
    if (std::abs(Y.y) < 1e-10 * pv.y.norm())
        raise(ErrorCode::NearTangency, "ray nearly tangent at the hit point");

    const double t = hit.t;
    const double th = 1.0 / t;

    const double tX2 = -1.0 / Y.y;
    const Vec2 grad_t = fr.dir_from_frame({0.0, tX2});

    const double h11 = fr.f2 / Y.y;
    const double h12 = -fr.f2 * Y.x / (Y.y * Y.y);
    const double h22 = fr.f2 * Y.x * Y.x / (Y.y * Y.y * Y.y);
    // Hess_x = R^T Hess_X R.
    const Mat2& R = fr.rotation;
    const Mat2 HX{h11, h12, h12, h22};
    const Mat2 H = R.transpose() * (HX * R);

    MetricJet out;
    out.hit = hit;
    out.theta = th;
    out.dtheta_dx = grad_t * (-th * th);
    const double th2 = th * th, th3 = th2 * th;
    out.d2theta_dx2.g11 = 2.0 * th3 * grad_t.x * grad_t.x - th2 * H.a;
    out.d2theta_dx2.g12 = 2.0 * th3 * grad_t.x * grad_t.y - th2 * H.b;
    out.d2theta_dx2.g22 = 2.0 * th3 * grad_t.y * grad_t.y - th2 * H.d;
    return out;
}

/// Finite-difference fallback for the x-derivatives of Theta.
inline MetricJet theta_x_jets_fd(const BoundaryCurve& curve, const PointedVector& pv) {
    const RayHit hit = curve.ray_intersect(pv.x, pv.y);
    const double scale =
        std::min(curve.stats().omega_min, hit.t * pv.y.norm()) * 0.25;
    const double h1 = std::cbrt(1e-8) * scale;
    const double h2 = std::pow(1e-8, 0.25) * scale;

    const auto th = [&](Vec2 x) { return theta(curve, {x, pv.y}); };
    const Vec2 ex{1.0, 0.0}, ey{0.0, 1.0};

    MetricJet out;
    out.hit = hit;
    out.theta = 1.0 / hit.t;
    out.dtheta_dx = {(th(pv.x + h1 * ex) - th(pv.x - h1 * ex)) / (2.0 * h1),
                     (th(pv.x + h1 * ey) - th(pv.x - h1 * ey)) / (2.0 * h1)};
    const double t0 = th(pv.x);
    out.d2theta_dx2.g11 =
        (th(pv.x + h2 * ex) - 2.0 * t0 + th(pv.x - h2 * ex)) / (h2 * h2);
    out.d2theta_dx2.g22 =
        (th(pv.x + h2 * ey) - 2.0 * t0 + th(pv.x - h2 * ey)) / (h2 * h2);
    out.d2theta_dx2.g12 = (th(pv.x + h2 * (ex + ey)) - th(pv.x + h2 * (ex - ey)) -
                           th(pv.x + h2 * (ey - ex)) + th(pv.x - h2 * (ex + ey))) /
                          (4.0 * h2 * h2);
    return out;
}

/// Okada identity residual (Theta_{x^k} - Theta * Theta_{y^k}) for k = 1, 2,
/// with the fiber derivatives taken by central differences.
inline Vec2 okada_residual(const BoundaryCurve& curve, const PointedVector& pv) {
    const MetricJet jet = theta_x_jets(curve, pv);
    const double h = 1e-6 * pv.y.norm();
    const auto th = [&](Vec2 y) { return theta(curve, {pv.x, y}); };
    const Vec2 dy{(th(pv.y + Vec2{h, 0}) - th(pv.y - Vec2{h, 0})) / (2.0 * h),
                  (th(pv.y + Vec2{0, h}) - th(pv.y - Vec2{0, h})) / (2.0 * h)};
    return jet.dtheta_dx - jet.theta * dy;
}

/// Fundamental tensor g_ij(x, y) assembled from Theta and its x-jets:
///   g_ij = Theta (Theta_{xi xj} Theta - 2 Theta_{xi} Theta_{xj}) / Theta^3
///        + (Theta_{xi} / Theta)(Theta_{xj} / Theta).
inline Sym2 metric_tensor(const BoundaryCurve& curve, const PointedVector& pv) {
    const MetricJet j = theta_x_jets(curve, pv);
    const double th = j.theta;
    const Vec2 d = j.dtheta_dx;
    const auto assemble = [&](double dij, double di, double dj) {
        return th * (dij * th - 2.0 * di * dj) / (th * th * th) + (di / th) * (dj / th);
    };
    Sym2 g;
    g.g11 = assemble(j.d2theta_dx2.g11, d.x, d.x);
    g.g12 = assemble(j.d2theta_dx2.g12, d.x, d.y);
    g.g22 = assemble(j.d2theta_dx2.g22, d.y, d.y);
    return g;
}

/// g_y(u, v) = g_ij(x, y) u^i v^j.
inline double fundamental_form(const BoundaryCurve& curve, const PointedVector& pv, Vec2 u,
                               Vec2 v) {
    return metric_tensor(curve, pv).apply(u, v);
}

}  // namespace funk
