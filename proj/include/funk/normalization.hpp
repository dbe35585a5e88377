#pragma once

#include <cmath>

#include "funk/domain.hpp"
#include "funk/errors.hpp"
#include "funk/geometry.hpp"
#include "funk/jets.hpp"

namespace funk {

/// Local description of the boundary near a point p as a graph over its
/// tangent line: X2 = f(X1) with f(0) = 0, f'(0) = 0, the domain locally
/// in X2 > f(X1). Frame coordinates are X = rotation * (x - p); the first
/// row of `rotation` is the unit tangent along increasing phi, the second
/// row the inner unit normal.
struct GraphFrame {
    Vec2 boundary_point;
    Mat2 rotation;
    double phi = 0.0;
    double f2 = 0.0;  // f''(0); equals the boundary curvature at p
    double f3 = 0.0;
    double f4 = 0.0;

    Vec2 to_frame(Vec2 x) const { return rotation * (x - boundary_point); }
    Vec2 dir_to_frame(Vec2 y) const { return rotation * y; }
    Vec2 dir_from_frame(Vec2 Y) const { return rotation.transpose() * Y; }
    Vec2 from_frame(Vec2 X) const { return rotation.transpose() * X + boundary_point; }
};

namespace detail {

/// Graph jets of a parametrized planar curve (xi(s), eta(s)) at a point
/// where eta'(s0) = 0 and xi'(s0) != 0: eta = f(xi).
inline void parametric_to_graph_jets(const Taylor5& xi, const Taylor5& eta, double& f2,
                                     double& f3, double& f4) {
    const double x1 = xi.deriv(1), x2 = xi.deriv(2), x3 = xi.deriv(3);
    const double e2 = eta.deriv(2), e3 = eta.deriv(3), e4 = eta.deriv(4);
    // f' xi' = eta' vanishes at the point; solve the higher chain rules
    // with f' = 0.
    f2 = e2 / (x1 * x1);
    f3 = (e3 - 3.0 * f2 * x1 * x2) / (x1 * x1 * x1);
    f4 = (e4 - 6.0 * f3 * x1 * x1 * x2 - f2 * (3.0 * x2 * x2 + 4.0 * x1 * x3)) /
         (x1 * x1 * x1 * x1);
}

inline Taylor5 taylor_derivative(const Taylor5& a) {
    Taylor5 r;
    for (int k = 0; k < 4; ++k) r.c[k] = (k + 1) * a.c[k + 1];
    return r;
}

}  // namespace detail

/// Boundary jets at phi expressed as a graph over the tangent line.
inline GraphFrame graph_frame_at(const BoundaryCurve& curve, double phi) {
    const CurveJet4 gamma = curve.boundary_jets(phi);
    const Vec2 p{gamma.x.value(), gamma.y.value()};
    const Vec2 tangent = normalized({gamma.x.deriv(1), gamma.y.deriv(1)});
    const Vec2 inner = perp(tangent);
    const Mat2 R = Mat2::rows(tangent, inner);

    // Frame components of gamma(psi) - p.
    const Taylor5 gx = gamma.x - p.x, gy = gamma.y - p.y;
    const Taylor5 xi = gx * R.a + gy * R.b;
    const Taylor5 eta = gx * R.c + gy * R.d;

    GraphFrame fr;
    fr.boundary_point = p;
    fr.rotation = R;
    fr.phi = phi;
    detail::parametric_to_graph_jets(xi, eta, fr.f2, fr.f3, fr.f4);
    return fr;
}

/// Result of the two-step affine normalization P at a boundary point:
/// P x = matrix * (x - p), with
///   P p = 0,  P o = (0, 1),  boundary graph jets  f(0) = f'(0) = 0,
///   f''(0) = 1/2, and the normalized radial function about P o obeying
///   omega(0) = 1, omega'(0) = 0, omega''(0) = 1/2.
struct AffineNormalization {
    double phi = 0.0;
    double alpha = 0.0;    // angle between the chord through o and the normal
    double omega_u = 0.0;  // distance from o to the boundary point
    double kbar0 = 0.0;    // curvature of the sheared boundary at the origin
    Mat2 matrix;           // composite linear map (applied after x -> x - p)
    Vec2 boundary_point;   // p in o-centered coordinates
    double H = 0.0;        // length of the normalized chord through o
    double top_height = 0.0;  // max of x2 over the normalized domain
    double f2_hat = 0.0, f3_hat = 0.0, f4_hat = 0.0;

    Vec2 apply(Vec2 x) const { return matrix * (x - boundary_point); }
    Vec2 apply_dir(Vec2 y) const { return matrix * y; }
};

/// Intermediate data after the shear step (eq-aff style map making the
/// chord through o vertical).
struct ShearedFrame {
    GraphFrame base;
    double alpha = 0.0;
    double omega_u = 0.0;
    Mat2 shear;     // acts on graph-frame coordinates
    double kbar0 = 0.0;
    double f3_bar = 0.0, f4_bar = 0.0;
};

/// Step 1: shear the graph frame so the chord from p through o becomes the
/// positive X2 axis. o is the coordinate origin of the domain.
inline ShearedFrame shear_to_chord(const BoundaryCurve& curve, const GraphFrame& frame) {
    const Vec2 xo = frame.to_frame({0.0, 0.0});
    if (!(xo.y > 0.0))
        raise(ErrorCode::DegenerateChord, "base point not on the inner side of the frame");
    const double alpha = std::atan2(xo.x, xo.y);
    if (std::abs(alpha) >= kPi / 2.0 - 1e-6)
        raise(ErrorCode::DegenerateChord, "chord nearly tangent to the boundary");

    const double ta = std::tan(alpha);
    const double ca = std::cos(alpha);
    const Mat2 S{1.0, -ta, 0.0, 1.0 / ca};

    // Shear the boundary jets and refit the graph. The tangent at the
    // origin stays horizontal, so the same conversion applies.
    const CurveJet4 gamma = curve.boundary_jets(frame.phi);
    const Taylor5 gx = gamma.x - frame.boundary_point.x;
    const Taylor5 gy = gamma.y - frame.boundary_point.y;
    const Mat2 R = frame.rotation;
    const Taylor5 xi = gx * R.a + gy * R.b;
    const Taylor5 eta = gx * R.c + gy * R.d;
    const Taylor5 xi_s = xi * S.a + eta * S.b;
    const Taylor5 eta_s = xi * S.c + eta * S.d;

    ShearedFrame sh;
    sh.base = frame;
    sh.alpha = alpha;
    sh.omega_u = frame.boundary_point.norm();  // |o - p|, o is the origin
    sh.shear = S;
    double f2b = 0.0;
    detail::parametric_to_graph_jets(xi_s, eta_s, f2b, sh.f3_bar, sh.f4_bar);
    sh.kbar0 = f2b;
    if (!(sh.kbar0 > 0.0)) raise(ErrorCode::NonConvex, "sheared boundary not convex at origin");
    return sh;
}

/// Step 2: diagonal scaling fixing the normalized conditions exactly:
/// the image of o lands at (0, 1) and the graph curvature becomes 1/2.
inline AffineNormalization scale_normalize(const BoundaryCurve& curve, const ShearedFrame& sh) {
    const double a = std::sqrt(sh.omega_u / (2.0 * sh.kbar0));
    const double b = sh.omega_u;
    const Mat2 D{1.0 / a, 0.0, 0.0, 1.0 / b};

    AffineNormalization N;
    N.phi = sh.base.phi;
    N.alpha = sh.alpha;
    N.omega_u = sh.omega_u;
    N.kbar0 = sh.kbar0;
    N.boundary_point = sh.base.boundary_point;
    N.matrix = D * sh.shear * sh.base.rotation;
    N.f2_hat = (a * a / b) * sh.kbar0;
    N.f3_hat = (a * a * a / b) * sh.f3_bar;
    N.f4_hat = (a * a * a * a / b) * sh.f4_bar;

    // Fresh ray intersection for the chord length in normalized
    // coordinates: from o along the outgoing chord direction.
    const Vec2 up = N.matrix.inverse() * Vec2{0.0, 1.0};
    const RayHit far = curve.ray_intersect({0.0, 0.0}, up);
    N.H = N.apply(far.point).y;

    // Height of the normalized domain: maximize x2 over the boundary.
    const auto height = [&](double psi) {
        return N.apply(curve.boundary_point(psi)).y;
    };
    constexpr int kScan = 512;
    double best = -1e300;
    double arg = 0.0;
    for (int i = 0; i < kScan; ++i) {
        const double psi = i * kTwoPi / kScan;
        const double h = height(psi);
        if (h > best) { best = h; arg = psi; }
    }
    double lo = arg - kTwoPi / kScan, hi = arg + kTwoPi / kScan;
    constexpr double kInvPhi = 0.6180339887498949;
    double c = hi - (hi - lo) * kInvPhi, d = lo + (hi - lo) * kInvPhi;
    for (int i = 0; i < 90 && hi - lo > 1e-14; ++i) {
        if (height(c) > height(d)) { hi = d; d = c; c = hi - (hi - lo) * kInvPhi; }
        else { lo = c; c = d; d = lo + (hi - lo) * kInvPhi; }
    }
    N.top_height = height(0.5 * (lo + hi));
    return N;
}

inline AffineNormalization normalize_at(const BoundaryCurve& curve, double phi) {
    return scale_normalize(curve, shear_to_chord(curve, graph_frame_at(curve, phi)));
}

/// Radial jets (order 2) of a curve given by jets zeta(s) = gamma(s) - center,
/// with respect to the polar angle about that center.
struct PolarJets2 {
    double omega = 0.0, omega_d1 = 0.0, omega_d2 = 0.0;
};

inline PolarJets2 polar_rejets(const Taylor5& zx, const Taylor5& zy) {
    const Taylor5 r = sqrt(zx * zx + zy * zy);
    const Taylor5 zxd = detail::taylor_derivative(zx);
    const Taylor5 zyd = detail::taylor_derivative(zy);
    const Taylor5 phid = (zx * zyd - zy * zxd) / (zx * zx + zy * zy);
    const double r1 = r.deriv(1), r2 = r.deriv(2);
    const double p1 = phid.deriv(0), p2 = phid.deriv(1);
    PolarJets2 out;
    out.omega = r.value();
    out.omega_d1 = r1 / p1;
    out.omega_d2 = (r2 * p1 - r1 * p2) / (p1 * p1 * p1);
    return out;
}

/// Radial jets of the normalized boundary about the normalized base point
/// (0, 1), with respect to the normalized polar angle. At the study angle
/// these must come out as (1, 0, 1/2).
inline PolarJets2 normalized_radial_jets(const BoundaryCurve& curve,
                                         const AffineNormalization& N, double psi) {
    const CurveJet4 gamma = curve.boundary_jets(psi);
    const Taylor5 gx = gamma.x - N.boundary_point.x;
    const Taylor5 gy = gamma.y - N.boundary_point.y;
    const Mat2& M = N.matrix;
    const Taylor5 zx = gx * M.a + gy * M.b;          // hatted coords about p
    const Taylor5 zy = gx * M.c + gy * M.d - 1.0;    // recenter at o_hat = (0,1)
    return polar_rejets(zx, zy);
}

}  // namespace funk
