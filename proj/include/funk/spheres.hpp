#pragma once

#include <cmath>

#include "funk/domain.hpp"
#include "funk/errors.hpp"
#include "funk/geometry.hpp"
#include "funk/normalization.hpp"

namespace funk {

enum class SphereOrientation { Forward, Backward };

struct SphereSpec {
    double radius = 1.0;
    SphereOrientation orientation = SphereOrientation::Forward;
};

/// Point and phi-jets of a sphere parametrization c(phi).
struct SpherePointData {
    Vec2 c;
    Vec2 c_d1;
    Vec2 c_d2;
};

/// rho_r^+(phi) = omega(phi) (1 - e^-r): radial function of the forward
/// sphere of radius r about o.
inline double forward_radial(const BoundaryCurve& curve, double r, double phi) {
    return curve.radial(phi) * (1.0 - std::exp(-r));
}

/// Largest backward radius for which the backward sphere still meets U.
inline double max_backward_radius(const BoundaryCurve& curve) {
    return std::log1p(curve.stats().dissymmetry);
}

/// rho_r^-(phi) = (e^r - 1) omega(phi + pi).
inline double backward_radial(const BoundaryCurve& curve, double r, double phi) {
    const double rmax = max_backward_radius(curve);
    if (!(r < rmax - 1e-9))
        raise(ErrorCode::RadiusTooLarge,
              "backward radius exceeds ln(1 + C_U) = " + std::to_string(rmax));
    return (std::exp(r) - 1.0) * curve.radial(phi + kPi);
}

/// Whether the backward-sphere point in direction phi lies inside U.
/// Pointwise criterion: r < ln(1 + omega(phi) / omega(phi + pi)).
inline bool backward_point_interior(const BoundaryCurve& curve, double r, double phi) {
    return (std::exp(r) - 1.0) * curve.radial(phi + kPi) < curve.radial(phi);
}

/// Sphere curve jets c, c', c'' at phi, in o-centered domain coordinates.
/// c(phi) = rho(phi) u(phi) with the exact radial functions above.
inline SpherePointData sphere_jets(const BoundaryCurve& curve, const SphereSpec& spec,
                                   double phi) {
    double scale = 0.0;
    double shift = 0.0;
    if (spec.orientation == SphereOrientation::Forward) {
        scale = 1.0 - std::exp(-spec.radius);
    } else {
        backward_radial(curve, spec.radius, phi);  // radius validation
        scale = std::exp(spec.radius) - 1.0;
        shift = kPi;
    }
    const auto w = curve.radial_jet(phi + shift, 2);
    const double rho = scale * w[0], rho1 = scale * w[1], rho2 = scale * w[2];
    const Vec2 u = dir(phi), up = perp(u);
    SpherePointData out;
    out.c = rho * u;
    out.c_d1 = rho1 * u + rho * up;
    out.c_d2 = (rho2 - rho) * u + 2.0 * rho1 * up;
    return out;
}

/// Sphere jets in the coordinates normalized at the study angle, with the
/// sphere parametrized by the normalized polar angle about (0, 1). At the
/// study angle the jets reduce to
///   c(0)  = (0, e^-r),
///   c'(0) = (1 - e^-r, 0),
///   c''(0) = (0, (1 - e^-r) / 2).
inline SpherePointData normalized_sphere_jets(const BoundaryCurve& curve,
                                              const AffineNormalization& N, double r,
                                              double psi) {
    const PolarJets2 w = normalized_radial_jets(curve, N, psi);
    const double scale = 1.0 - std::exp(-r);
    const double rho = scale * w.omega, rho1 = scale * w.omega_d1, rho2 = scale * w.omega_d2;
    // Direction measured from (0, -1), increasing counterclockwise; at the
    // study angle the curve point sits straight below (0, 1).
    const CurveJet4 gamma = curve.boundary_jets(psi);
    const Vec2 gp = N.apply({gamma.x.value(), gamma.y.value()}) - Vec2{0.0, 1.0};
    const double phat = angle_of(gp) + kPi / 2.0;  // 0 at the study angle
    const Vec2 u{std::sin(phat), -std::cos(phat)};
    const Vec2 up{std::cos(phat), std::sin(phat)};
    SpherePointData out;
    out.c = Vec2{0.0, 1.0} + rho * u;
    out.c_d1 = rho1 * u + rho * up;
    out.c_d2 = (rho2 - rho) * u + 2.0 * rho1 * up;
    return out;
}

}  // namespace funk
