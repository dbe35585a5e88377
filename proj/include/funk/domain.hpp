#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "funk/errors.hpp"
#include "funk/geometry.hpp"
#include "funk/jets.hpp"

namespace funk {

enum class CurveKind { UnitDisk, Ellipse, FourierRadial };

struct DomainStats {
    double omega_min = 0.0;   // min radial distance from o to the boundary
    double omega_max = 0.0;   // max radial distance
    double k_min = 0.0;       // min boundary curvature
    double k_max = 0.0;       // max boundary curvature
    double dissymmetry = 1.0; // C_U = max over directions of omega(u)/omega(-u)
};

struct RayHit {
    double t = 0.0;  // ray parameter, x + t*y on the boundary
    Vec2 point;      // hit point, coordinates centered at the base point
    double phi = 0.0;
};

/// Strictly convex C^4 planar domain given by the radial function
/// omega(phi) about a distinguished interior base point o.
///
/// All coordinates used by this library are centered at o. The domain
/// file places o relative to the curve's natural center; construction
/// recenters so that o is the origin.
class BoundaryCurve {
  public:
    /// Centered unit disk, optionally with o displaced from the center.
    static BoundaryCurve unit_disk(Vec2 base_point_offset = {0.0, 0.0}) {
        BoundaryCurve c;
        c.kind_ = CurveKind::UnitDisk;
        c.semi_a_ = c.semi_b_ = 1.0;
        c.center_ = -base_point_offset;
        c.validate();
        return c;
    }

    /// Axis-aligned ellipse with semi-axes (a, b), o at center + offset.
    static BoundaryCurve ellipse(double a, double b, Vec2 base_point_offset = {0.0, 0.0}) {
        if (!(a > 0.0) || !(b > 0.0))
            raise(ErrorCode::InvalidDomainSpec, "ellipse semi-axes must be positive");
        BoundaryCurve c;
        c.kind_ = CurveKind::Ellipse;
        c.semi_a_ = a;
        c.semi_b_ = b;
        c.center_ = -base_point_offset;
        c.validate();
        return c;
    }

    /// Radial trigonometric polynomial about o:
    ///   omega(phi) = c0 + sum_k cos_k * cos(k phi) + sin_k * sin(k phi).
    /// Harmonics above 8 are rejected; the base point must coincide with
    /// the expansion origin (the radial series has no closed form about a
    /// shifted point).
    static BoundaryCurve fourier(double constant, std::vector<double> cos_coeffs,
                                 std::vector<double> sin_coeffs) {
        if (cos_coeffs.size() > 8 || sin_coeffs.size() > 8)
            raise(ErrorCode::InvalidDomainSpec, "fourier-radial supports harmonics 1..8 only");
        BoundaryCurve c;
        c.kind_ = CurveKind::FourierRadial;
        c.fourier_const_ = constant;
        c.fourier_cos_ = std::move(cos_coeffs);
        c.fourier_sin_ = std::move(sin_coeffs);
        c.validate();
        return c;
    }

    CurveKind kind() const { return kind_; }
    const DomainStats& stats() const { return stats_; }

    /// omega and derivatives up to `order` (<= 4) at phi.
    std::vector<double> radial_jet(double phi, int order) const {
        if (order < 0 || order > 4)
            raise(ErrorCode::InvalidDomainSpec, "radial_jet supports orders 0..4");
        const Taylor5 w = radial_taylor(phi);
        std::vector<double> out;
        out.reserve(static_cast<size_t>(order) + 1);
        for (int k = 0; k <= order; ++k) out.push_back(w.deriv(k));
        return out;
    }

    double radial(double phi) const { return radial_taylor(phi).value(); }

    /// Boundary point at angle phi (coordinates centered at o).
    Vec2 boundary_point(double phi) const {
        const double w = radial(phi);
        return {w * std::cos(phi), w * std::sin(phi)};
    }

    /// Jets of the boundary parametrization gamma(phi) = omega(phi) u(phi).
    CurveJet4 boundary_jets(double phi) const {
        const Taylor5 w = radial_taylor(phi);
        const Taylor5 ph = Taylor5::variable(phi);
        Taylor5 s, c;
        sincos(ph, s, c);
        return {w * c, w * s};
    }

    /// Unit tangent (along increasing phi) and outward unit normal.
    Vec2 tangent(double phi) const {
        const auto j = radial_jet(phi, 1);
        const Vec2 u = dir(phi);
        return normalized(j[1] * u + j[0] * perp(u));
    }
    Vec2 outward_normal(double phi) const { return -perp(tangent(phi)); }

    /// Euclidean curvature of the boundary at phi, from the polar formula
    /// kappa = (w^2 + 2 w'^2 - w w'') / (w^2 + w'^2)^(3/2).
    double boundary_curvature(double phi) const {
        const auto j = radial_jet(phi, 2);
        const double w = j[0], w1 = j[1], w2 = j[2];
        const double num = w * w + 2.0 * w1 * w1 - w * w2;
        const double den = std::pow(w * w + w1 * w1, 1.5);
        const double kappa = num / den;
        if (!(kappa > 0.0)) raise(ErrorCode::NonConvex, "non-convex boundary point");
        return kappa;
    }

    /// Cosine of the angle between the outer normal at phi and the radial
    /// direction from o. Bounded below by omega_min * k_min.
    double radial_normal_cosine(double phi) const {
        return dot(dir(phi), outward_normal(phi));
    }

    bool is_interior(Vec2 x, double margin = 1e-12) const {
        const double r = x.norm();
        if (r == 0.0) return true;
        return r < radial(angle_of(x)) - margin;
    }

    /// Intersection of the ray x + t y (t > 0) with the boundary.
    /// x must be strictly interior, y nonzero.
    RayHit ray_intersect(Vec2 x, Vec2 y) const {
        const double ny = y.norm();
        if (!(ny > 0.0)) raise(ErrorCode::InvalidDomainSpec, "ray direction must be nonzero");
        if (!is_interior(x))
            raise(ErrorCode::NotInterior, "ray origin not strictly interior");

        const auto g = [&](double t) {
            const Vec2 p = x + t * y;
            return p.norm() - radial(angle_of(p));
        };
        double lo = 0.0;
        double hi = (stats_.omega_max + x.norm()) / ny * (1.0 + 1e-12);
        if (g(hi) < 0.0) hi *= 2.0;  // paranoia against rounding at the bound

        // Bisection-safeguarded Newton on g(t).
        double t = 0.5 * hi;
        for (int it = 0; it < 200; ++it) {
            const Vec2 p = x + t * y;
            const double r = p.norm();
            const double phi = angle_of(p);
            const auto j = radial_jet(phi, 1);
            const double gv = r - j[0];
            if (gv > 0.0) hi = t; else lo = t;
            const double dphi_dt = cross(p, y) / (r * r);
            const double dg = dot(p, y) / r - j[1] * dphi_dt;
            double tn = (dg != 0.0) ? t - gv / dg : -1.0;
            if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
            if (std::abs(tn - t) < 1e-15 * std::max(1.0, t)) {
                t = tn;
                break;
            }
            t = tn;
            if (it == 199) raise(ErrorCode::NoConvergence, "ray intersection did not converge");
        }
        const Vec2 p = x + t * y;
        return {t, p, wrap_angle(angle_of(p))};
    }

    /// C_U: max over sampled directions of omega(phi) / omega(phi + pi),
    /// refined by golden-section around the best sample.
    double dissymmetry() const { return stats_.dissymmetry; }

  private:
    BoundaryCurve() = default;

    Taylor5 radial_taylor(double phi) const {
        const Taylor5 ph = Taylor5::variable(phi);
        switch (kind_) {
            case CurveKind::UnitDisk:
            case CurveKind::Ellipse: {
                // Point o + w u on the ellipse about center C:
                // A w^2 + 2 B w + C0 = 0 with oc = o - C = -center_.
                const Vec2 oc = -center_;
                Taylor5 s, c;
                sincos(ph, s, c);
                const double ia2 = 1.0 / (semi_a_ * semi_a_);
                const double ib2 = 1.0 / (semi_b_ * semi_b_);
                const Taylor5 A = c * c * ia2 + s * s * ib2;
                const Taylor5 B = c * (oc.x * ia2) + s * (oc.y * ib2);
                const double C0 = oc.x * oc.x * ia2 + oc.y * oc.y * ib2 - 1.0;
                return (sqrt(B * B - A * C0) - B) / A;
            }
            case CurveKind::FourierRadial: {
                Taylor5 w = Taylor5::constant(fourier_const_);
                for (size_t k = 0; k < fourier_cos_.size(); ++k)
                    if (fourier_cos_[k] != 0.0)
                        w = w + cos(ph * double(k + 1)) * fourier_cos_[k];
                for (size_t k = 0; k < fourier_sin_.size(); ++k)
                    if (fourier_sin_[k] != 0.0)
                        w = w + sin(ph * double(k + 1)) * fourier_sin_[k];
                return w;
            }
        }
        raise(ErrorCode::InvalidDomainSpec, "unreachable curve kind");
    }

    template <class F>
    static double golden_min(F&& f, double a, double b) {
        constexpr double kInvPhi = 0.6180339887498949;
        double c = b - (b - a) * kInvPhi;
        double d = a + (b - a) * kInvPhi;
        for (int i = 0; i < 80 && (b - a) > 1e-13; ++i) {
            if (f(c) < f(d)) { b = d; d = c; c = b - (b - a) * kInvPhi; }
            else { a = c; c = d; d = a + (b - a) * kInvPhi; }
        }
        return 0.5 * (a + b);
    }

    void validate() {
        constexpr int kSamples = 4096;
        constexpr double kMinCurvature = 1e-3;
        const double dphi = kTwoPi / kSamples;

        double wmin = 1e300, wmax = -1e300, kmin = 1e300, kmax = -1e300;
        int arg_wmin = 0, arg_wmax = 0, arg_kmin = 0, arg_kmax = 0;
        for (int i = 0; i < kSamples; ++i) {
            const double phi = i * dphi;
            const auto j = radial_jet(phi, 2);
            const double w = j[0];
            if (!(w > 0.0))
                raise(ErrorCode::InvalidDomainSpec, "base point not strictly interior");
            const double num = w * w + 2.0 * j[1] * j[1] - w * j[2];
            const double kappa = num / std::pow(w * w + j[1] * j[1], 1.5);
            if (kappa < kMinCurvature)
                raise(ErrorCode::NonConvex, "boundary curvature below 1e-3");
            if (w < wmin) { wmin = w; arg_wmin = i; }
            if (w > wmax) { wmax = w; arg_wmax = i; }
            if (kappa < kmin) { kmin = kappa; arg_kmin = i; }
            if (kappa > kmax) { kmax = kappa; arg_kmax = i; }
        }
        const auto omega = [&](double p) { return radial(p); };
        const auto curv = [&](double p) {
            const auto j = radial_jet(p, 2);
            const double w = j[0];
            return (w * w + 2.0 * j[1] * j[1] - w * j[2]) /
                   std::pow(w * w + j[1] * j[1], 1.5);
        };
        const auto refine_min = [&](auto&& f, int arg) {
            const double p = golden_min(f, (arg - 1) * dphi, (arg + 1) * dphi);
            return f(p);
        };
        stats_.omega_min = refine_min(omega, arg_wmin);
        stats_.omega_max = -refine_min([&](double p) { return -omega(p); }, arg_wmax);
        stats_.k_min = refine_min(curv, arg_kmin);
        stats_.k_max = -refine_min([&](double p) { return -curv(p); }, arg_kmax);

        const auto neg_ratio = [&](double p) { return -radial(p) / radial(p + kPi); };
        double best = 0.0;
        int arg_best = 0;
        for (int i = 0; i < kSamples; ++i) {
            const double r = -neg_ratio(i * dphi);
            if (r > best) { best = r; arg_best = i; }
        }
        stats_.dissymmetry = std::max(best, -refine_min(neg_ratio, arg_best));
    }

    CurveKind kind_ = CurveKind::UnitDisk;
    double semi_a_ = 1.0, semi_b_ = 1.0;
    Vec2 center_;  // curve center in o-coordinates (disk/ellipse kinds)
    double fourier_const_ = 1.0;
    std::vector<double> fourier_cos_, fourier_sin_;
    DomainStats stats_;
};

}  // namespace funk
