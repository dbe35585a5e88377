#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "funk/domain.hpp"
#include "funk/domain_io.hpp"

using namespace funk;

namespace {

BoundaryCurve fourier_wobble() { return BoundaryCurve::fourier(1.0, {0.0, 0.0, 0.1}, {}); }

double fd_radial_curvature(const BoundaryCurve& c, double phi, double h) {
    // 5-point stencil curvature of the parametrized boundary curve.
    const auto p = [&](double t) { return c.boundary_point(t); };
    const Vec2 d1 = (p(phi - 2 * h) - 8.0 * p(phi - h) + 8.0 * p(phi + h) - p(phi + 2 * h)) /
                    (12.0 * h);
    const Vec2 d2 = (-p(phi - 2 * h) + 16.0 * p(phi - h) - 30.0 * p(phi) + 16.0 * p(phi + h) -
                     p(phi + 2 * h)) /
                    (12.0 * h * h);
    return cross(d1, d2) / std::pow(d1.norm(), 3.0);
}

}  // namespace

TEST_CASE("radial jets") {
    const auto disk = BoundaryCurve::unit_disk();
    const auto jd = disk.radial_jet(0.37, 2);
    CHECK(jd[0] == Catch::Approx(1.0));
    CHECK(jd[1] == Catch::Approx(0.0).margin(1e-14));
    CHECK(jd[2] == Catch::Approx(0.0).margin(1e-14));

    const auto ell = BoundaryCurve::ellipse(2.0, 1.0);
    CHECK(ell.radial_jet(0.0, 0)[0] == Catch::Approx(2.0));

    const auto fw = fourier_wobble();
    const auto jf = fw.radial_jet(0.0, 2);
    CHECK(jf[0] == Catch::Approx(1.1));
    CHECK(jf[1] == Catch::Approx(0.0).margin(1e-14));
    CHECK(jf[2] == Catch::Approx(-0.9));

    SECTION("jets agree with finite differences of omega") {
        for (double phi : {0.1, 1.3, 2.9, 4.4}) {
            const auto j = fw.radial_jet(phi, 4);
            const double h = 1e-2;
            const auto w = [&](double p) { return fw.radial(p); };
            CHECK(j[1] == Catch::Approx((w(phi + h) - w(phi - h)) / (2 * h)).margin(1e-4));
            CHECK(j[2] ==
                  Catch::Approx((w(phi + h) - 2 * w(phi) + w(phi - h)) / (h * h)).margin(1e-4));
        }
    }
}

TEST_CASE("ray intersection") {
    const auto disk = BoundaryCurve::unit_disk();
    CHECK(disk.ray_intersect({0, 0}, {1, 0}).t == Catch::Approx(1.0));
    CHECK(disk.ray_intersect({0.5, 0}, {1, 0}).t == Catch::Approx(0.5));
    CHECK(fourier_wobble().ray_intersect({0, 0}, {1, 0}).t == Catch::Approx(1.1));

    SECTION("residual and homogeneity") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-0.6, 0.6);
        std::uniform_real_distribution<double> a(0.0, kTwoPi);
        const auto fw = fourier_wobble();
        for (int i = 0; i < 200; ++i) {
            const Vec2 x{u(rng), u(rng)};
            if (!fw.is_interior(x, 1e-3)) continue;
            const Vec2 y = dir(a(rng));
            const RayHit hit = fw.ray_intersect(x, y);
            const Vec2 onb = fw.boundary_point(hit.phi);
            CHECK((x + hit.t * y - onb).norm() < 1e-10);
            CHECK(std::abs(hit.point.norm() - fw.radial(hit.phi)) < 1e-12);
            for (double lam : {0.5, 2.0, 10.0}) {
                const double tl = fw.ray_intersect(x, lam * y).t;
                CHECK(tl == Catch::Approx(hit.t / lam).epsilon(1e-10));
            }
        }
    }
    SECTION("errors") {
        CHECK_THROWS_AS(disk.ray_intersect({1.5, 0}, {1, 0}), Error);
        CHECK_THROWS_AS(disk.ray_intersect({1.0 - 1e-14, 0}, {1, 0}), Error);
    }
}

TEST_CASE("boundary curvature") {
    CHECK(BoundaryCurve::unit_disk().boundary_curvature(1.1) == Catch::Approx(1.0));
    // Ellipse a=2, b=1 at the end of the major axis: kappa = a / b^2 = 2.
    CHECK(BoundaryCurve::ellipse(2.0, 1.0).boundary_curvature(0.0) == Catch::Approx(2.0));
    // Circle of radius 1/2 via the fourier kind: kappa = 2.
    CHECK(BoundaryCurve::fourier(0.5, {}, {}).boundary_curvature(0.3) == Catch::Approx(2.0));

    SECTION("matches finite-difference curvature of the parametrized curve") {
        const auto fw = fourier_wobble();
        for (double phi : {0.0, 0.7, 2.2, 3.9, 5.5})
            CHECK(fw.boundary_curvature(phi) ==
                  Catch::Approx(fd_radial_curvature(fw, phi, 1e-3)).margin(1e-6));
    }
}

TEST_CASE("radial normal cosine and the angle bound") {
    const auto disk = BoundaryCurve::unit_disk();
    for (double phi : {0.0, 1.0, 2.0, 3.0}) CHECK(disk.radial_normal_cosine(phi) == Catch::Approx(1.0));

    const auto ell = BoundaryCurve::ellipse(2.0, 1.0);
    const double c = ell.radial_normal_cosine(kPi / 4.0);
    CHECK(c > 0.0);
    CHECK(c < 1.0);

    SECTION("cos >= omega_min * k_min on every sampled angle") {
        for (const auto& curve :
             {BoundaryCurve::unit_disk({0.5, 0.0}), BoundaryCurve::ellipse(2.0, 1.0),
              BoundaryCurve::fourier(1.0, {0.0, 0.0, 0.05}, {0.0, 0.03})}) {
            const double bound = curve.stats().omega_min * curve.stats().k_min;
            for (int i = 0; i < 512; ++i)
                CHECK(curve.radial_normal_cosine(i * kTwoPi / 512) >= bound - 1e-9);
        }
    }
}

TEST_CASE("dissymmetry") {
    CHECK(BoundaryCurve::unit_disk().dissymmetry() == Catch::Approx(1.0));
    CHECK(BoundaryCurve::unit_disk({0.5, 0.0}).dissymmetry() == Catch::Approx(3.0));
    CHECK(BoundaryCurve::ellipse(2.0, 1.0).dissymmetry() == Catch::Approx(1.0));
}

TEST_CASE("construction rejects invalid domains") {
    // Deep concavity from a large harmonic.
    CHECK_THROWS_AS(BoundaryCurve::fourier(1.0, {0.0, 0.0, 0.0, 0.5}, {}), Error);
    // Base point outside.
    CHECK_THROWS_AS(BoundaryCurve::unit_disk({1.2, 0.0}), Error);
    // Harmonic count cap.
    CHECK_THROWS_AS(BoundaryCurve::fourier(1.0, std::vector<double>(9, 0.01), {}), Error);
}

TEST_CASE("domain spec files") {
    const auto doc = nlohmann::json::parse(R"({
        "kind": "ellipse", "params": {"a": 2.0, "b": 1.0}, "base_point": [0.1, 0.0]
    })");
    const auto curve = domain_from_json(doc);
    CHECK(curve.kind() == CurveKind::Ellipse);
    CHECK(curve.radial(0.0) == Catch::Approx(1.9));

    CHECK_THROWS_AS(domain_from_json(nlohmann::json::parse(R"({"kind": "pentagon"})")), Error);
    CHECK_THROWS_AS(domain_from_json(nlohmann::json::parse(
                        R"({"kind": "fourier", "base_point": [0.2, 0]})")),
                    Error);
}
