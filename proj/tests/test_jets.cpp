#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "funk/jets.hpp"

using funk::Taylor5;

namespace {

// Central finite differences of f at x, orders 0..4.
template <class F>
std::array<double, 5> fd_jet(F f, double x, double h) {
    std::array<double, 5> d{};
    d[0] = f(x);
    d[1] = (f(x + h) - f(x - h)) / (2 * h);
    d[2] = (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
    d[3] = (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h * h * h);
    d[4] = (f(x + 2 * h) - 4 * f(x + h) + 6 * f(x) - 4 * f(x - h) + f(x - 2 * h)) /
           (h * h * h * h);
    return d;
}

}  // namespace

TEST_CASE("arithmetic jets match finite differences") {
    const double x0 = 0.7;
    const auto f = [](auto t) {
        using std::sin; using std::cos; using std::sqrt;
        using funk::sin; using funk::cos; using funk::sqrt;
        return sqrt((sin(t * 3.0) * 0.1 + 1.5) / (cos(t) + 2.0)) * (t * t + 0.5);
    };
    const Taylor5 j = f(Taylor5::variable(x0));
    const auto d = fd_jet([&](double t) { return f(t); }, x0, 1e-2);
    CHECK(j.value() == Catch::Approx(d[0]).epsilon(1e-14));
    CHECK(j.deriv(1) == Catch::Approx(d[1]).epsilon(1e-4));
    CHECK(j.deriv(2) == Catch::Approx(d[2]).epsilon(1e-4));
    CHECK(j.deriv(3) == Catch::Approx(d[3]).epsilon(1e-3));
    CHECK(j.deriv(4) == Catch::Approx(d[4]).epsilon(1e-2));
}

TEST_CASE("reciprocal and sqrt invert") {
    const Taylor5 t = Taylor5::variable(0.3);
    const Taylor5 a = funk::sin(t) + 2.0;
    const Taylor5 r = a * a.reciprocal();
    CHECK(r.value() == Catch::Approx(1.0));
    for (int k = 1; k <= 4; ++k) CHECK(std::abs(r.deriv(k)) < 1e-12);
    const Taylor5 s = funk::sqrt(a);
    const Taylor5 sq = s * s;
    for (int k = 0; k <= 4; ++k) CHECK(sq.deriv(k) == Catch::Approx(a.deriv(k)).margin(1e-12));
}

TEST_CASE("polynomial jets are exact") {
    const Taylor5 t = Taylor5::variable(2.0);
    const Taylor5 p = t * t * t;  // t^3
    CHECK(p.value() == 8.0);
    CHECK(p.deriv(1) == 12.0);
    CHECK(p.deriv(2) == 12.0);
    CHECK(p.deriv(3) == 6.0);
    CHECK(p.deriv(4) == 0.0);
}
