#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "funk/series.hpp"

namespace funk {

/// One printed coefficient claim: value at exponent s^k.
struct RefCoeff {
    int k = 0;
    double value = 0.0;
};

/// Comparison of an engine-computed series against printed reference
/// coefficients for the same quantity.
struct ExpansionReport {
    std::string quantity;
    PSeries<double> computed;
    std::vector<RefCoeff> reference;
    double max_abs_coeff_diff = 0.0;
    std::string note;  // nonempty when the source expression is suspect

    void finalize() {
        max_abs_coeff_diff = 0.0;
        for (const auto& rc : reference)
            max_abs_coeff_diff =
                std::max(max_abs_coeff_diff, std::abs(computed.coeff(rc.k) - rc.value));
    }
};

inline PSeries<double> to_double_series(const PSeries<double>& p) { return p; }
inline PSeries<double> to_double_series(const PSeries<Quad>& p) {
    PSeries<double> r;
    r.kmin = p.kmin;
    r.trust = p.trust;
    r.coef.reserve(p.coef.size());
    for (const auto& c : p.coef) r.coef.push_back(c.to_double());
    r.normalize();
    return r;
}

/// Reference coefficients as printed in the source expansions. Several of
/// these are known typos; the engine keeps them verbatim and reports the
/// discrepancy, with the numeric pipeline as the arbiter.
struct ReferenceTables {
    double f3 = 0.0;
    double f4 = 0.0;
    double H = 1.0;

    std::vector<RefCoeff> t_plus() const { return {{1, 2.0}, {2, -4.0 * f3 / 3.0}}; }
    std::vector<RefCoeff> t_minus() const { return {{1, -2.0}, {2, -4.0 * f3 / 3.0}}; }
    std::vector<RefCoeff> theta_tangent() const {
        return {{-1, 0.5}, {0, f3 / 2.0}, {1, 2.0 * f3 * f3 / 9.0}};
    }
    std::vector<RefCoeff> t_x2() const {
        return {{-1, 1.0}, {0, -4.0 * f3 / 3.0}, {1, 40.0 * f3 * f3 / 9.0}};
    }
    std::vector<RefCoeff> t_x2x2() const { return {{-3, -0.5}, {-1, -2.0 * f4}}; }
    std::vector<RefCoeff> theta_x1() const { return {{-2, 0.25}, {-1, f3 / 3.0}}; }
    std::vector<RefCoeff> theta_x2() const { return {{-3, -0.25}, {-1, -f3 * f3}}; }
    std::vector<RefCoeff> g11() const { return {{-2, 0.25}, {-1, f3 / 3.0}}; }
    std::vector<RefCoeff> g12() const { return {{-3, -0.25}, {-1, -f3 * f3}}; }
    std::vector<RefCoeff> g22() const { return {{-4, 0.5}, {-3, -f3 / 6.0}}; }
    std::vector<RefCoeff> kn_inner() const {
        return {{2, 2.0 / H}, {3, -8.0 * f3 / (3.0 * H)}};
    }
    std::vector<RefCoeff> kn_outer() const {
        return {{0, -2.0}, {1, -8.0 * f3 / 3.0}, {2, 8.0 * f3 * f3 / 9.0}};
    }
    std::vector<RefCoeff> kF2() const { return {{0, 1.0}, {1, -2.0 * f3}}; }
    std::vector<RefCoeff> kR() const {
        const double s2 = 1.4142135623730951;
        return {{0, s2 - 1.0}, {1, -(10.0 + 7.0 * s2) * f3 / (9.0 + 6.0 * s2)}};
    }
    std::vector<RefCoeff> t1() const {
        const double s2 = 1.4142135623730951;
        return {{0, 1.0 + s2}, {1, (10.0 + 7.0 * s2) * f3 / 3.0}};
    }
    std::vector<RefCoeff> t2() const {
        const double s2 = 1.4142135623730951;
        return {{0, s2 - 1.0}, {1, (10.0 - 7.0 * s2) * f3 / 3.0}};
    }
};

/// Reports for every quantity of the frame and sphere legs.
template <class T>
std::vector<ExpansionReport> build_reports(const BoundaryModel<T>& model, const T& chord_h,
                                           const T& top_height, int order) {
    const FrameSeries<T> fr = frame_series(model, order);
    const SphereSeries<T> sp = sphere_series(model, chord_h, top_height, order);
    ReferenceTables ref;
    ref.f3 = num::to_double(model.f3);
    ref.f4 = num::to_double(model.f4);
    ref.H = num::to_double(chord_h);

    std::vector<ExpansionReport> out;
    const auto push = [&](const std::string& name, const auto& series,
                          std::vector<RefCoeff> rc, const std::string& note = "") {
        ExpansionReport r;
        r.quantity = name;
        r.computed = to_double_series(series);
        r.reference = std::move(rc);
        r.note = note;
        r.finalize();
        out.push_back(std::move(r));
    };
    push("t+", fr.t_plus, ref.t_plus());
    push("t-", fr.t_minus, ref.t_minus());
    push("theta_tangent", fr.theta, ref.theta_tangent(),
         "printed constant and sqrt(x2) terms disagree with the solved series");
    push("t_x2", fr.t_x2, ref.t_x2(),
         "printed sqrt(x2) coefficient omits the f4 contribution");
    push("t_x2x2", fr.t_x2x2, ref.t_x2x2(),
         "printed 1/sqrt(x2) coefficient disagrees with the solved series");
    push("theta_x1", fr.theta_x1, ref.theta_x1());
    push("theta_x2", fr.theta_x2, ref.theta_x2(),
         "printed correction is quadratic in f3; solved series gives -f3^2/6 + f4/12");
    push("g11", fr.g11, ref.g11());
    push("g12", fr.g12, ref.g12(),
         "same suspect correction as theta_x2 (the two series coincide)");
    push("g22", fr.g22, ref.g22());
    push("kn_inner", sp.kn_inner, ref.kn_inner());
    push("kn_outer", sp.kn_outer, ref.kn_outer(),
         "printed e^(-r/2) coefficient corresponds to the reversed traversal");
    push("kF2", sp.kF2, ref.kF2());
    push("kR", sp.kR, ref.kR(),
         "printed correction descends from the ill-formed branch expansion");
    push("t1", sp.t1, ref.t1(), "printed correction contains sqrt(2 f3); engine value differs");
    push("t2", sp.t2, ref.t2(), "printed correction contains sqrt(2 f3); engine value differs");
    return out;
}

}  // namespace funk
