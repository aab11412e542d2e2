#include <cmath>
#include <vector>

#include "doctest.h"
#include "levykit/errors.hpp"
#include "levykit/model.hpp"
#include "levykit/quadrature.hpp"

using namespace levykit;

namespace {

LevyModel two_atoms() {
    return LevyModel::from_measure(LevyMeasure::atoms({{{1.0}, 0.5}, {{-1.0}, 0.5}}, 1));
}

// independent trapezoid oracle on a fine fixed grid
double trapez(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n; ++i) s += f(a + i * h);
    return s * h;
}

}  // namespace

TEST_CASE("psi for atoms") {
    auto m = two_atoms();
    CHECK(m.psi(M_PI) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(m.psi(0.0) == doctest::Approx(0.0));
    CHECK(m.psi(-3.7) == doctest::Approx(m.psi(3.7)).epsilon(1e-14));
}

TEST_CASE("asymmetric atom lists are rejected") {
    CHECK_THROWS_AS(LevyMeasure::atoms({{{1.0}, 0.5}, {{-1.0}, 0.25}}, 1),
                    precondition_error);
    CHECK_THROWS_AS(LevyMeasure::atoms({{{1.0}, 0.5}}, 1), precondition_error);
}

TEST_CASE("semi-stable ladder psi") {
    auto m = LevyModel::from_measure(LevyMeasure::semi_stable(1.0));
    // direct summation oracle with its own cutoff
    double oracle = 0.0;
    for (int k = 0; k < 128; ++k) {
        const double s = std::sin(0.5 * 8.0 * std::ldexp(1.0, -k));
        oracle += std::pow(2.0, k) * 2.0 * (2.0 * s * s);
    }
    CHECK(m.psi(8.0) == doctest::Approx(oracle).epsilon(1e-13));

    // lower growth bound: psi(xi) >= c |xi| on |xi| >= 1 with a fitted c > 0
    double c = 1e300;
    for (double xi = 1.0; xi <= 4096.0; xi *= 2.0) c = std::min(c, m.psi(xi) / xi);
    CHECK(c > 0.5);

    // closed-form channel agrees with the measure-backed sum
    auto cf = LevyModel::semi_stable_channel(1.0);
    CHECK(cf.psi(8.0) == doctest::Approx(m.psi(8.0)).epsilon(1e-12));
}

TEST_CASE("psi nonnegative, even, zero at origin across variants") {
    std::vector<LevyModel> models;
    models.push_back(two_atoms());
    models.push_back(LevyModel::from_measure(LevyMeasure::semi_stable(0.7)));
    models.push_back(LevyModel::from_measure(
        LevyMeasure::radial([](double r) { return std::pow(r, -2.0); }, 1.0, 1)));
    models.push_back(LevyModel::from_measure(LevyMeasure::tempered_tail(2.0)));
    models.push_back(LevyModel::from_measure(LevyMeasure::composite(
        {LevyMeasure::atoms({{{0.5}, 1.0}, {{-0.5}, 1.0}}, 1),
         LevyMeasure::tempered_tail(3.0)})));
    for (const auto& m : models) {
        CHECK(m.psi(0.0) == doctest::Approx(0.0));
        double cpsi = 0.0;
        for (double xi = 0.125; xi <= 1.0; xi *= 2.0) cpsi = std::max(cpsi, m.psi(xi));
        for (double xi : {0.3, 1.7, 4.0, 19.5}) {
            const double v = m.psi(xi);
            CHECK(v >= 0.0);
            CHECK(m.psi(-xi) == doctest::Approx(v).epsilon(1e-12));
            // polynomially bounded with c_psi = sup over the unit ball
            CHECK(v <= cpsi * (1.0 + xi * xi) * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("cumulant values and guards") {
    auto m = two_atoms();
    CHECK(m.cumulant(1.0) == doctest::Approx(0.5430806348152437).epsilon(1e-14));
    CHECK(m.cumulant(0.0) == doctest::Approx(0.0));

    // tempered tail beta = 2 against an independent trapezoid oracle
    auto tt = LevyModel::from_measure(LevyMeasure::tempered_tail(2.0));
    const double oracle = trapez(
        [](double y) { return 2.0 * (std::cosh(y) - 1.0) * std::exp(-y * y); }, 1.0,
        12.0, 200000);
    CHECK(tt.cumulant(1.0) == doctest::Approx(oracle).epsilon(1e-9));

    // no exponential moments -> feature error
    auto heavy = LevyModel::from_measure(LevyMeasure::tempered_tail(0.5));
    CHECK_THROWS_AS(heavy.cumulant(1.0), feature_error);
    CHECK_THROWS_AS(LevyModel::stable_channel(1.0).cumulant(1.0), feature_error);

    // overflow guard: the value escalates to +inf instead of garbage
    CHECK(std::isinf(m.cumulant(2000.0)));
}

TEST_CASE("cumulant derivatives") {
    auto m = two_atoms();
    auto grad0 = m.cumulant_grad(std::vector<double>{0.0});
    CHECK(grad0[0] == doctest::Approx(0.0));
    auto hess0 = m.cumulant_hess(std::vector<double>{0.0});
    CHECK(hess0[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.cumulant_second_deriv(1.0) ==
          doctest::Approx(std::cosh(1.0)).epsilon(1e-14));

    // finite differences of the cumulant at xi = 0.7
    const double h = 1e-6;
    const double fd = (m.cumulant(0.7 + h) - m.cumulant(0.7 - h)) / (2.0 * h);
    CHECK(m.cumulant_deriv(0.7) == doctest::Approx(fd).epsilon(1e-6));

    auto tt = LevyModel::from_measure(LevyMeasure::tempered_tail(2.0));
    const double fd_tt = (tt.cumulant(0.7 + h) - tt.cumulant(0.7 - h)) / (2.0 * h);
    CHECK(tt.cumulant_deriv(0.7) == doctest::Approx(fd_tt).epsilon(1e-6));
    const double fd2_tt =
        (tt.cumulant(0.7 + 1e-4) - 2.0 * tt.cumulant(0.7) + tt.cumulant(0.7 - 1e-4)) /
        1e-8;
    CHECK(tt.cumulant_second_deriv(0.7) == doctest::Approx(fd2_tt).epsilon(1e-5));
}

TEST_CASE("cumulant convexity and quadratic lower bound") {
    auto m = two_atoms();
    const double c = 0.5 * m.second_moment_min_eig();
    CHECK(m.second_moment_matrix()[0] == doctest::Approx(1.0).epsilon(1e-14));
    for (double xi : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        CHECK(m.cumulant(xi) >= c * xi * xi - 1e-12);
        for (double eta : {0.2, 1.1, 3.0}) {
            const double mid = m.cumulant(0.5 * (xi + eta));
            CHECK(mid <= 0.5 * (m.cumulant(xi) + m.cumulant(eta)) + 1e-12);
        }
    }
}

TEST_CASE("carre du champ identity at the exponential pair") {
    // for atoms, 1/2 sum m (e^{xi y}-1)(e^{-xi y}-1) = -Lambda(xi) exactly
    auto m = two_atoms();
    for (double xi : {0.3, 1.0, 2.5}) {
        double w = 0.0;
        for (double y : {1.0, -1.0})
            w += 0.5 * 0.5 * std::expm1(xi * y) * std::expm1(-xi * y);
        CHECK(w == doctest::Approx(-m.cumulant(xi)).epsilon(1e-14));
    }
}

TEST_CASE("exponential moment classification") {
    CHECK(check_exp_moments(LevyMeasure::atoms({{{1.0}, 0.5}, {{-1.0}, 0.5}}, 1)));
    CHECK_FALSE(check_exp_moments(LevyMeasure::tempered_tail(0.5)));
    CHECK(check_exp_moments(LevyMeasure::tempered_tail(
        3.0, LevyMeasure::radial([](double r) { return std::pow(r, -2.0); }, 1.0, 1))));
    CHECK_FALSE(check_exp_moments(LevyMeasure::composite(
        {LevyMeasure::semi_stable(1.0), LevyMeasure::tempered_tail(1.0)})));
}

TEST_CASE("Hartman-Wintner heuristic") {
    CHECK(check_hartman_wintner(LevyModel::stable_channel(1.5), 100.0));
    CHECK(check_hartman_wintner(LevyModel::stable_channel(1.5), 1000.0, 1048576.0));
    CHECK_FALSE(check_hartman_wintner(two_atoms(), 1.0));  // psi bounded by 2
    auto ii = LevyModel::from_measure(LevyMeasure::semi_stable(1.0));
    CHECK(check_hartman_wintner(ii, 10.0));
}

TEST_CASE("gamma operator") {
    auto m = two_atoms();
    CHECK(m.gamma_op([](double) { return 3.0; }, 0.7) == doctest::Approx(0.0));
    CHECK(m.gamma_op([](double x) { return x; }, 2.0) ==
          doctest::Approx(0.5).epsilon(1e-14));
    const double expect = 0.5 * std::sin(1.0) * std::sin(1.0);
    CHECK(m.gamma_op([](double x) { return std::sin(x); }, 0.0) ==
          doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("radial psi in dimensions 2 and 3") {
    for (int dim : {2, 3}) {
        auto m = LevyModel::from_measure(LevyMeasure::radial(
            [dim](double r) { return std::pow(r, -static_cast<double>(dim) - 1.0); },
            1.0, dim));
        std::vector<double> xi(dim, 0.0);
        CHECK(m.psi(xi) == doctest::Approx(0.0));
        xi[0] = 2.0;
        const double v = m.psi(xi);
        CHECK(v > 0.0);
        // rotation invariance: same |xi| along another axis
        std::vector<double> xi2(dim, 0.0);
        xi2[dim - 1] = -2.0;
        CHECK(m.psi(xi2) == doctest::Approx(v).epsilon(1e-9));
    }
}

TEST_CASE("second moment of the semi-stable ladder") {
    auto m = LevyModel::from_measure(LevyMeasure::semi_stable(1.0));
    CHECK(m.second_moment_matrix()[0] == doctest::Approx(4.0).epsilon(1e-12));
}
