#include <cmath>
#include <vector>

#include "doctest.h"
#include "levykit/errors.hpp"
#include "levykit/rate.hpp"

using namespace levykit;

namespace {

LevyModel two_atoms() {
    return LevyModel::from_measure(LevyMeasure::atoms({{{1.0}, 0.5}, {{-1.0}, 0.5}}, 1));
}

// brute-force oracle: coarse grid scan plus golden-section refinement
double brute_force_dsq(const LevyModel& m, double t, double x) {
    double best = 0.0, best_xi = 0.0;
    for (double xi = 0.0; xi <= 40.0; xi += 1e-3) {
        const double v = rate_objective(m, t, xi, x);
        if (v < best) {
            best = v;
            best_xi = xi;
        }
    }
    double a = std::max(0.0, best_xi - 2e-3), b = best_xi + 2e-3;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int i = 0; i < 200; ++i) {
        const double c = b - gr * (b - a), d = a + gr * (b - a);
        if (rate_objective(m, t, c, x) < rate_objective(m, t, d, x))
            b = d;
        else
            a = c;
    }
    return -rate_objective(m, t, 0.5 * (a + b), x);
}

}  // namespace

TEST_CASE("rate objective") {
    auto m = two_atoms();
    CHECK(rate_objective(m, 1.0, 0.0, 0.0) == doctest::Approx(0.0));
    CHECK(rate_objective(m, 1.0, 0.0, 5.5) == doctest::Approx(0.0));
    CHECK(rate_objective(m, 1.0, 1.0, 0.0) ==
          doctest::Approx(0.5430806348152437).epsilon(1e-14));
    const double xi = std::asinh(1.0);
    CHECK(rate_objective(m, 1.0, xi, 1.0) ==
          doctest::Approx(-(xi - (std::sqrt(2.0) - 1.0))).epsilon(1e-13));
}

TEST_CASE("two-atom rate function against the analytic conjugate") {
    auto m = two_atoms();
    auto res = rate_function(m, 1.0, 1.0);
    const double exact = std::asinh(1.0) - (std::sqrt(2.0) - 1.0);
    CHECK(res.d_sq == doctest::Approx(exact).epsilon(1e-12));
    CHECK(std::fabs(res.d_sq - exact) <= 1e-10);
    CHECK(res.xi0[0] == doctest::Approx(std::asinh(1.0)).epsilon(1e-10));
    CHECK(res.status == RateStatus::converged);
    CHECK(res.gradient_norm <= 1e-10 * 2.0);

    CHECK(brute_force_dsq(m, 1.0, 1.0) == doctest::Approx(exact).epsilon(1e-6));

    auto zero = rate_function(m, 1.0, 0.0);
    CHECK(zero.d_sq == doctest::Approx(0.0));
    CHECK(zero.xi0[0] == doctest::Approx(0.0));
}

TEST_CASE("gaussian channel conjugate is quadratic") {
    auto g = LevyModel::gaussian_channel();
    CHECK(rate_function(g, 1.0, 2.0).d_sq == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rate_function(g, 0.5, 3.0).d_sq == doctest::Approx(4.5).epsilon(1e-12));
}

TEST_CASE("evenness, oddness of the minimizer, radial monotonicity") {
    auto m = LevyModel::from_measure(LevyMeasure::semi_stable(1.0));
    double prev = -1.0;
    for (double x : {0.5, 1.0, 2.0, 4.0}) {
        auto plus = rate_function(m, 1.0, x);
        auto minus = rate_function(m, 1.0, -x);
        CHECK(plus.d_sq == doctest::Approx(minus.d_sq).epsilon(1e-10));
        CHECK(plus.xi0[0] == doctest::Approx(-minus.xi0[0]).epsilon(1e-9));
        CHECK(plus.d_sq > prev);
        prev = plus.d_sq;
    }
}

TEST_CASE("solver matches brute force on a fine grid") {
    auto m = LevyModel::from_measure(LevyMeasure::semi_stable(1.0));
    for (double x : {0.7, 2.0, 5.0}) {
        const double solver = rate_function(m, 1.0, x).d_sq;
        CHECK(solver == doctest::Approx(brute_force_dsq(m, 1.0, x)).epsilon(1e-6));
    }
}

TEST_CASE("newton gradient against finite differences of the objective") {
    auto m = two_atoms();
    const double h = 1e-6;
    for (double xi : {0.3, 1.2}) {
        const double fd =
            (rate_objective(m, 1.0, xi + h, 1.5) - rate_objective(m, 1.0, xi - h, 1.5)) /
            (2.0 * h);
        const double analytic = -1.5 + m.cumulant_deriv(xi);
        CHECK(analytic == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("scaling identity") {
    const double ells[] = {2.0, 4.0, 8.0};
    CHECK(rate_scaling_check(two_atoms(), 1.0, 1.0, ells) <= 1e-9);
    auto ii = LevyModel::from_measure(LevyMeasure::semi_stable(1.0));
    CHECK(rate_scaling_check(ii, 1.0, 2.0, ells) <= 1e-9);
    CHECK(rate_scaling_check(LevyModel::gaussian_channel(), 1.0, 3.0, ells) <= 1e-12);
    CHECK(rate_scaling_check(two_atoms(), 1.0, 0.0, ells) == doctest::Approx(0.0));
}

TEST_CASE("quadratic upper bound") {
    auto m = two_atoms();
    // c = 1/2, so D_1^2(1) = 0.46716 <= 0.5
    const double xs[] = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0};
    CHECK(quadratic_bound_check(m, 1.0, xs) <= 1e-10);
    auto ii = LevyModel::from_measure(LevyMeasure::semi_stable(1.0));
    const double xs2[] = {0.5, 1.0, 2.0, 3.0, 4.5, 6.0};
    CHECK(quadratic_bound_check(ii, 1.0, xs2) <= 1e-10);
}

TEST_CASE("no exponential moments, no rate function") {
    auto heavy = LevyModel::from_measure(LevyMeasure::tempered_tail(0.5));
    CHECK_THROWS_AS(rate_function(heavy, 1.0, 1.0), feature_error);
}

TEST_CASE("astronomically distant targets stay finite-state") {
    // xi0 ~ asinh(2x) still fits in double here; D^2 = xi0 x - Lambda exceeds
    // the floating range and saturates at +inf rather than producing garbage
    auto res = rate_function(two_atoms(), 1.0, 1e307);
    CHECK(res.d_sq > 1e300);
    CHECK(res.xi0[0] > 700.0);
}

TEST_CASE("two-dimensional solve") {
    auto m = LevyModel::from_measure(LevyMeasure::atoms(
        {{{1.0, 0.0}, 0.5}, {{-1.0, 0.0}, 0.5}, {{0.0, 1.0}, 0.5}, {{0.0, -1.0}, 0.5}},
        2));
    const double x[] = {1.0, 0.0};
    auto res = rate_function(m, 1.0, x);
    // coordinates decouple, so this is the 1-D two-atom answer
    const double exact = std::asinh(1.0) - (std::sqrt(2.0) - 1.0);
    CHECK(res.d_sq == doctest::Approx(exact).epsilon(1e-9));
    CHECK(res.xi0[1] == doctest::Approx(0.0).epsilon(1e-9));

    const double xd[] = {0.6, 0.6};
    auto diag = rate_function(m, 1.0, xd);
    CHECK(diag.status == RateStatus::converged);
    CHECK(diag.xi0[0] == doctest::Approx(diag.xi0[1]).epsilon(1e-8));
}

TEST_CASE("gaussian LDP table matches the closed form") {
    auto g = LevyModel::gaussian_channel();
    const double ells[] = {1.0, 2.0, 4.0, 8.0, 16.0};
    auto table = ldp_check(g, 1.0, 1.0, ells);
    CHECK(table.d_sq == doctest::Approx(0.25).epsilon(1e-12));
    for (const auto& row : table.rows) {
        REQUIRE(row.ok);
        const double closed = 0.5 * std::log(4.0 * M_PI * row.ell) / row.ell;
        CHECK(row.e == doctest::Approx(closed).epsilon(1e-6));
    }
    CHECK(table.decreasing);
    CHECK(table.pass);
    CHECK(table.rows.back().e <= 0.2);
}

TEST_CASE("LDP at the origin decays to zero") {
    auto g = LevyModel::gaussian_channel();
    const double ells[] = {1.0, 4.0, 16.0};
    auto table = ldp_check(g, 1.0, 0.0, ells);
    CHECK(table.d_sq == doctest::Approx(0.0));
    CHECK(table.rows.back().e < table.rows.front().e);
    // e(l) = 0.5 log(4 pi l)/l at the origin as well
    CHECK(table.rows.back().e ==
          doctest::Approx(0.5 * std::log(4.0 * M_PI * 16.0) / 16.0).epsilon(1e-6));
}

TEST_CASE("LDP rows report per-row density failures") {
    auto cp = two_atoms();  // compound Poisson: no density at any time
    const double ells[] = {1.0, 2.0};
    auto table = ldp_check(cp, 1.0, 1.0, ells);
    for (const auto& row : table.rows) {
        CHECK_FALSE(row.ok);
        CHECK(!row.error.empty());
    }
    CHECK_FALSE(table.pass);
}
