#include <cmath>
#include <vector>

#include "doctest.h"
#include "levykit/density.hpp"
#include "levykit/dirichlet.hpp"
#include "levykit/rng.hpp"

using namespace levykit;

namespace {

LevyModel two_atoms() {
    return LevyModel::from_measure(LevyMeasure::atoms({{{1.0}, 0.5}, {{-1.0}, 0.5}}, 1));
}

LevyModel three_atoms() {
    return LevyModel::from_measure(LevyMeasure::atoms({{{1.0}, 0.5},
                                                       {{-1.0}, 0.5},
                                                       {{0.5}, 1.0},
                                                       {{-0.5}, 1.0},
                                                       {{2.0}, 0.25},
                                                       {{-2.0}, 0.25}},
                                                      1));
}

}  // namespace

TEST_CASE("test function basics") {
    TestFunction g(TestFnKind::gaussian, 0.0, 1.0);
    CHECK(g.l1_norm() == doctest::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-10));
    CHECK(g.l2_norm_sq() == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
    CHECK(g.spectrum_roundtrip_error() <= 1e-10);
    CHECK(g.edge_resolved());

    // kinked kinds converge at the trapezoid O(h^2) rate only
    TestFunction hat(TestFnKind::hat, 0.0, 2.0);
    CHECK(hat.l1_norm() == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(hat.l2_norm_sq() == doctest::Approx(4.0 / 3.0).epsilon(1e-4));
    CHECK(hat.spectrum_roundtrip_error() <= 1e-10);
}

TEST_CASE("forms vanish on the zero limit and agree across representations") {
    auto model = two_atoms();
    TestFunction u(TestFnKind::gaussian, 0.0, 1.0);
    const double spectral = form_spectral(model, u).value;
    const double difference = form_difference(model, u).value;
    CHECK(spectral > 0.0);
    CHECK(spectral == doctest::Approx(difference).epsilon(1e-6));
}

TEST_CASE("spectral form with the quadratic exponent is the classical energy") {
    auto g = LevyModel::gaussian_channel();
    TestFunction u(TestFnKind::gaussian, 0.0, 1.0);
    // int xi^2 |u~|^2 dxi / (2 pi) = ||u'||_2^2 = sqrt(pi)/2 for this gaussian
    CHECK(form_spectral(g, u).value ==
          doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-8));
}

TEST_CASE("difference form of a hat against direct summation") {
    auto model = two_atoms();
    TestFunction u(TestFnKind::hat, 0.0, 2.0);
    // direct same-grid summation oracle
    double oracle = 0.0;
    for (int j = 0; j < u.nodes(); ++j) {
        const double x = u.node(j);
        for (double y : {1.0, -1.0}) {
            const double d = u(x + y) - u(x);
            oracle += 0.5 * 0.5 * d * d * u.spacing();
        }
    }
    CHECK(form_difference(model, u).value == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("difference form for the radial model matches the spectral one") {
    auto model = bernstein_radial_model(BernsteinFn::power(0.75), 1);
    TestFunction u(TestFnKind::gaussian, 0.0, 1.0, {2048, 16.0});
    const double spectral = form_spectral(model, u).value;
    const double difference = form_difference(model, u).value;
    CHECK(spectral == doctest::Approx(difference).epsilon(1e-6));
}

TEST_CASE("carre du champ identity") {
    auto model = two_atoms();
    TestFunction zero(TestFnKind::gaussian, 0.0, 1e-6);  // effectively zero mass off-grid
    TestFunction f(TestFnKind::gaussian, 0.0, 1.0);
    TestFunction hfun(TestFnKind::bump, 0.0, 3.0);

    CHECK(cdc_identity_residual(model, f, hfun) <= 1e-6);

    // randomized family, scale-relative tolerance
    Rng rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        TestFunction fr(TestFnKind::gaussian, -2.0 + 4.0 * rng.uniform(),
                        0.5 + rng.uniform());
        TestFunction hr(trial % 2 ? TestFnKind::bump : TestFnKind::gaussian,
                        -1.0 + 2.0 * rng.uniform(), 1.0 + 2.0 * rng.uniform());
        GridSpec spec{fr.nodes(), fr.half_width()};
        const double scale = std::max(
            std::fabs(bilinear_difference(
                model, [&](double x) { return fr(x) * hr(x); },
                [&](double x) { return fr(x); }, spec)),
            1e-12);
        CHECK(cdc_identity_residual(model, fr, hr) <= 1e-6 * std::max(1.0, scale));
    }
}

TEST_CASE("nash ratio is dilation invariant for stable exponents") {
    // u_sigma(x) = u(x/sigma) on a grid dilated by sigma maps every discrete
    // sum term by term, so C0 must agree to rounding
    auto f = BernsteinFn::power(0.6);
    auto model = LevyModel::stable_channel(1.2);  // psi = |xi|^{2 alpha}
    std::vector<TestFunction> fam;
    for (double w : {0.5, 1.0, 2.0})
        fam.emplace_back(TestFnKind::gaussian, 0.0, w, GridSpec{4096, 16.0 * w});
    auto report = nash_check(model, f, 0.0, fam);
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[0].c0 == doctest::Approx(report.rows[1].c0).epsilon(1e-10));
    CHECK(report.rows[1].c0 == doctest::Approx(report.rows[2].c0).epsilon(1e-10));

    // on a fixed grid the continuum statement holds to discretization accuracy
    std::vector<TestFunction> fixed;
    for (double w : {0.5, 1.0, 2.0}) fixed.emplace_back(TestFnKind::gaussian, 0.0, w);
    auto fixed_report = nash_check(model, f, 0.0, fixed);
    CHECK(fixed_report.rows[0].c0 ==
          doctest::Approx(fixed_report.rows[2].c0).epsilon(1e-2));
}

TEST_CASE("nash verdict for the radial model") {
    auto f = BernsteinFn::power(0.75);
    auto model = bernstein_radial_model(f, 1);
    auto fam = default_nash_family({1024, 16.0});
    auto report = nash_check(model, f, 0.0, fam);
    CHECK(report.finite);
    CHECK(report.worst_c0 > 0.0);
    for (const auto& row : report.rows) CHECK_FALSE(row.counterexample);
}

TEST_CASE("vanishing functions give vanishing forms and are filtered") {
    auto model = two_atoms();
    // hat supported entirely outside the grid: all samples are zero
    TestFunction zero(TestFnKind::hat, 100.0, 1.0);
    CHECK(zero.l2_norm_sq() == 0.0);
    CHECK(form_spectral(model, zero).value == 0.0);
    CHECK(form_difference(model, zero).value == 0.0);
    TestFunction f(TestFnKind::gaussian, 0.0, 1.0);
    CHECK(cdc_identity_residual(model, zero, f) == doctest::Approx(0.0));
    CHECK(cdc_identity_residual(model, f, zero) == doctest::Approx(0.0));

    std::vector<TestFunction> fam{zero, f};
    auto report = nash_check(model, BernsteinFn::power(0.5), 0.0, fam);
    CHECK(report.rows[0].excluded);
    CHECK_FALSE(report.rows[1].excluded);
    CHECK(report.finite);
}

TEST_CASE("density maximum sits at the origin for symmetric models") {
    for (auto model : {LevyModel::from_measure(LevyMeasure::semi_stable(1.0)),
                       LevyModel::stable_channel(1.5)}) {
        auto grid = density_grid(model, 0.5);
        double sup = 0.0;
        for (double v : grid.p) sup = std::max(sup, v);
        CHECK(sup == doctest::Approx(grid.value_at(0.0)).epsilon(1e-12));
    }
}

TEST_CASE("serial and parallel paths agree bitwise") {
    auto model = three_atoms();
    TestFunction u(TestFnKind::bump, 0.5, 2.0, {1024, 16.0});
    CHECK(form_spectral(model, u, Exec::serial).value ==
          form_spectral(model, u, Exec::openmp).value);
    CHECK(form_difference(model, u, Exec::serial).value ==
          form_difference(model, u, Exec::openmp).value);
}
