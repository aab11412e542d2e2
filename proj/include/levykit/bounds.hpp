#pragma once

#include <span>
#include <string>
#include <vector>

#include "levykit/bernstein.hpp"
#include "levykit/density.hpp"
#include "levykit/model.hpp"
#include "levykit/rate.hpp"

namespace levykit {

enum class RowFlag { ok, underflow, regime, error };

struct BoundRow {
    double key = 0.0;  // x or t
    double lhs_log = 0.0;
    double rhs_log = 0.0;
    double slack = 0.0;  // linear where meaningful, else log difference
    RowFlag flag = RowFlag::ok;
    std::string note;
};

struct BoundReport {
    std::string bound_id;
    double c = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double epsilon = 0.0;
    std::vector<BoundRow> rows;
    std::vector<std::pair<double, double>> gamma_table;  // (gamma, fitted c)
    double worst_slack = 0.0;
    bool pass = false;
};

/// Off-diagonal estimate p_t(x) <= e^{-D_t^2(x)} p_t(0); per-x slack
/// (p_t(x) - rhs), pass when all slacks <= 1e-8 p_t(0).
BoundReport off_diagonal_check(const LevyModel& model, double t,
                               std::span<const double> xs,
                               const DensityGridParams& params = {});

/// (p(x) - e^{-D^2} p0)/p0 rows; the off-diagonal verdict depends only on
/// these ratios, so rescaling every density value by a common factor leaves
/// them unchanged.
std::vector<double> off_diagonal_relative_slack(std::span<const double> p_at_x,
                                                double p0,
                                                std::span<const double> d_sq);

/// On-diagonal fit: smallest c per trial gamma in {1, 1/2, 1/4, ...} with
/// sup_x p_t(x) <= c [f^{-1}(1/(gamma t))]^{n/2} over the given times.
/// Reports the gamma = 1 fit; pass when every time yields a finite ratio.
BoundReport on_diagonal_fit(const LevyModel& model, const BernsteinFn& f,
                            std::span<const double> ts, int dim,
                            const DensityGridParams& params = {});

/// Combined estimate p_t(x) <= c e^{-D_t^2(x)} [f^{-1}(1/(gamma t))]^{n/2}
/// with (c, gamma) from the on-diagonal fit; valid for 0 < t <= 1.
BoundReport combined_bound_check(const LevyModel& model, const BernsteinFn& f,
                                 double t, std::span<const double> xs,
                                 std::span<const double> fit_ts,
                                 const DensityGridParams& params = {});

/// Closed-form upper bound for the rate objective minimum when supp nu is
/// inside the unit ball: -x/(1+eps) log(x/(t c1 (1+eps))) + x/(1+eps);
/// requires x > t c1 (1+eps).
double bounded_support_rate_bound(double c1, double eps, double t, double x);

/// The moment constant int_{B(0,1)} y^2 e^{|y|} nu(dy) feeding the bound.
double bounded_support_moment(const LevyModel& model);

struct LaplaceConstants {
    double leading;         // c_{beta,1} = (beta-1) beta^{beta/(1-beta)}
    double power_exponent;  // (2-beta)/(2(beta-1))
    double exp_exponent;    // beta/(beta-1)
};

/// Laplace-method constants for the tempered tail integral
/// I(xi) ~ c2 xi^{(2-beta)/(2(beta-1))} e^{c1 xi^{beta/(beta-1)}}; beta > 1.
LaplaceConstants laplace_constants(double beta);

struct AsymptoticsRow {
    double x = 0.0;
    double xi0 = 0.0;
    double predicted = 0.0;  // (c1^{-1} log(x/t))^{(beta-1)/beta}
    double ratio = 0.0;
    bool regime_ok = false;
    bool capped = false;
};

struct AsymptoticsReport {
    double beta = 0.0, t = 0.0, eps = 0.0;
    std::vector<AsymptoticsRow> rows;
    bool ratio_trend_ok = false;  // |ratio - 1| decreasing over in-regime rows
    bool eps_bound_ok = false;    // D^2 >= (1-eps) x predicted at the largest x
    bool pass = false;
};

/// Minimizer asymptotics for tempered tails: xi0(x) against the logarithmic
/// prediction, plus the (1-eps) exponent inequality at the largest in-regime x.
AsymptoticsReport tempered_asymptotics_check(const LevyModel& model, double beta,
                                             double t, std::span<const double> xs,
                                             double eps = 0.2);

}  // namespace levykit
