#pragma once

#include <span>
#include <string>
#include <vector>

#include "levykit/density.hpp"
#include "levykit/model.hpp"

namespace levykit {

enum class RateStatus { converged, boundary_capped };

struct RateResult {
    double t = 0.0;
    std::vector<double> x;
    double d_sq = 0.0;  // D_t^2(x) = sup_xi (xi.x - t Lambda(xi)) >= 0
    std::vector<double> xi0;
    int iterations = 0;
    double gradient_norm = 0.0;
    RateStatus status = RateStatus::converged;
};

/// Objective -xi.x + t Lambda(xi); its minimum over xi is -D_t^2(x).
double rate_objective(const LevyModel& model, double t, std::span<const double> xi,
                      std::span<const double> x);
double rate_objective(const LevyModel& model, double t, double xi, double x);

/// Minimizes the rate objective. 1-D: bracketing plus safeguarded Newton on
/// the strictly increasing derivative. n-D: damped Newton with a Levenberg
/// shift. Requires exponential moments and a positive definite second moment.
RateResult rate_function(const LevyModel& model, double t, std::span<const double> x);
RateResult rate_function(const LevyModel& model, double t, double x);

/// max_l |D_{lt}^2(lx) - l D_t^2(x)| / (l D_t^2(x)); zero when x = 0.
double rate_scaling_check(const LevyModel& model, double t, double x,
                          std::span<const double> ells);

/// max over xs of D_t^2(x) - |x|^2/(4ct) with c = lambda_min(int y y^T nu)/2.
double quadratic_bound_check(const LevyModel& model, double t,
                             std::span<const double> xs);

struct LdpRow {
    double ell = 0.0;
    double e = 0.0;         // |log(p_{lt}(lx))/l + D_t^2(x)|
    double log_p = 0.0;
    bool ok = false;
    std::string error;
};

struct LdpTable {
    std::vector<LdpRow> rows;
    double d_sq = 0.0;
    bool decreasing = false;   // e strictly decreases along the valid rows
    double threshold = 0.0;    // max(0.02, 2 * gaussian log-prefactor decay)
    bool pass = false;
};

/// Density-level large deviation check: e(l) per l, acceptance when the
/// sequence decreases and the last value is below the threshold.
LdpTable ldp_check(const LevyModel& model, double t, double x,
                   std::span<const double> ells,
                   const DensityGridParams& params = {});

}  // namespace levykit
