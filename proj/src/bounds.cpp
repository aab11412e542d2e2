#include "levykit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "levykit/errors.hpp"
#include "levykit/parallel.hpp"

namespace levykit {

namespace {

constexpr double kLogTiny = -690.0;  // ~ log(1e-300)

double log_or_tiny(double v) {
    return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
}

}  // namespace

std::vector<double> off_diagonal_relative_slack(std::span<const double> p_at_x,
                                                double p0,
                                                std::span<const double> d_sq) {
    std::vector<double> out(p_at_x.size());
    for (std::size_t i = 0; i < p_at_x.size(); ++i)
        out[i] = (p_at_x[i] - std::exp(-d_sq[i]) * p0) / p0;
    return out;
}

BoundReport off_diagonal_check(const LevyModel& model, double t,
                               std::span<const double> xs,
                               const DensityGridParams& params) {
    BoundReport report;
    report.bound_id = "off_diagonal";
    auto grid = density_grid(model, t, params);
    const double p0 = grid.value_at(0.0);

    report.rows.resize(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
        BoundRow row;
        row.key = xs[i];
        try {
            const double px =
                grid.has_node(xs[i]) ? grid.value_at(xs[i]) : density_at(model, t, xs[i]);
            const double d_sq = rate_function(model, t, xs[i]).d_sq;
            row.lhs_log = log_or_tiny(px);
            row.rhs_log = log_or_tiny(p0) - d_sq;
            if (row.lhs_log < kLogTiny && row.rhs_log < kLogTiny) {
                row.flag = RowFlag::underflow;
                row.note = "both sides underflow";
            }
            row.slack = px - std::exp(row.rhs_log);
        } catch (const error& err) {
            row.flag = RowFlag::error;
            row.note = err.what();
        }
        report.rows[i] = row;
    });

    report.worst_slack = -std::numeric_limits<double>::infinity();
    bool all_ok = true;
    for (const auto& row : report.rows) {
        if (row.flag == RowFlag::error) all_ok = false;
        if (row.flag != RowFlag::ok) continue;
        report.worst_slack = std::max(report.worst_slack, row.slack);
    }
    report.pass = all_ok && report.worst_slack <= 1e-8 * p0;
    return report;
}

BoundReport on_diagonal_fit(const LevyModel& model, const BernsteinFn& f,
                            std::span<const double> ts, int dim,
                            const DensityGridParams& params) {
    BoundReport report;
    report.bound_id = "on_diagonal";
    const double half_n = 0.5 * static_cast<double>(dim);

    std::vector<double> log_m(ts.size());
    std::vector<std::string> errors(ts.size());
    parallel_for(ts.size(), [&](std::size_t i) {
        try {
            auto grid = density_grid(model, ts[i], params);
            const double m = grid.value_at(0.0);
            const double sup = *std::max_element(grid.p.begin(), grid.p.end());
            if (sup > m * (1.0 + 1e-9)) errors[i] = "sup p not attained at the origin";
            log_m[i] = log_or_tiny(m);
        } catch (const error& err) {
            errors[i] = err.what();
            log_m[i] = std::numeric_limits<double>::quiet_NaN();
        }
    });

    bool all_ok = true;
    for (double gamma = 1.0; gamma > 1.0 / 128.0; gamma *= 0.5) {
        double log_c = -std::numeric_limits<double>::infinity();
        bool ok = true;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (!errors[i].empty()) {
                ok = false;
                continue;
            }
            try {
                const double inv = f.inverse(1.0 / (gamma * ts[i]));
                log_c = std::max(log_c, log_m[i] - half_n * std::log(inv));
            } catch (const error&) {
                ok = false;
            }
        }
        if (ok && std::isfinite(log_c))
            report.gamma_table.emplace_back(gamma, std::exp(log_c));
        else
            all_ok = false;
        if (gamma == 1.0 && ok && std::isfinite(log_c)) {
            report.gamma = 1.0;
            report.c = std::exp(log_c);
        }
    }

    for (std::size_t i = 0; i < ts.size(); ++i) {
        BoundRow row;
        row.key = ts[i];
        if (!errors[i].empty()) {
            row.flag = RowFlag::error;
            row.note = errors[i];
        } else {
            row.lhs_log = log_m[i];
            const double inv = f.inverse(1.0 / ts[i]);  // gamma = 1 envelope
            row.rhs_log = std::log(report.c) + half_n * std::log(inv);
            row.slack = row.lhs_log - row.rhs_log;  // <= 0 by the fit
        }
        report.rows.push_back(row);
        if (row.flag == RowFlag::error) all_ok = false;
    }
    report.worst_slack = 0.0;
    for (const auto& row : report.rows)
        if (row.flag == RowFlag::ok)
            report.worst_slack = std::max(report.worst_slack, row.slack);
    report.pass = all_ok && !report.gamma_table.empty() && report.gamma <= 1.0;
    return report;
}

BoundReport combined_bound_check(const LevyModel& model, const BernsteinFn& f,
                                 double t, std::span<const double> xs,
                                 std::span<const double> fit_ts,
                                 const DensityGridParams& params) {
    if (!(t > 0.0) || t > 1.0)
        throw precondition_error("combined bound is stated for 0 < t <= 1");
    BoundReport fit = on_diagonal_fit(model, f, fit_ts, model.dim(), params);

    BoundReport report;
    report.bound_id = "combined";
    report.c = fit.c;
    report.gamma = fit.gamma;
    report.gamma_table = fit.gamma_table;
    if (!fit.pass) {
        report.pass = false;
        return report;
    }

    auto grid = density_grid(model, t, params);
    const double half_n = 0.5 * static_cast<double>(model.dim());
    const double log_env =
        std::log(report.c) + half_n * std::log(f.inverse(1.0 / (report.gamma * t)));

    report.rows.resize(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
        BoundRow row;
        row.key = xs[i];
        try {
            const double px =
                grid.has_node(xs[i]) ? grid.value_at(xs[i]) : density_at(model, t, xs[i]);
            const double d_sq = rate_function(model, t, xs[i]).d_sq;
            row.lhs_log = log_or_tiny(px);
            row.rhs_log = log_env - d_sq;
            if (row.lhs_log < kLogTiny && row.rhs_log < kLogTiny) {
                row.flag = RowFlag::underflow;
                row.note = "pass-by-underflow";
            } else {
                row.slack = row.lhs_log - row.rhs_log;
            }
        } catch (const error& err) {
            row.flag = RowFlag::error;
            row.note = err.what();
        }
        report.rows[i] = row;
    });

    report.worst_slack = -std::numeric_limits<double>::infinity();
    bool all_ok = true;
    for (const auto& row : report.rows) {
        if (row.flag == RowFlag::error) all_ok = false;
        if (row.flag != RowFlag::ok) continue;
        report.worst_slack = std::max(report.worst_slack, row.slack);
    }
    report.pass = all_ok && report.worst_slack <= 1e-8;
    return report;
}

double bounded_support_rate_bound(double c1, double eps, double t, double x) {
    if (!(c1 > 0.0) || !(eps > 0.0) || !(t > 0.0))
        throw invalid_input_error("bounded_support_rate_bound needs positive c1, eps, t");
    const double threshold = t * c1 * (1.0 + eps);
    if (!(x > threshold)) {
        std::ostringstream os;
        os << "x = " << x << " outside the logarithmic regime x > t c1 (1+eps) = "
           << threshold;
        throw regime_error(os.str());
    }
    return -(x / (1.0 + eps)) * std::log(x / threshold) + x / (1.0 + eps);
}

double bounded_support_moment(const LevyModel& model) {
    if (!model.has_measure())
        throw feature_error("moment constant needs a Levy measure");
    if (model.measure().support_radius() > 1.0 + 1e-9)
        throw precondition_error("supp nu must lie in the closed unit ball");
    return model.jump_integral(
        [](double y) { return y * y * std::exp(std::fabs(y)); });
}

LaplaceConstants laplace_constants(double beta) {
    if (!(beta > 1.0))
        throw precondition_error(
            "laplace constants need beta > 1 (no exponential moments otherwise)");
    LaplaceConstants c;
    c.leading = (beta - 1.0) * std::pow(beta, beta / (1.0 - beta));
    c.power_exponent = (2.0 - beta) / (2.0 * (beta - 1.0));
    c.exp_exponent = beta / (beta - 1.0);
    return c;
}

AsymptoticsReport tempered_asymptotics_check(const LevyModel& model, double beta,
                                             double t, std::span<const double> xs,
                                             double eps) {
    AsymptoticsReport report;
    report.beta = beta;
    report.t = t;
    report.eps = eps;
    const LaplaceConstants lc = laplace_constants(beta);
    const double exponent = (beta - 1.0) / beta;

    report.rows.resize(xs.size());
    std::vector<double> d_sqs(xs.size(), 0.0);
    parallel_for(xs.size(), [&](std::size_t i) {
        AsymptoticsRow row;
        row.x = xs[i];
        row.regime_ok = row.x >= 20.0 * t;
        row.predicted = std::pow(std::log(row.x / t) / lc.leading, exponent);
        if (row.regime_ok) {
            auto res = rate_function(model, t, row.x);
            row.xi0 = res.xi0[0];
            row.capped = res.status == RateStatus::boundary_capped;
            row.ratio = row.xi0 / row.predicted;
            d_sqs[i] = res.d_sq;
        }
        report.rows[i] = row;
    });

    // |ratio - 1| must shrink along the in-regime rows
    report.ratio_trend_ok = true;
    const AsymptoticsRow* prev = nullptr;
    int valid = 0;
    for (const auto& row : report.rows) {
        if (!row.regime_ok || row.capped) continue;
        ++valid;
        if (prev && !(std::fabs(row.ratio - 1.0) < std::fabs(prev->ratio - 1.0)))
            report.ratio_trend_ok = false;
        prev = &row;
    }
    if (valid < 2) report.ratio_trend_ok = false;

    report.eps_bound_ok = false;
    for (std::size_t i = xs.size(); i-- > 0;) {
        const auto& row = report.rows[i];
        if (row.regime_ok && !row.capped) {
            report.eps_bound_ok =
                d_sqs[i] >= (1.0 - eps) * row.x * row.predicted;
            break;
        }
    }
    report.pass = report.ratio_trend_ok && report.eps_bound_ok;
    return report;
}

}  // namespace levykit
