#include "levykit/rate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "levykit/errors.hpp"

namespace levykit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

RateResult solve_1d(const LevyModel& model, double t, double x) {
    RateResult res;
    res.t = t;
    res.x = {x};
    res.xi0 = {0.0};
    if (x == 0.0) return res;

    const double sign = x > 0.0 ? 1.0 : -1.0;
    const double ax = std::fabs(x);
    const double tol = 1e-12 * (1.0 + ax);
    auto deriv = [&](double xi) { return t * model.cumulant_deriv(xi) - ax; };

    // Lambda' is strictly increasing, so doubling brackets the root exactly.
    double lo = 0.0, hi = 1.0;
    double best_lower = 0.0, best_xi = 0.0;
    double d_hi = deriv(hi);
    while (!(d_hi >= 0.0) || !std::isfinite(d_hi)) {
        if (std::isfinite(d_hi)) {
            const double lam = model.cumulant(hi);
            if (std::isfinite(lam) && hi * ax - t * lam > best_lower) {
                best_lower = hi * ax - t * lam;
                best_xi = hi;
            }
            lo = hi;
        }
        if (std::isnan(d_hi)) break;
        if (std::isinf(d_hi)) break;
        hi *= 2.0;
        if (hi > 1e300) break;
        d_hi = deriv(hi);
    }
    if (!(d_hi >= 0.0)) {
        // derivative never crossed zero inside the floating range
        res.status = RateStatus::boundary_capped;
        res.d_sq = best_lower;
        res.xi0 = {sign * best_xi};
        res.gradient_norm = kInf;
        return res;
    }

    double xi = 0.5 * (lo + hi);
    double d = deriv(xi);
    int it = 0;
    for (; it < 200; ++it) {
        if (std::isfinite(d)) {
            if (std::fabs(d) <= tol) break;
            if (d > 0.0)
                hi = xi;
            else
                lo = xi;
        } else {
            hi = xi;
        }
        // Newton step on the derivative, safeguarded by the bracket
        double next = kInf;
        if (std::isfinite(d)) {
            const double second = t * model.cumulant_second_deriv(xi);
            if (std::isfinite(second) && second > 0.0) next = xi - d / second;
        }
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        xi = next;
        d = deriv(xi);
    }
    res.iterations = it;
    res.xi0 = {sign * xi};
    res.gradient_norm = std::isfinite(d) ? std::fabs(d) : kInf;
    const double lam = model.cumulant(xi);
    res.d_sq = std::max(0.0, xi * ax - t * lam);
    if (!(res.gradient_norm <= 1e-10 * (1.0 + ax)))
        res.status = RateStatus::boundary_capped;
    return res;
}

// Cholesky solve of (H + shift I) d = -g for dim <= 3
bool solve_spd(std::vector<double> h, std::span<const double> g, double shift,
               std::vector<double>& d, int n) {
    for (int i = 0; i < n; ++i) h[i * n + i] += shift;
    std::vector<double> l(h.size(), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = h[i * n + j];
            for (int k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
            if (i == j) {
                if (!(s > 0.0)) return false;
                l[i * n + i] = std::sqrt(s);
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
        double s = -g[i];
        for (int k = 0; k < i; ++k) s -= l[i * n + k] * y[k];
        y[i] = s / l[i * n + i];
    }
    d.assign(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k < n; ++k) s -= l[k * n + i] * d[k];
        d[i] = s / l[i * n + i];
    }
    return true;
}

RateResult solve_nd(const LevyModel& model, double t, std::span<const double> x) {
    const int n = model.dim();
    RateResult res;
    res.t = t;
    res.x.assign(x.begin(), x.end());
    res.xi0.assign(n, 0.0);
    const double ax = norm(x);
    if (ax == 0.0) return res;
    const double tol = 1e-12 * (1.0 + ax);

    std::vector<double> xi(n, 0.0);
    double value = 0.0;  // objective -xi.x + t Lambda(xi)
    int it = 0;
    for (; it < 200; ++it) {
        std::vector<double> grad = model.cumulant_grad(xi);
        for (int i = 0; i < n; ++i) grad[i] = t * grad[i] - x[i];
        const double gn = norm(grad);
        res.gradient_norm = gn;
        if (gn <= tol) break;
        std::vector<double> hess = model.cumulant_hess(xi);
        for (double& v : hess) v *= t;
        double trace = 0.0;
        for (int i = 0; i < n; ++i) trace += hess[i * n + i];
        std::vector<double> step;
        double shift = 1e-10 * std::max(1.0, trace);
        while (!solve_spd(hess, grad, shift, step, n)) shift *= 10.0;
        // damped update: halve until the objective does not increase
        double scale = 1.0;
        for (int half = 0; half < 60; ++half) {
            std::vector<double> cand(n);
            for (int i = 0; i < n; ++i) cand[i] = xi[i] + scale * step[i];
            const double lam = model.cumulant(cand);
            if (std::isfinite(lam)) {
                const double v = -dot(cand, x) + t * lam;
                if (v <= value + 1e-14 * std::fabs(value) || half == 59) {
                    xi = cand;
                    value = v;
                    break;
                }
            }
            scale *= 0.5;
        }
    }
    res.iterations = it;
    res.xi0 = xi;
    res.d_sq = std::max(0.0, -value);
    if (!(res.gradient_norm <= 1e-10 * (1.0 + ax)))
        res.status = RateStatus::boundary_capped;
    return res;
}

}  // namespace

double rate_objective(const LevyModel& model, double t, std::span<const double> xi,
                      std::span<const double> x) {
    const double lam = model.cumulant(xi);
    if (!std::isfinite(lam)) return kInf;
    return -dot(xi, x) + t * lam;
}

double rate_objective(const LevyModel& model, double t, double xi, double x) {
    const double a[1] = {xi}, b[1] = {x};
    return rate_objective(model, t, std::span<const double>(a, 1),
                          std::span<const double>(b, 1));
}

RateResult rate_function(const LevyModel& model, double t, std::span<const double> x) {
    if (!(t > 0.0)) throw invalid_input_error("time must be positive");
    if (static_cast<int>(x.size()) != model.dim())
        throw invalid_input_error("x has the wrong dimension");
    if (!model.has_exp_moments() && model.closed_form() != ClosedForm::gaussian)
        throw feature_error("rate function requires exponential moments");
    if (!model.has_second_moment() || !(model.second_moment_min_eig() > 0.0))
        throw precondition_error(
            "rate function needs a positive definite second moment matrix "
            "(degenerate measures may have D = +inf off the supported subspace)");
    if (model.dim() == 1) return solve_1d(model, t, x[0]);
    return solve_nd(model, t, x);
}

RateResult rate_function(const LevyModel& model, double t, double x) {
    const double xv[1] = {x};
    return rate_function(model, t, std::span<const double>(xv, 1));
}

double rate_scaling_check(const LevyModel& model, double t, double x,
                          std::span<const double> ells) {
    if (x == 0.0) return 0.0;
    const double base = rate_function(model, t, x).d_sq;
    double worst = 0.0;
    for (double ell : ells) {
        const double scaled = rate_function(model, ell * t, ell * x).d_sq;
        worst = std::max(worst, std::fabs(scaled - ell * base) / (ell * base));
    }
    return worst;
}

double quadratic_bound_check(const LevyModel& model, double t,
                             std::span<const double> xs) {
    const double c = 0.5 * model.second_moment_min_eig();
    if (!(c > 0.0)) throw precondition_error("second moment matrix is degenerate");
    double worst = -kInf;
    for (double x : xs) {
        const double d_sq = rate_function(model, t, x).d_sq;
        worst = std::max(worst, d_sq - x * x / (4.0 * c * t));
    }
    return worst;
}

LdpTable ldp_check(const LevyModel& model, double t, double x,
                   std::span<const double> ells, const DensityGridParams& params) {
    LdpTable table;
    table.d_sq = rate_function(model, t, x).d_sq;

    DensityGridParams p = params;
    if (x != 0.0) p.align = std::fabs(x);

    double ell_max = 0.0;
    for (double ell : ells) ell_max = std::max(ell_max, ell);

    for (double ell : ells) {
        LdpRow row;
        row.ell = ell;
        try {
            auto grid = density_grid(model, ell * t, p);
            const double val = grid.value_at(ell * x);
            if (!(val > 0.0)) throw numeric_error("density vanished at the target point");
            row.log_p = std::log(val);
            row.e = std::fabs(row.log_p / ell + table.d_sq);
            row.ok = true;
        } catch (const error& err) {
            row.error = err.what();
        }
        table.rows.push_back(row);
    }

    table.decreasing = true;
    const LdpRow* prev = nullptr;
    int valid = 0;
    for (const auto& row : table.rows) {
        if (!row.ok) continue;
        ++valid;
        if (prev && !(row.e < prev->e)) table.decreasing = false;
        prev = &row;
    }
    if (valid < 2) table.decreasing = false;

    // generic convergence is O(log l / l); the gaussian log-prefactor decay
    // 0.5 log(4 pi l)/l sets the scale
    table.threshold =
        std::max(0.02, std::log(4.0 * M_PI * ell_max) / ell_max);
    const LdpRow* last = nullptr;
    for (const auto& row : table.rows)
        if (row.ok) last = &row;
    table.pass = table.decreasing && last && last->e <= table.threshold;
    return table;
}

}  // namespace levykit
