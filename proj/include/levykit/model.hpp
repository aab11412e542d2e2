#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "levykit/measure.hpp"

namespace levykit {

/// Closed-form exponent catalog. These bypass the measure and exist as oracle
/// channels for the density and rate tests.
enum class ClosedForm { none, gaussian, stable, semi_stable };

/// Exponent-level view of a symmetric pure-jump Levy process: psi(xi), the
/// cumulant Lambda(xi) = int (cosh(xi.y)-1) nu(dy), moments and feasibility
/// flags.
class LevyModel {
public:
    static LevyModel from_measure(LevyMeasure m);
    static LevyModel gaussian_channel(int dim = 1);             // psi = |xi|^2
    static LevyModel stable_channel(double alpha, int dim = 1); // psi = |xi|^alpha
    static LevyModel semi_stable_channel(double alpha, int dim = 1);

    int dim() const { return dim_; }
    bool has_measure() const { return measure_.has_value(); }
    const LevyMeasure& measure() const;
    ClosedForm closed_form() const { return closed_form_; }
    double closed_form_alpha() const { return cf_alpha_; }

    bool has_exp_moments() const { return has_exp_moments_; }
    bool hartman_wintner_ok() const { return hartman_wintner_ok_; }
    bool has_second_moment() const { return has_second_moment_; }
    /// int y y^T nu(dy), row-major dim x dim.
    const std::vector<double>& second_moment_matrix() const { return second_moment_; }
    double second_moment_min_eig() const;

    double psi(std::span<const double> xi) const;
    double psi(double xi) const;

    /// Cumulant Lambda(xi) >= 0. Contributions whose exponent exceeds the
    /// floating range are evaluated with a log shift; if the shifted value
    /// still overflows the result is +inf, which callers treat as "outside
    /// the feasible region". Throws feature_error without exponential moments.
    double cumulant(std::span<const double> xi) const;
    double cumulant(double xi) const;
    std::vector<double> cumulant_grad(std::span<const double> xi) const;
    std::vector<double> cumulant_hess(std::span<const double> xi) const;
    double cumulant_deriv(double xi) const;
    double cumulant_second_deriv(double xi) const;

    /// Carre du champ: 1/2 int (u(x+y)-u(x))^2 nu(dy), 1-D.
    double gamma_op(const std::function<double(double)>& u, double x) const;

    /// int F(y) nu(dy) for an arbitrary 1-D integrand (sum/quadrature per
    /// variant); the machinery behind gamma_op and the Dirichlet difference
    /// form.
    double jump_integral(const std::function<double(double)>& F) const;

    std::string describe() const;

private:
    LevyModel() = default;

    std::optional<LevyMeasure> measure_;
    int dim_ = 1;
    ClosedForm closed_form_ = ClosedForm::none;
    double cf_alpha_ = 0.0;
    bool has_exp_moments_ = false;
    bool hartman_wintner_ok_ = false;
    bool has_second_moment_ = false;
    std::vector<double> second_moment_;
};

/// Heuristic Hartman-Wintner check: psi(xi)/log(1+|xi|) on |xi| = 2^k up to
/// the cap; true when the running minimum over the top half of the grid
/// exceeds C.
bool check_hartman_wintner(const LevyModel& m, double C, double cap = 4096.0);

}  // namespace levykit
