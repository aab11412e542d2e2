#pragma once

#include <functional>

namespace levykit {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    long evals = 0;
    bool converged = true;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7/K15) on a finite interval.
QuadResult integrate(const Integrand& f, double a, double b,
                     double abs_tol = 1e-13, double rel_tol = 1e-11,
                     int max_depth = 48);

/// Integral on (a, b] of a function with an integrable singularity at a.
/// Uses geometric panels shrinking towards a; each panel is handled by the
/// adaptive rule. Stops when a panel contributes below tolerance.
QuadResult integrate_singular_lower(const Integrand& f, double a, double b,
                                    double abs_tol = 1e-13, double rel_tol = 1e-11);

/// Integral on [a, infinity) of a decaying function. Doubles the cutoff until
/// the last panel is negligible relative to the accumulated value.
QuadResult integrate_upper_tail(const Integrand& f, double a, double width0 = 1.0,
                                double abs_tol = 1e-13, double rel_tol = 1e-11);

/// Integral on [a, b] of a factor oscillating with angular frequency omega
/// (phase omega*x). Panels are aligned with half periods so the adaptive rule
/// never sees more than one sign change per panel.
QuadResult integrate_oscillatory(const Integrand& f, double a, double b, double omega,
                                 double abs_tol = 1e-13, double rel_tol = 1e-11);

/// int_a^b g(x) cos(omega x) dx by composite Filon-Simpson panels sized to the
/// envelope g, not the oscillation; refined until two resolutions agree.
QuadResult filon_cos(const Integrand& g, double a, double b, double omega,
                     double abs_tol = 1e-13, double rel_tol = 1e-10);

/// 1 - cos(u) without cancellation for small u.
double one_minus_cos(double u);

/// cosh(u) - 1 without cancellation for small u; +inf if it overflows.
double cosh_minus_one(double u);

}  // namespace levykit
