#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace levykit {

class LevyModel;

enum class BernsteinKind { power, log1p, ratio, triplet, transform };

struct BernsteinAtom {
    double t;     // location in (0, inf)
    double mass;  // > 0
};

/// A Bernstein function f(x) = a + b x + int (1 - e^{-xt}) mu(dt), either in
/// one of the closed forms used throughout (x^alpha, log(1+x), x/(1+x)), as an
/// explicit triplet, or backed by an evaluator (output of the tail transform).
class BernsteinFn {
public:
    static BernsteinFn power(double alpha);
    static BernsteinFn log1p();
    static BernsteinFn ratio();
    static BernsteinFn triplet(double a, double b, std::vector<BernsteinAtom> atoms);
    /// Triplet with a representing density m(t); the (1 and t) integrability
    /// split at t = 1 is handled by the evaluator.
    static BernsteinFn triplet_density(double a, double b,
                                       std::function<double(double)> density,
                                       bool complete_bernstein = false);

    double value(double x) const;
    double operator()(double x) const { return value(x); }

    /// Monotone inverse on [f(0), sup f). Closed-form kinds invert
    /// analytically; the rest bracket and bisect to |f(x)-y| <= rtol*max(1,y).
    double inverse(double y, double rtol = 1e-12) const;

    BernsteinKind kind() const { return kind_; }
    double constant_term() const { return a_; }
    double linear_coefficient() const { return b_; }
    bool is_complete_bernstein() const { return complete_; }
    double power_exponent() const;  // power kind only

    /// Optional growth annotation: kappa such that f(t) t^{-kappa} increases
    /// for large t. Carried as metadata, never verified.
    std::optional<double> kappa;

    std::string describe() const;

private:
    BernsteinFn() = default;
    friend BernsteinFn iterated_tail_integral(const BernsteinFn&);

    BernsteinKind kind_ = BernsteinKind::power;
    double a_ = 0.0, b_ = 0.0;
    double alpha_ = 0.5;
    bool complete_ = false;
    std::vector<BernsteinAtom> atoms_;
    std::function<double(double)> density_;    // representing density, if any
    std::function<double(double)> evaluator_;  // transform kind
};

struct DerivativeBoundRow {
    double x;
    int order;
    double derivative_abs;  // central finite difference
    double bound;           // k! f(x) / x^k
};

struct DerivativeBoundReport {
    std::vector<DerivativeBoundRow> rows;
    double max_violation;  // max over rows of |f^(k)| - bound
};

/// Checks |f^(k)(x)| <= k! f(x)/x^k for k = 1,2 by finite differences.
DerivativeBoundReport derivative_bound_check(const BernsteinFn& f,
                                             std::span<const double> xs);

/// Model with the radial jump density f(1/|y|^2)/|y|^n on the unit ball.
/// Requires f(0) = 0 and no linear term. Dimension capped at 3.
LevyModel bernstein_radial_model(const BernsteinFn& f, int dim);

/// mu(t) = int_0^t int_r^inf g(s) s^{-2} ds dr for a complete Bernstein g.
/// The result is again (complete) Bernstein; it is returned as an
/// evaluator-backed BernsteinFn with the inner integral in closed form for
/// the closed-form kinds.
BernsteinFn iterated_tail_integral(const BernsteinFn& g);

}  // namespace levykit
