#include "levykit/bernstein.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "levykit/errors.hpp"
#include "levykit/model.hpp"
#include "levykit/quadrature.hpp"

namespace levykit {

namespace {

void require_finite_nonneg(double x, const char* what) {
    if (!std::isfinite(x) || x < 0.0) {
        std::ostringstream os;
        os << what << " must be finite and nonnegative, got " << x;
        throw invalid_input_error(os.str());
    }
}

}  // namespace

BernsteinFn BernsteinFn::power(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw precondition_error("power kind needs alpha in (0,1)");
    BernsteinFn f;
    f.kind_ = BernsteinKind::power;
    f.alpha_ = alpha;
    f.complete_ = true;
    return f;
}

BernsteinFn BernsteinFn::log1p() {
    BernsteinFn f;
    f.kind_ = BernsteinKind::log1p;
    f.complete_ = true;
    return f;
}

BernsteinFn BernsteinFn::ratio() {
    BernsteinFn f;
    f.kind_ = BernsteinKind::ratio;
    f.complete_ = true;
    return f;
}

BernsteinFn BernsteinFn::triplet(double a, double b, std::vector<BernsteinAtom> atoms) {
    require_finite_nonneg(a, "constant term");
    require_finite_nonneg(b, "linear coefficient");
    for (const auto& at : atoms)
        if (!(at.t > 0.0) || !(at.mass > 0.0))
            throw invalid_input_error("representing atoms need t > 0 and mass > 0");
    BernsteinFn f;
    f.kind_ = BernsteinKind::triplet;
    f.a_ = a;
    f.b_ = b;
    f.atoms_ = std::move(atoms);
    return f;
}

BernsteinFn BernsteinFn::triplet_density(double a, double b,
                                         std::function<double(double)> density,
                                         bool complete_bernstein) {
    require_finite_nonneg(a, "constant term");
    require_finite_nonneg(b, "linear coefficient");
    if (!density) throw invalid_input_error("triplet_density needs a density");
    BernsteinFn f;
    f.kind_ = BernsteinKind::triplet;
    f.a_ = a;
    f.b_ = b;
    f.density_ = std::move(density);
    f.complete_ = complete_bernstein;
    return f;
}

double BernsteinFn::power_exponent() const {
    if (kind_ != BernsteinKind::power)
        throw precondition_error("power_exponent: not a power kind");
    return alpha_;
}

double BernsteinFn::value(double x) const {
    if (!std::isfinite(x) || x < 0.0)
        throw invalid_input_error("Bernstein functions live on [0,inf)");
    switch (kind_) {
        case BernsteinKind::power:
            return std::pow(x, alpha_);
        case BernsteinKind::log1p:
            return std::log1p(x);
        case BernsteinKind::ratio:
            return x / (1.0 + x);
        case BernsteinKind::transform:
            return evaluator_(x);
        case BernsteinKind::triplet: {
            double v = a_ + b_ * x;
            for (const auto& at : atoms_) v += at.mass * (-std::expm1(-x * at.t));
            if (density_ && x > 0.0) {
                // (1 and t) integrability split at t = 1
                auto low = [&](double t) { return -std::expm1(-x * t) * density_(t); };
                v += integrate_singular_lower(low, 0.0, 1.0).value;
                QuadResult tail = integrate_upper_tail(low, 1.0);
                if (!tail.converged)
                    throw numeric_error("representing-density tail did not converge");
                v += tail.value;
            }
            return v;
        }
    }
    return 0.0;
}

double BernsteinFn::inverse(double y, double rtol) const {
    if (!std::isfinite(y)) throw invalid_input_error("inverse needs a finite value");
    switch (kind_) {
        case BernsteinKind::power:
            if (y < 0.0) throw out_of_range_error("power inverse: attainable range is [0,inf)");
            return std::pow(y, 1.0 / alpha_);
        case BernsteinKind::log1p:
            if (y < 0.0) throw out_of_range_error("log1p inverse: attainable range is [0,inf)");
            return std::expm1(y);
        case BernsteinKind::ratio:
            if (y < 0.0 || y >= 1.0)
                throw out_of_range_error("ratio inverse: attainable range is [0,1)");
            return y / (1.0 - y);
        default:
            break;
    }
    const double f0 = value(0.0);
    const double tol = rtol * std::max(1.0, std::fabs(y));
    if (y < f0 - tol) {
        std::ostringstream os;
        os << "value " << y << " below f(0) = " << f0;
        throw out_of_range_error(os.str());
    }
    if (y <= f0 + tol && y >= f0 - tol) return 0.0;
    double lo = 0.0, hi = 1.0, fhi = value(hi);
    while (fhi < y) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) {
            std::ostringstream os;
            os << "value " << y << " above attainable range [" << f0 << ", "
               << value(1e300) << "] (at x = 1e300)";
            throw out_of_range_error(os.str());
        }
        fhi = value(hi);
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = value(mid);
        if (std::fabs(fm - y) <= tol) return mid;
        if (fm < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::string BernsteinFn::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case BernsteinKind::power: os << "power(" << alpha_ << ")"; break;
        case BernsteinKind::log1p: os << "log1p"; break;
        case BernsteinKind::ratio: os << "ratio"; break;
        case BernsteinKind::triplet: os << "triplet(a=" << a_ << ",b=" << b_ << ")"; break;
        case BernsteinKind::transform: os << "tail-transform"; break;
    }
    return os.str();
}

DerivativeBoundReport derivative_bound_check(const BernsteinFn& f,
                                             std::span<const double> xs) {
    if (xs.empty()) throw invalid_input_error("derivative_bound_check needs points");
    DerivativeBoundReport report;
    report.max_violation = -std::numeric_limits<double>::infinity();
    const double eps = std::numeric_limits<double>::epsilon();
    for (double x : xs) {
        if (!(x > 0.0)) throw invalid_input_error("points must be positive");
        const double fx = f(x);
        {
            const double h = x * std::cbrt(eps);
            const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
            report.rows.push_back({x, 1, std::fabs(d1), fx / x});
        }
        {
            const double h = x * std::pow(eps, 0.25);
            const double d2 = (f(x + h) - 2.0 * fx + f(x - h)) / (h * h);
            report.rows.push_back({x, 2, std::fabs(d2), 2.0 * fx / (x * x)});
        }
    }
    for (const auto& row : report.rows)
        report.max_violation =
            std::max(report.max_violation, row.derivative_abs - row.bound);
    return report;
}

LevyModel bernstein_radial_model(const BernsteinFn& f, int dim) {
    if (f.constant_term() != 0.0 || f.linear_coefficient() != 0.0)
        throw precondition_error(
            "radial model needs f(0) = 0 and no linear term");
    if (dim < 1 || dim > 3) throw precondition_error("dimension cap is 3");
    auto density = [fn = f, dim](double r) {
        return fn(1.0 / (r * r)) / std::pow(r, dim);
    };
    return LevyModel::from_measure(LevyMeasure::radial(density, 1.0, dim));
}

BernsteinFn iterated_tail_integral(const BernsteinFn& g) {
    if (!g.is_complete_bernstein())
        throw precondition_error("iterated tail integral needs a complete Bernstein function");
    if (g.linear_coefficient() > 0.0)
        throw divergence_error("inner integral of g(s)/s^2 diverges (linear term)");
    if (g.constant_term() > 0.0)
        throw divergence_error("outer integral diverges (constant term)");

    std::function<double(double)> eval;
    switch (g.kind()) {
        case BernsteinKind::power: {
            const double alpha = g.power_exponent();
            eval = [alpha](double t) {
                return std::pow(t, alpha) / (alpha * (1.0 - alpha));
            };
            break;
        }
        case BernsteinKind::log1p: {
            // inner integral has the antiderivative log(1+r)/r + log(1+1/r)
            auto inner = [](double r) {
                return std::log1p(r) / r + std::log1p(1.0 / r);
            };
            eval = [inner](double t) {
                if (t == 0.0) return 0.0;
                return integrate_singular_lower(inner, 0.0, t).value;
            };
            break;
        }
        case BernsteinKind::ratio: {
            auto inner = [](double r) { return std::log1p(1.0 / r); };
            eval = [inner](double t) {
                if (t == 0.0) return 0.0;
                return integrate_singular_lower(inner, 0.0, t).value;
            };
            break;
        }
        default: {
            BernsteinFn gc = g;
            auto inner = [gc](double r) {
                QuadResult q = integrate_upper_tail(
                    [&](double s) { return gc(s) / (s * s); }, r, std::max(r, 1.0));
                if (!q.converged) throw divergence_error("inner integral diverges");
                return q.value;
            };
            eval = [inner](double t) {
                if (t == 0.0) return 0.0;
                return integrate_singular_lower(inner, 0.0, t).value;
            };
            break;
        }
    }

    BernsteinFn mu;
    mu.kind_ = BernsteinKind::transform;
    mu.a_ = 0.0;
    mu.b_ = 0.0;
    mu.complete_ = true;
    mu.evaluator_ = std::move(eval);
    return mu;
}

}  // namespace levykit
