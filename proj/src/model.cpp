#include "levykit/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "levykit/errors.hpp"
#include "levykit/quadrature.hpp"

namespace levykit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }


// mass-weighted cosh(u)-1 evaluated in log space when needed
double mass_cosh_minus_one(double mass, double u) {
    u = std::fabs(u);
    if (u <= 700.0) return mass * cosh_minus_one(u);
    const double log_term = std::log(mass) + u - 0.6931471805599453;  // log 2
    if (log_term > 709.5) return kInf;
    return std::exp(log_term);
}

double mass_sinh(double mass, double u) {
    const double au = std::fabs(u);
    if (au <= 700.0) return mass * std::sinh(u);
    const double log_term = std::log(mass) + au - 0.6931471805599453;
    if (log_term > 709.5) return u > 0 ? kInf : -kInf;
    return u > 0 ? std::exp(log_term) : -std::exp(log_term);
}

// ---- psi over the measure -------------------------------------------------

double psi_atoms(const std::vector<Atom>& atoms, std::span<const double> xi) {
    double s = 0.0;
    for (const auto& a : atoms) s += a.mass * one_minus_cos(dot(a.location, xi));
    return s;
}

// angular average of 1 - cos over the sphere, as a function of u = |xi| r
double one_minus_cos_kernel(double u, int dim) {
    switch (dim) {
        case 1:
            return one_minus_cos(u);
        case 2:
            return 1.0 - std::cyl_bessel_j(0.0, u);
        default: {  // dim == 3, kernel 1 - sin(u)/u
            if (std::fabs(u) < 1e-4) {
                const double u2 = u * u;
                return u2 / 6.0 * (1.0 - u2 / 20.0);
            }
            return 1.0 - std::sin(u) / u;
        }
    }
}

double sphere_factor(int dim) {
    switch (dim) {
        case 1: return 2.0;
        case 2: return 2.0 * M_PI;
        default: return 4.0 * M_PI;
    }
}

double psi_radial(const RadialDensityPart& rp, int dim, double rho) {
    if (rho == 0.0) return 0.0;
    rho = std::fabs(rho);
    const double R = rp.radius;
    const auto& g = rp.density;
    const double factor = sphere_factor(dim);
    auto integrand = [&](double r) {
        return one_minus_cos_kernel(rho * r, dim) * g(r) * std::pow(r, dim - 1);
    };
    const double split = std::min(R, M_PI / rho);
    QuadResult inner = integrate_singular_lower(integrand, 0.0, split);
    double total = inner.value;
    double error = inner.error;
    bool converged = inner.converged;
    if (split < R) {
        QuadResult outer = integrate_oscillatory(integrand, split, R, rho,
                                                 1e-13, 1e-11);
        total += outer.value;
        error += outer.error;
        converged = converged && outer.converged;
    }
    if (!std::isfinite(total) ||
        (!converged && error > 1e-6 * std::max(1.0, std::fabs(total)))) {
        std::ostringstream os;
        os << "psi quadrature did not converge: achieved estimate "
           << factor * total << ", error bound " << factor * error;
        throw numeric_error(os.str());
    }
    return factor * total;
}

double tempered_cutoff(double beta) {
    // e^{-y^beta} below 1e-20
    return std::pow(46.1, 1.0 / beta) + 1.0;
}

double psi_measure(const LevyMeasure& m, std::span<const double> xi);

double psi_tempered(const TemperedTailPart& tp, double xi) {
    const double axi = std::fabs(xi);
    const double Y = tempered_cutoff(tp.beta);
    const double beta = tp.beta;
    auto envelope = [beta](double y) { return std::exp(-std::pow(y, beta)); };
    double total;
    if (axi * (Y - 1.0) > 512.0 * M_PI) {
        // long oscillatory range: split 1 - cos and use envelope-sized
        // Filon panels for the cosine part
        const double mass = integrate(envelope, 1.0, Y).value;
        total = 2.0 * (mass - filon_cos(envelope, 1.0, Y, axi).value);
    } else {
        auto integrand = [&](double y) {
            return 2.0 * one_minus_cos(axi * y) * envelope(y);
        };
        QuadResult q = axi * (Y - 1.0) > M_PI
                           ? integrate_oscillatory(integrand, 1.0, Y, axi)
                           : integrate(integrand, 1.0, Y);
        total = q.value;
    }
    if (tp.core) {
        const double x[1] = {xi};
        total += psi_measure(*tp.core, x);
    }
    return total;
}

double psi_measure(const LevyMeasure& m, std::span<const double> xi) {
    switch (m.variant()) {
        case MeasureVariant::discrete_atoms:
            return psi_atoms(m.atom_list(), xi);
        case MeasureVariant::radial_density:
            return psi_radial(m.radial_part(), m.dim(), norm(xi));
        case MeasureVariant::tempered_tail:
            return psi_tempered(m.tempered_part(), xi[0]);
        case MeasureVariant::composite: {
            double s = 0.0;
            for (const auto& p : m.parts()) s += psi_measure(p, xi);
            return s;
        }
    }
    return 0.0;
}

// ---- cumulant and derivatives ---------------------------------------------

double cumulant_atoms(const std::vector<Atom>& atoms, std::span<const double> xi) {
    double s = 0.0;
    for (const auto& a : atoms) {
        s += mass_cosh_minus_one(a.mass, dot(a.location, xi));
        if (!std::isfinite(s)) return kInf;
    }
    return s;
}

double cumulant_radial_1d(const RadialDensityPart& rp, double xi) {
    const double axi = std::fabs(xi);
    if (axi == 0.0) return 0.0;
    if (axi * rp.radius > 705.0) return kInf;
    auto integrand = [&](double r) { return 2.0 * cosh_minus_one(axi * r) * rp.density(r); };
    QuadResult q = integrate_singular_lower(integrand, 0.0, rp.radius);
    return q.value;
}

double cumulant_tempered(const TemperedTailPart& tp, double xi);

double cumulant_measure_1d(const LevyMeasure& m, double xi) {
    switch (m.variant()) {
        case MeasureVariant::discrete_atoms: {
            const double x[1] = {xi};
            return cumulant_atoms(m.atom_list(), x);
        }
        case MeasureVariant::radial_density:
            return cumulant_radial_1d(m.radial_part(), xi);
        case MeasureVariant::tempered_tail:
            return cumulant_tempered(m.tempered_part(), xi);
        case MeasureVariant::composite: {
            double s = 0.0;
            for (const auto& p : m.parts()) {
                s += cumulant_measure_1d(p, xi);
                if (!std::isfinite(s)) return kInf;
            }
            return s;
        }
    }
    return 0.0;
}

double cumulant_tempered(const TemperedTailPart& tp, double xi) {
    const double axi = std::fabs(xi);
    const double beta = tp.beta;
    double total = 0.0;
    if (axi > 0.0) {
        // peak of xi*y - y^beta
        const double y0 = axi > beta ? std::pow(axi / beta, 1.0 / (beta - 1.0)) : 1.0;
        const double log_peak = axi * y0 - std::pow(y0, beta);
        if (log_peak > 705.0) return kInf;
        auto integrand = [&](double y) {
            return 2.0 * cosh_minus_one(axi * y) * std::exp(-std::pow(y, beta));
        };
        QuadResult q = integrate_upper_tail(integrand, 1.0, std::max(1.0, y0));
        total = q.value;
    }
    if (tp.core) {
        total += cumulant_measure_1d(*tp.core, xi);
    }
    return total;
}

// first and second xi-derivatives of the 1-D cumulant
double cumulant_deriv_measure(const LevyMeasure& m, double xi) {
    switch (m.variant()) {
        case MeasureVariant::discrete_atoms: {
            double s = 0.0;
            for (const auto& a : m.atom_list()) {
                s += a.location[0] * mass_sinh(a.mass, xi * a.location[0]);
                if (!std::isfinite(s)) return s;
            }
            return s;
        }
        case MeasureVariant::radial_density: {
            const double axi = std::fabs(xi);
            if (axi == 0.0) return 0.0;
            const auto& rp = m.radial_part();
            if (axi * rp.radius > 705.0) return xi > 0 ? kInf : -kInf;
            auto integrand = [&](double r) {
                return 2.0 * r * std::sinh(axi * r) * rp.density(r);
            };
            QuadResult q = integrate_singular_lower(integrand, 0.0, rp.radius);
            return xi > 0 ? q.value : -q.value;
        }
        case MeasureVariant::tempered_tail: {
            const auto& tp = m.tempered_part();
            const double axi = std::fabs(xi);
            double total = 0.0;
            if (axi > 0.0) {
                const double beta = tp.beta;
                const double y0 =
                    axi > beta ? std::pow(axi / beta, 1.0 / (beta - 1.0)) : 1.0;
                if (axi * y0 - std::pow(y0, beta) > 705.0) return xi > 0 ? kInf : -kInf;
                auto integrand = [&](double y) {
                    return 2.0 * y * std::sinh(axi * y) * std::exp(-std::pow(y, beta));
                };
                QuadResult q = integrate_upper_tail(integrand, 1.0, std::max(1.0, y0));
                total = xi > 0 ? q.value : -q.value;
            }
            if (tp.core) total += cumulant_deriv_measure(*tp.core, xi);
            return total;
        }
        case MeasureVariant::composite: {
            double s = 0.0;
            for (const auto& p : m.parts()) {
                s += cumulant_deriv_measure(p, xi);
                if (!std::isfinite(s)) return s;
            }
            return s;
        }
    }
    return 0.0;
}

double cumulant_second_measure(const LevyMeasure& m, double xi) {
    switch (m.variant()) {
        case MeasureVariant::discrete_atoms: {
            double s = 0.0;
            for (const auto& a : m.atom_list()) {
                const double y = a.location[0];
                s += y * y * (mass_cosh_minus_one(a.mass, xi * y) + a.mass);
                if (!std::isfinite(s)) return kInf;
            }
            return s;
        }
        case MeasureVariant::radial_density: {
            const auto& rp = m.radial_part();
            const double axi = std::fabs(xi);
            if (axi * rp.radius > 705.0) return kInf;
            auto integrand = [&](double r) {
                return 2.0 * r * r * std::cosh(axi * r) * rp.density(r);
            };
            QuadResult q = integrate_singular_lower(integrand, 0.0, rp.radius);
            return q.value;
        }
        case MeasureVariant::tempered_tail: {
            const auto& tp = m.tempered_part();
            const double axi = std::fabs(xi);
            const double beta = tp.beta;
            const double y0 = axi > beta ? std::pow(axi / beta, 1.0 / (beta - 1.0)) : 1.0;
            if (axi * y0 - std::pow(y0, beta) > 705.0) return kInf;
            auto integrand = [&](double y) {
                return 2.0 * y * y * std::cosh(axi * y) * std::exp(-std::pow(y, beta));
            };
            double total = integrate_upper_tail(integrand, 1.0, std::max(1.0, y0)).value;
            if (tp.core) total += cumulant_second_measure(*tp.core, xi);
            return total;
        }
        case MeasureVariant::composite: {
            double s = 0.0;
            for (const auto& p : m.parts()) {
                s += cumulant_second_measure(p, xi);
                if (!std::isfinite(s)) return kInf;
            }
            return s;
        }
    }
    return 0.0;
}

// ---- moments ----------------------------------------------------------------

void add_second_moment(const LevyMeasure& m, std::vector<double>& mat, bool& ok) {
    const int n = m.dim();
    switch (m.variant()) {
        case MeasureVariant::discrete_atoms: {
            for (const auto& a : m.atom_list())
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        mat[i * n + j] += a.mass * a.location[i] * a.location[j];
            return;
        }
        case MeasureVariant::radial_density: {
            const auto& rp = m.radial_part();
            auto integrand = [&](double r) {
                return std::pow(r, n + 1) * rp.density(r);
            };
            QuadResult q = integrate_singular_lower(integrand, 0.0, rp.radius);
            if (!q.converged || !std::isfinite(q.value)) {
                ok = false;
                return;
            }
            const double diag = sphere_factor(n) / n * q.value;
            for (int i = 0; i < n; ++i) mat[i * n + i] += diag;
            return;
        }
        case MeasureVariant::tempered_tail: {
            const auto& tp = m.tempered_part();
            auto integrand = [&](double y) {
                return 2.0 * y * y * std::exp(-std::pow(y, tp.beta));
            };
            QuadResult q = integrate_upper_tail(integrand, 1.0);
            if (!q.converged) ok = false;
            mat[0] += q.value;
            if (tp.core) add_second_moment(*tp.core, mat, ok);
            return;
        }
        case MeasureVariant::composite: {
            for (const auto& p : m.parts()) add_second_moment(p, mat, ok);
            return;
        }
    }
}

// int (1 and |y|^2) nu(dy); throws if the quadrature cannot resolve it
void check_integrability(const LevyMeasure& m) {
    switch (m.variant()) {
        case MeasureVariant::discrete_atoms:
            return;  // finite sums
        case MeasureVariant::radial_density: {
            const auto& rp = m.radial_part();
            const int n = m.dim();
            const double inner_lim = std::min(1.0, rp.radius);
            auto small = [&](double r) {
                return r * r * rp.density(r) * std::pow(r, n - 1);
            };
            QuadResult qs = integrate_singular_lower(small, 0.0, inner_lim);
            if (!qs.converged || !std::isfinite(qs.value))
                throw precondition_error(
                    "radial density violates (1 and |y|^2) integrability near 0");
            if (rp.radius > 1.0) {
                auto big = [&](double r) { return rp.density(r) * std::pow(r, n - 1); };
                QuadResult qb = integrate(big, 1.0, rp.radius);
                if (!std::isfinite(qb.value))
                    throw precondition_error("radial density not integrable away from 0");
            }
            return;
        }
        case MeasureVariant::tempered_tail: {
            if (m.tempered_part().core) check_integrability(*m.tempered_part().core);
            return;
        }
        case MeasureVariant::composite: {
            for (const auto& p : m.parts()) check_integrability(p);
            return;
        }
    }
}

double jump_integral_measure(const LevyMeasure& m,
                             const std::function<double(double)>& F) {
    switch (m.variant()) {
        case MeasureVariant::discrete_atoms: {
            double s = 0.0;
            for (const auto& a : m.atom_list()) s += a.mass * F(a.location[0]);
            return s;
        }
        case MeasureVariant::radial_density: {
            const auto& rp = m.radial_part();
            auto integrand = [&](double r) { return (F(r) + F(-r)) * rp.density(r); };
            return integrate_singular_lower(integrand, 0.0, rp.radius).value;
        }
        case MeasureVariant::tempered_tail: {
            const auto& tp = m.tempered_part();
            auto integrand = [&](double y) {
                return (F(y) + F(-y)) * std::exp(-std::pow(y, tp.beta));
            };
            double total = integrate_upper_tail(integrand, 1.0).value;
            if (tp.core) total += jump_integral_measure(*tp.core, F);
            return total;
        }
        case MeasureVariant::composite: {
            double s = 0.0;
            for (const auto& p : m.parts()) s += jump_integral_measure(p, F);
            return s;
        }
    }
    return 0.0;
}

// smallest eigenvalue of a symmetric dim x dim matrix (dim <= 3), by Jacobi
double min_eig_sym(std::vector<double> a, int n) {
    if (n == 1) return a[0];
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a[p * n + q]) < 1e-300) continue;
                const double theta = 0.5 * std::atan2(2.0 * a[p * n + q],
                                                      a[q * n + q] - a[p * n + p]);
                const double c = std::cos(theta), s = std::sin(theta);
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
    }
    double mn = a[0];
    for (int i = 1; i < n; ++i) mn = std::min(mn, a[i * n + i]);
    return mn;
}

double semi_stable_psi_sum(double alpha, double xi) {
    // direct ladder summation with relative cutoff at machine precision
    const double axi = std::fabs(xi);
    if (axi == 0.0) return 0.0;
    double sum = 0.0;
    for (int k = 0; k < 4096; ++k) {
        const double term =
            std::pow(2.0, alpha * k) * 2.0 * one_minus_cos(axi * std::ldexp(1.0, -k));
        sum += term;
        if (std::ldexp(1.0, -k) * axi < 1.0 && term < 1e-18 * sum) break;
    }
    return sum;
}

}  // namespace

const LevyMeasure& LevyModel::measure() const {
    if (!measure_) throw feature_error("model has no Levy measure (closed-form channel)");
    return *measure_;
}

double LevyModel::second_moment_min_eig() const {
    if (!has_second_moment_)
        throw feature_error("second moment matrix unavailable for this model");
    return min_eig_sym(second_moment_, dim_);
}

double LevyModel::psi(std::span<const double> xi) const {
    if (static_cast<int>(xi.size()) != dim_)
        throw invalid_input_error("xi has the wrong dimension");
    for (double c : xi)
        if (!std::isfinite(c)) throw invalid_input_error("xi must be finite");
    switch (closed_form_) {
        case ClosedForm::gaussian:
            return dot(xi, xi);
        case ClosedForm::stable:
            return std::pow(norm(xi), cf_alpha_);
        case ClosedForm::semi_stable:
            return semi_stable_psi_sum(cf_alpha_, norm(xi));
        case ClosedForm::none:
            break;
    }
    return psi_measure(*measure_, xi);
}

double LevyModel::psi(double xi) const {
    const double x[1] = {xi};
    return psi(std::span<const double>(x, 1));
}

double LevyModel::cumulant(std::span<const double> xi) const {
    if (closed_form_ == ClosedForm::gaussian) return dot(xi, xi);
    if (!has_exp_moments_)
        throw feature_error(
            "cumulant requires exponential moments: int_{|y|>=1} e^{a.y} nu(dy) "
            "must be finite for every a");
    if (dim_ == 1) return cumulant_measure_1d(*measure_, xi[0]);
    if (measure_->variant() == MeasureVariant::discrete_atoms)
        return cumulant_atoms(measure_->atom_list(), xi);
    throw feature_error("cumulant for density measures is one-dimensional");
}

double LevyModel::cumulant(double xi) const {
    const double x[1] = {xi};
    return cumulant(std::span<const double>(x, 1));
}

std::vector<double> LevyModel::cumulant_grad(std::span<const double> xi) const {
    std::vector<double> g(dim_, 0.0);
    if (closed_form_ == ClosedForm::gaussian) {
        for (int i = 0; i < dim_; ++i) g[i] = 2.0 * xi[i];
        return g;
    }
    if (!has_exp_moments_)
        throw feature_error("cumulant gradient requires exponential moments");
    if (dim_ == 1) {
        g[0] = cumulant_deriv_measure(*measure_, xi[0]);
        return g;
    }
    if (measure_->variant() == MeasureVariant::discrete_atoms) {
        for (const auto& a : measure_->atom_list()) {
            const double s = mass_sinh(a.mass, dot(a.location, xi));
            for (int i = 0; i < dim_; ++i) g[i] += a.location[i] * s;
        }
        return g;
    }
    throw feature_error("cumulant gradient for density measures is one-dimensional");
}

std::vector<double> LevyModel::cumulant_hess(std::span<const double> xi) const {
    std::vector<double> h(static_cast<std::size_t>(dim_) * dim_, 0.0);
    if (closed_form_ == ClosedForm::gaussian) {
        for (int i = 0; i < dim_; ++i) h[i * dim_ + i] = 2.0;
        return h;
    }
    if (!has_exp_moments_)
        throw feature_error("cumulant Hessian requires exponential moments");
    if (dim_ == 1) {
        h[0] = cumulant_second_measure(*measure_, xi[0]);
        return h;
    }
    if (measure_->variant() == MeasureVariant::discrete_atoms) {
        for (const auto& a : measure_->atom_list()) {
            const double u = dot(a.location, xi);
            const double c = mass_cosh_minus_one(a.mass, u) + a.mass;
            for (int i = 0; i < dim_; ++i)
                for (int j = 0; j < dim_; ++j)
                    h[i * dim_ + j] += a.location[i] * a.location[j] * c;
        }
        return h;
    }
    throw feature_error("cumulant Hessian for density measures is one-dimensional");
}

double LevyModel::cumulant_deriv(double xi) const {
    if (closed_form_ == ClosedForm::gaussian) return 2.0 * xi;
    if (!has_exp_moments_)
        throw feature_error("cumulant derivative requires exponential moments");
    return cumulant_deriv_measure(*measure_, xi);
}

double LevyModel::cumulant_second_deriv(double xi) const {
    if (closed_form_ == ClosedForm::gaussian) return 2.0;
    if (!has_exp_moments_)
        throw feature_error("cumulant derivative requires exponential moments");
    return cumulant_second_measure(*measure_, xi);
}

double LevyModel::gamma_op(const std::function<double(double)>& u, double x) const {
    if (dim_ != 1) throw feature_error("gamma_op is one-dimensional");
    const double ux = u(x);
    return 0.5 * jump_integral([&](double y) {
        const double d = u(x + y) - ux;
        return d * d;
    });
}

double LevyModel::jump_integral(const std::function<double(double)>& F) const {
    if (!measure_) throw feature_error("no measure to integrate against");
    if (dim_ != 1) throw feature_error("jump_integral is one-dimensional");
    return jump_integral_measure(*measure_, F);
}

std::string LevyModel::describe() const {
    std::ostringstream os;
    switch (closed_form_) {
        case ClosedForm::gaussian:
            os << "closed_form(gaussian)";
            break;
        case ClosedForm::stable:
            os << "closed_form(stable," << cf_alpha_ << ")";
            break;
        case ClosedForm::semi_stable:
            os << "closed_form(semi_stable," << cf_alpha_ << ")";
            break;
        case ClosedForm::none:
            os << measure_->describe();
            break;
    }
    os << " dim=" << dim_;
    return os.str();
}

LevyModel LevyModel::from_measure(LevyMeasure m) {
    check_integrability(m);
    LevyModel model;
    model.dim_ = m.dim();
    model.has_exp_moments_ = check_exp_moments(m);
    model.second_moment_.assign(static_cast<std::size_t>(m.dim()) * m.dim(), 0.0);
    bool moment_ok = true;
    add_second_moment(m, model.second_moment_, moment_ok);
    model.has_second_moment_ = moment_ok;
    model.measure_ = std::move(m);
    model.hartman_wintner_ok_ = check_hartman_wintner(model, model.dim_);
    return model;
}

LevyModel LevyModel::gaussian_channel(int dim) {
    LevyModel model;
    model.dim_ = dim;
    model.closed_form_ = ClosedForm::gaussian;
    model.has_exp_moments_ = true;
    model.hartman_wintner_ok_ = true;
    model.has_second_moment_ = true;
    // Lambda''(0) = 2 I plays the role of the second moment matrix
    model.second_moment_.assign(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) model.second_moment_[i * dim + i] = 2.0;
    return model;
}

LevyModel LevyModel::stable_channel(double alpha, int dim) {
    if (!(alpha > 0.0) || !(alpha <= 2.0))
        throw precondition_error("stable exponent needs alpha in (0,2]");
    LevyModel model;
    model.dim_ = dim;
    model.closed_form_ = ClosedForm::stable;
    model.cf_alpha_ = alpha;
    model.has_exp_moments_ = false;
    model.hartman_wintner_ok_ = true;
    model.has_second_moment_ = false;
    return model;
}

LevyModel LevyModel::semi_stable_channel(double alpha, int dim) {
    if (dim != 1) throw feature_error("semi-stable channel is one-dimensional");
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw precondition_error("semi-stable exponent needs alpha in (0,2)");
    LevyModel model;
    model.dim_ = 1;
    model.closed_form_ = ClosedForm::semi_stable;
    model.cf_alpha_ = alpha;
    model.has_exp_moments_ = false;  // oracle channel carries no measure
    model.hartman_wintner_ok_ = true;
    model.has_second_moment_ = false;
    return model;
}

bool check_hartman_wintner(const LevyModel& m, double C, double cap) {
    const int n = m.dim();
    std::vector<std::vector<double>> dirs;
    for (int i = 0; i < n; ++i) {
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        dirs.push_back(e);
    }
    if (n > 1) {
        std::vector<double> diag(n, 1.0 / std::sqrt(static_cast<double>(n)));
        dirs.push_back(diag);
    }
    int K = 0;
    while (std::ldexp(1.0, K + 1) <= cap) ++K;
    double running_min = kInf;
    for (int k = K / 2; k <= K; ++k) {
        const double rho = std::ldexp(1.0, k);
        for (const auto& e : dirs) {
            std::vector<double> xi(e);
            for (double& c : xi) c *= rho;
            const double ratio = m.psi(xi) / std::log1p(rho);
            running_min = std::min(running_min, ratio);
        }
    }
    return running_min > C;
}

}  // namespace levykit
