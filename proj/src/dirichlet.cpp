#include "levykit/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "levykit/errors.hpp"
#include "levykit/fft.hpp"

namespace levykit {

namespace {

double eval_kind(TestFnKind kind, double center, double width, double x) {
    const double s = (x - center) / width;
    switch (kind) {
        case TestFnKind::gaussian:
            return std::exp(-0.5 * s * s);
        case TestFnKind::bump: {
            if (std::fabs(s) >= 1.0) return 0.0;
            return std::exp(-1.0 / (1.0 - s * s));
        }
        case TestFnKind::hat:
            return std::max(0.0, 1.0 - std::fabs(s));
    }
    return 0.0;
}

}  // namespace

TestFunction::TestFunction(TestFnKind kind, double center, double width,
                           const GridSpec& grid)
    : kind_(kind), center_(center), width_(width), n_(grid.nodes),
      half_width_(grid.half_width) {
    if (n_ < 16 || (n_ & (n_ - 1)) != 0)
        throw invalid_input_error("grid nodes must be a power of two >= 16");
    if (!(width > 0.0)) throw invalid_input_error("width must be positive");
    h_ = 2.0 * half_width_ / n_;
    samples_.resize(n_);
    for (int j = 0; j < n_; ++j) samples_[j] = (*this)(node(j));

    for (double v : samples_) {
        l1_ += std::fabs(v) * h_;
        l2sq_ += v * v * h_;
    }
    edge_resolved_ = std::fabs((*this)(-half_width_)) < 1e-12 &&
                     std::fabs((*this)(half_width_ - h_)) < 1e-12;

    // plain transform with the phase of the physical node positions
    std::vector<std::complex<double>> work(n_);
    for (int j = 0; j < n_; ++j) work[j] = samples_[j];
    fft::dft(work, false);
    spectrum_.resize(n_);
    for (int k = 0; k < n_; ++k) {
        const double phase = frequency(k) * half_width_;
        spectrum_[k] = h_ * std::polar(1.0, phase) * work[k];
    }
}

double TestFunction::operator()(double x) const {
    return eval_kind(kind_, center_, width_, x);
}

double TestFunction::frequency(int k) const {
    const int signed_k = k <= n_ / 2 ? k : k - n_;
    return signed_k * M_PI / half_width_;
}

double TestFunction::spectrum_roundtrip_error() const {
    std::vector<std::complex<double>> work(n_);
    for (int k = 0; k < n_; ++k) {
        const double phase = frequency(k) * half_width_;
        work[k] = spectrum_[k] / (h_ * std::polar(1.0, phase));
    }
    fft::dft(work, true);
    double worst = 0.0;
    for (int j = 0; j < n_; ++j)
        worst = std::max(worst, std::abs(work[j] / static_cast<double>(n_) -
                                         std::complex<double>(samples_[j])));
    return worst;
}

std::string TestFunction::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case TestFnKind::gaussian: os << "gaussian"; break;
        case TestFnKind::bump: os << "bump"; break;
        case TestFnKind::hat: os << "hat"; break;
    }
    os << "(" << center_ << "," << width_ << ")";
    return os.str();
}

FormResult form_spectral(const LevyModel& model, const TestFunction& u, Exec exec) {
    if (model.dim() != 1) throw feature_error("forms are one-dimensional");
    const int n = u.nodes();
    const double dxi = M_PI / u.half_width();

    // psi is even: evaluate on |frequency| once
    std::vector<double> psi_abs(n / 2 + 1);
    parallel_for(
        psi_abs.size(),
        [&](std::size_t k) { psi_abs[k] = model.psi(static_cast<double>(k) * dxi); },
        exec);

    const auto& spec = u.spectrum();
    double total = chunked_sum(
        n,
        [&](std::size_t k) {
            const int idx = static_cast<int>(k) <= n / 2 ? static_cast<int>(k)
                                                         : n - static_cast<int>(k);
            return psi_abs[idx] * std::norm(spec[k]);
        },
        exec);
    // (2 pi)^{-1} turns the plain transform into the representation-equating
    // normalization
    total *= dxi / (2.0 * M_PI);

    double tail = chunked_sum(
        n,
        [&](std::size_t k) {
            const int idx = static_cast<int>(k) <= n / 2 ? static_cast<int>(k)
                                                         : n - static_cast<int>(k);
            if (idx < (9 * (n / 2)) / 10) return 0.0;
            return psi_abs[idx] * std::norm(spec[k]);
        },
        exec);

    FormResult res;
    res.value = total;
    res.tail_fraction = total > 0.0 ? tail * dxi / (2.0 * M_PI) / total : 0.0;
    res.tail_resolved = res.tail_fraction < 1e-8;
    return res;
}

FormResult form_difference(const LevyModel& model, const TestFunction& u, Exec exec) {
    if (model.dim() != 1) throw feature_error("forms are one-dimensional");
    const auto var = model.measure().variant();
    if (var != MeasureVariant::discrete_atoms && var != MeasureVariant::radial_density)
        throw feature_error(
            "difference form needs a discrete-atom or radial-density measure");

    const int n = u.nodes();
    const double h = u.spacing();
    double value = 0.5 * h *
                   chunked_sum(
                       n,
                       [&](std::size_t j) {
                           const double x = u.node(static_cast<int>(j));
                           const double ux = u(x);
                           return model.jump_integral([&](double y) {
                               const double d = u(x + y) - ux;
                               return d * d;
                           });
                       },
                       exec);

    FormResult res;
    res.value = value;
    const double reach = model.measure().support_radius();
    res.support_resolved =
        std::fabs(u(-u.half_width() - reach)) < 1e-12 &&
        std::fabs(u(u.half_width() + reach)) < 1e-12 && u.edge_resolved();
    return res;
}

double bilinear_difference(const LevyModel& model,
                           const std::function<double(double)>& a,
                           const std::function<double(double)>& b,
                           const GridSpec& spec, Exec exec) {
    const double h = 2.0 * spec.half_width / spec.nodes;
    return 0.5 * h *
           chunked_sum(
               spec.nodes,
               [&](std::size_t j) {
                   const double x = -spec.half_width + h * static_cast<double>(j);
                   const double ax = a(x), bx = b(x);
                   return model.jump_integral([&](double y) {
                       return (a(x + y) - ax) * (b(x + y) - bx);
                   });
               },
               exec);
}

double cdc_identity_residual(const LevyModel& model, const TestFunction& f,
                             const TestFunction& h, Exec exec) {
    GridSpec spec{f.nodes(), f.half_width()};
    auto ff = [&](double x) { return f(x); };
    auto hh = [&](double x) { return h(x); };
    auto fh = [&](double x) { return f(x) * h(x); };
    auto f2 = [&](double x) { return f(x) * f(x); };

    const double e_fh_f = bilinear_difference(model, fh, ff, spec, exec);
    const double e_h_f2 = bilinear_difference(model, hh, f2, spec, exec);

    const double hs = 2.0 * spec.half_width / spec.nodes;
    const double integral = hs * chunked_sum(
                                     spec.nodes,
                                     [&](std::size_t j) {
                                         const double x = -spec.half_width +
                                                          hs * static_cast<double>(j);
                                         return h(x) * model.gamma_op(ff, x);
                                     },
                                     exec);
    // with Gamma = (1/2) int (Du)^2 nu the polarized identity reads
    // 2 E(fh,f) - E(h,f^2) = 2 int h Gamma(f,f) dm
    return std::fabs(2.0 * e_fh_f - e_h_f2 - 2.0 * integral);
}

NashReport nash_check(const LevyModel& model, const BernsteinFn& f, double delta,
                      const std::vector<TestFunction>& family, Exec exec) {
    if (delta < 0.0) throw invalid_input_error("delta must be nonnegative");
    NashReport report;
    report.delta = delta;
    const double n = static_cast<double>(model.dim());
    for (const auto& u : family) {
        NashRow row;
        row.id = u.describe();
        row.l1 = u.l1_norm();
        row.l2 = std::sqrt(u.l2_norm_sq());
        if (!(row.l2 > 0.0)) {
            row.excluded = true;
            report.rows.push_back(row);
            continue;
        }
        row.form = form_spectral(model, u, exec).value;
        row.lhs = u.l2_norm_sq() * f(std::pow(row.l2 / row.l1, 4.0 / n));
        row.rhs0 = row.form + delta * u.l2_norm_sq();
        if (!(row.rhs0 > 0.0)) {
            row.counterexample = row.lhs > 0.0;
            report.rows.push_back(row);
            continue;
        }
        row.c0 = row.lhs / row.rhs0;
        report.worst_c0 = std::max(report.worst_c0, row.c0);
        report.rows.push_back(row);
    }
    report.finite = std::isfinite(report.worst_c0) && report.worst_c0 > 0.0;
    return report;
}

std::vector<TestFunction> default_nash_family(const GridSpec& spec) {
    std::vector<TestFunction> family;
    family.emplace_back(TestFnKind::gaussian, 0.0, 0.5, spec);
    family.emplace_back(TestFnKind::gaussian, 0.0, 1.0, spec);
    family.emplace_back(TestFnKind::gaussian, 0.0, 2.0, spec);
    family.emplace_back(TestFnKind::gaussian, 1.5, 0.7, spec);
    family.emplace_back(TestFnKind::gaussian, -2.0, 1.2, spec);
    family.emplace_back(TestFnKind::gaussian, 3.0, 0.6, spec);
    family.emplace_back(TestFnKind::bump, 0.0, 1.0, spec);
    family.emplace_back(TestFnKind::bump, 0.0, 3.0, spec);
    family.emplace_back(TestFnKind::bump, 1.0, 2.0, spec);
    family.emplace_back(TestFnKind::bump, -1.5, 2.5, spec);
    family.emplace_back(TestFnKind::bump, 2.0, 1.5, spec);
    family.emplace_back(TestFnKind::bump, 0.5, 2.0, spec);
    return family;
}

}  // namespace levykit
