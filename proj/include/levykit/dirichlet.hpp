#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "levykit/bernstein.hpp"
#include "levykit/model.hpp"
#include "levykit/parallel.hpp"

namespace levykit {

enum class TestFnKind { gaussian, bump, hat };

struct GridSpec {
    int nodes = 4096;
    double half_width = 16.0;  // domain [-L, L)
};

/// A test function known in closed form, sampled on a uniform grid together
/// with its discrete Fourier coefficients (plain transform, trapezoid
/// weights).
class TestFunction {
public:
    TestFunction(TestFnKind kind, double center, double width,
                 const GridSpec& grid = {});

    double operator()(double x) const;  // analytic evaluation
    TestFnKind kind() const { return kind_; }
    double center() const { return center_; }
    double width() const { return width_; }

    int nodes() const { return n_; }
    double spacing() const { return h_; }
    double half_width() const { return half_width_; }
    double node(int j) const { return -half_width_ + h_ * j; }
    const std::vector<double>& samples() const { return samples_; }

    /// ~u(xi_k) = h sum_j u(x_j) e^{-i x_j xi_k}; index k corresponds to the
    /// frequency (k <= N/2 ? k : k - N) * pi / L.
    const std::vector<std::complex<double>>& spectrum() const { return spectrum_; }
    double frequency(int k) const;

    double l1_norm() const { return l1_; }
    double l2_norm_sq() const { return l2sq_; }
    /// max |samples - inverse transform of the spectrum| (consistency).
    double spectrum_roundtrip_error() const;

    /// True when the function decays below 1e-12 at the grid edges.
    bool edge_resolved() const { return edge_resolved_; }

    std::string describe() const;

private:
    TestFnKind kind_;
    double center_, width_;
    int n_;
    double h_, half_width_;
    std::vector<double> samples_;
    std::vector<std::complex<double>> spectrum_;
    double l1_ = 0.0, l2sq_ = 0.0;
    bool edge_resolved_ = true;
};

struct FormResult {
    double value = 0.0;
    bool tail_resolved = true;  // psi |u^|^2 tail below 1e-8 of the total
    double tail_fraction = 0.0;
    bool support_resolved = true;  // difference path: no edge leakage
};

/// int psi(xi) |u^(xi)|^2 dxi over the frequency grid, in the normalization
/// that makes it equal to the difference representation.
FormResult form_spectral(const LevyModel& model, const TestFunction& u,
                         Exec exec = default_exec());

/// 1/2 int int (u(x+y)-u(x))^2 nu(dy) dx on the grid, u evaluated in closed
/// form at the shifted points.
FormResult form_difference(const LevyModel& model, const TestFunction& u,
                           Exec exec = default_exec());

/// Bilinear difference form 1/2 int int (a(x+y)-a(x))(b(x+y)-b(x)) nu dy dx
/// for arbitrary callables on the grid of `spec`.
double bilinear_difference(const LevyModel& model,
                           const std::function<double(double)>& a,
                           const std::function<double(double)>& b,
                           const GridSpec& spec, Exec exec = default_exec());

/// Residual of the carre du champ identity, |2 E(fh,f) - E(h,f^2) -
/// 2 int h Gamma(f,f) dx|; the factor 2 on the integral pairs with the 1/2 in
/// this Gamma normalization (the one that makes Gamma(e^{xi.}, e^{-xi.})
/// evaluate to -Lambda).
double cdc_identity_residual(const LevyModel& model, const TestFunction& f,
                             const TestFunction& h, Exec exec = default_exec());

struct NashRow {
    std::string id;
    double l1 = 0.0, l2 = 0.0;
    double form = 0.0;
    double lhs = 0.0, rhs0 = 0.0;
    double c0 = 0.0;
    bool excluded = false;      // zero function
    bool counterexample = false;  // rhs0 == 0 with lhs > 0 (must not happen)
};

struct NashReport {
    std::vector<NashRow> rows;
    double worst_c0 = 0.0;
    double delta = 0.0;
    bool finite = false;
};

/// Empirical Nash inequality check: per function u the ratio
/// C0(u) = ||u||_2^2 f((||u||_2/||u||_1)^{4/n}) / (E(u,u) + delta ||u||_2^2).
NashReport nash_check(const LevyModel& model, const BernsteinFn& f, double delta,
                      const std::vector<TestFunction>& family,
                      Exec exec = default_exec());

/// The 12-function default family (gaussians and bumps of varied centers and
/// widths) used by the verification suite.
std::vector<TestFunction> default_nash_family(const GridSpec& spec = {});

}  // namespace levykit
