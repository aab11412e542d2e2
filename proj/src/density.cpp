#include "levykit/density.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "levykit/errors.hpp"
#include "levykit/fft.hpp"
#include "levykit/quadrature.hpp"

namespace levykit {

namespace {

// Existence gate: e^{-t psi} must be integrable. Bounded exponents (compound
// Poisson) keep an atom at the origin and have no density.
void require_density_exists(const LevyModel& model, double t) {
    if (!(t > 0.0)) throw invalid_input_error("time must be positive");
    if (model.closed_form() != ClosedForm::none) return;
    const double needed = model.dim() / t;
    if (!check_hartman_wintner(model, needed)) {
        std::ostringstream os;
        os << "no transition density at t = " << t
           << ": Hartman-Wintner check psi(xi)/log(1+|xi|) > " << needed
           << " fails on the test grid (bounded or too-slowly-growing exponent)";
        throw numeric_error(os.str());
    }
}

double frequency_extent(const LevyModel& model, double t, double tail_threshold,
                        double align) {
    double xi = 1.0;
    int guard = 0;
    while (std::exp(-t * model.psi(xi)) > tail_threshold) {
        xi *= 2.0;
        if (++guard > 60)
            throw numeric_error("frequency tail of e^{-t psi} does not decay");
    }
    if (align > 0.0) xi = std::ceil(xi * align / M_PI) * M_PI / align;
    return xi;
}

// j-ordered periodic density values: p[j] at x = j*dx (mod 2L)
std::vector<double> raw_density(const LevyModel& model, double t, double xi_max,
                                std::size_t m, Exec exec) {
    const double dxi = 2.0 * xi_max / static_cast<double>(m);
    std::vector<double> spectrum(m / 2 + 1);
    parallel_for(
        m / 2 + 1,
        [&](std::size_t k) {
            spectrum[k] = std::exp(-t * model.psi(static_cast<double>(k) * dxi));
        },
        exec);
    std::vector<double> p = fft::even_spectrum_synthesis(spectrum);
    const double scale = dxi / (2.0 * M_PI);
    for (double& v : p) v *= scale;
    return p;
}

double spectrum_tail_share(const LevyModel& model, double t, double xi_max,
                           std::size_t m) {
    // cheap re-evaluation on a coarse subgrid; only used as a diagnostic
    const double dxi = 2.0 * xi_max / static_cast<double>(m);
    const std::size_t half = m / 2;
    double total = 0.0, tail = 0.0;
    const std::size_t step = std::max<std::size_t>(1, half / 256);
    for (std::size_t k = 0; k <= half; k += step) {
        const double v = std::exp(-t * model.psi(static_cast<double>(k) * dxi));
        total += v;
        if (k >= (9 * half) / 10) tail += v;
    }
    return total > 0.0 ? tail / total : 0.0;
}

}  // namespace

bool DensityGrid::has_node(double xq) const {
    if (x.empty()) return false;
    const double pos = (xq - x.front()) / dx;
    const double nearest = std::round(pos);
    if (nearest < 0 || nearest >= static_cast<double>(x.size())) return false;
    return std::fabs(pos - nearest) <= 1e-9 * std::max(1.0, std::fabs(xq) / dx);
}

std::size_t DensityGrid::index_of(double xq) const {
    if (!has_node(xq)) {
        std::ostringstream os;
        os << "x = " << xq << " is not a grid node (dx = " << dx << ")";
        throw invalid_input_error(os.str());
    }
    return static_cast<std::size_t>(std::llround((xq - x.front()) / dx));
}

double DensityGrid::value_at(double xq) const { return p[index_of(xq)]; }

DensityGrid density_grid(const LevyModel& model, double t,
                         const DensityGridParams& params) {
    if (model.dim() != 1)
        throw feature_error("density_grid is one-dimensional; use density_grid_2d");
    require_density_exists(model, t);

    const double xi_max =
        frequency_extent(model, t, params.tail_threshold, params.align);

    std::size_t m = std::size_t{1} << params.min_log2_nodes;
    const std::size_t m_cap = std::size_t{1} << params.max_log2_nodes;
    while (M_PI * static_cast<double>(m) / (2.0 * xi_max) < params.min_half_width &&
           m < m_cap)
        m *= 2;

    std::vector<double> raw;
    for (;;) {
        raw = raw_density(model, t, xi_max, m, params.exec);
        const double edge = std::fabs(raw[m / 2]);
        if (edge <= params.edge_threshold || m >= m_cap) break;
        m *= 2;
    }

    DensityGrid grid;
    grid.t = t;
    grid.dim = 1;
    grid.nodes = static_cast<int>(m);
    grid.frequency_extent = xi_max;
    const double dxi = 2.0 * xi_max / static_cast<double>(m);
    grid.dx = 2.0 * M_PI / (static_cast<double>(m) * dxi);
    grid.half_width = 0.5 * static_cast<double>(m) * grid.dx;
    grid.edge_value = std::fabs(raw[m / 2]);

    grid.x.resize(m);
    grid.p.resize(m);
    const long half = static_cast<long>(m / 2);
    for (long idx = 0; idx < static_cast<long>(m); ++idx) {
        const long j_phys = idx - half;
        grid.x[idx] = static_cast<double>(j_phys) * grid.dx;
        grid.p[idx] = raw[(j_phys + static_cast<long>(m)) % static_cast<long>(m)];
    }

    grid.min_value = *std::min_element(grid.p.begin(), grid.p.end());
    if (grid.min_value < -1e-9) {
        std::ostringstream os;
        os << "density inversion rings below tolerance: min value " << grid.min_value;
        throw numeric_error(os.str());
    }
    for (double& v : grid.p)
        if (v < 0.0) {
            v = 0.0;
            ++grid.clamped_negatives;
        }
    double mass = 0.0;
    for (double v : grid.p) mass += v;
    grid.mass = mass * grid.dx;
    grid.freq_tail_mass = spectrum_tail_share(model, t, xi_max, m);
    return grid;
}

double density_at(const LevyModel& model, double t, double x) {
    require_density_exists(model, t);
    const double xi_max = frequency_extent(model, t, 1e-18, 0.0);
    const double ax = std::fabs(x);
    auto envelope = [&](double xi) { return std::exp(-t * model.psi(xi)); };
    QuadResult q;
    if (ax * xi_max > 512.0 * M_PI) {
        q = filon_cos(envelope, 0.0, xi_max, ax, 1e-12, 1e-10);
    } else {
        auto integrand = [&](double xi) { return std::cos(xi * x) * envelope(xi); };
        q = ax * xi_max > M_PI
                ? integrate_oscillatory(integrand, 0.0, xi_max, ax, 1e-12, 1e-10)
                : integrate(integrand, 0.0, xi_max, 1e-12, 1e-10);
    }
    return q.value / M_PI;
}

double semigroup_check(const LevyModel& model, double t, double s,
                       const DensityGridParams& params) {
    require_density_exists(model, std::min(t, s));
    // shared grid sized for the longest horizon but resolving the shortest
    const double xi_max =
        frequency_extent(model, std::min(t, s), params.tail_threshold, params.align);
    const std::size_t m = std::size_t{1} << params.min_log2_nodes;

    std::vector<double> pts = raw_density(model, t + s, xi_max, m, params.exec);
    std::vector<double> pt = raw_density(model, t, xi_max, m, params.exec);
    std::vector<double> ps = raw_density(model, s, xi_max, m, params.exec);

    std::vector<std::complex<double>> ft(m), fs(m);
    for (std::size_t j = 0; j < m; ++j) {
        ft[j] = pt[j];
        fs[j] = ps[j];
    }
    fft::dft(ft, false);
    fft::dft(fs, false);
    for (std::size_t j = 0; j < m; ++j) ft[j] *= fs[j];
    fft::dft(ft, true);
    const double dx = 2.0 * M_PI / (static_cast<double>(m) * 2.0 * xi_max /
                                    static_cast<double>(m));

    double worst = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double conv = ft[j].real() / static_cast<double>(m) * dx;
        worst = std::max(worst, std::fabs(pts[j] - conv));
    }
    return worst;
}

double DensityGrid2d::value_at(double x0, double x1) const {
    const double i0 = std::round((x0 + half_width) / dx);
    const double i1 = std::round((x1 + half_width) / dx);
    if (i0 < 0 || i1 < 0 || i0 >= nodes || i1 >= nodes)
        throw invalid_input_error("point outside 2-D grid");
    return p[static_cast<std::size_t>(i0) * nodes + static_cast<std::size_t>(i1)];
}

DensityGrid2d density_grid_2d(const LevyModel& model, double t, int log2_nodes,
                              double tail_threshold) {
    if (model.dim() != 2) throw feature_error("density_grid_2d needs a 2-D model");
    require_density_exists(model, t);
    double xi_max = 1.0;
    {
        std::vector<double> probe{1.0, 0.0};
        int guard = 0;
        while (std::exp(-t * model.psi(probe)) > tail_threshold) {
            probe[0] *= 2.0;
            if (++guard > 50) throw numeric_error("2-D frequency tail does not decay");
        }
        xi_max = probe[0];
    }
    const std::size_t m = std::size_t{1} << log2_nodes;
    const double dxi = 2.0 * xi_max / static_cast<double>(m);

    std::vector<std::complex<double>> f(m * m);
    parallel_for(m, [&](std::size_t a) {
        const double f0 =
            (a <= m / 2 ? static_cast<double>(a) : static_cast<double>(a) - m) * dxi;
        for (std::size_t b = 0; b < m; ++b) {
            const double f1 =
                (b <= m / 2 ? static_cast<double>(b) : static_cast<double>(b) - m) * dxi;
            std::vector<double> xi{f0, f1};
            f[a * m + b] = std::exp(-t * model.psi(xi));
        }
    });
    fft::dft2(f, static_cast<int>(m), true);

    DensityGrid2d grid;
    grid.t = t;
    grid.nodes = static_cast<int>(m);
    grid.dx = 2.0 * M_PI / (static_cast<double>(m) * dxi);
    grid.half_width = 0.5 * static_cast<double>(m) * grid.dx;
    grid.p.resize(m * m);
    const double scale = dxi * dxi / (4.0 * M_PI * M_PI);
    const long half = static_cast<long>(m / 2);
    for (long i0 = 0; i0 < static_cast<long>(m); ++i0)
        for (long i1 = 0; i1 < static_cast<long>(m); ++i1) {
            const long a = (i0 - half + static_cast<long>(m)) % static_cast<long>(m);
            const long b = (i1 - half + static_cast<long>(m)) % static_cast<long>(m);
            grid.p[i0 * static_cast<long>(m) + i1] = f[a * static_cast<long>(m) + b].real() * scale;
        }
    double mass = 0.0;
    for (double v : grid.p) mass += v;
    grid.mass = mass * grid.dx * grid.dx;
    return grid;
}

}  // namespace levykit
