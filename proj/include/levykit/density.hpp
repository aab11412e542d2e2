#pragma once

#include <vector>

#include "levykit/model.hpp"
#include "levykit/parallel.hpp"

namespace levykit {

struct DensityGridParams {
    int min_log2_nodes = 14;
    int max_log2_nodes = 20;
    /// e^{-t psi} must fall below this at the frequency boundary.
    double tail_threshold = 1e-16;
    /// When > 0, the frequency extent is rounded up so that the spatial step
    /// divides `align` exactly; grid nodes then land on multiples of align.
    double align = 0.25;
    /// The spatial half width is grown (more nodes) until it reaches this.
    double min_half_width = 0.0;
    /// Nodes double (up to the cap) while |p| at the spatial edge exceeds
    /// this; controls periodization error for heavy-tailed laws.
    double edge_threshold = 1e-10;
    Exec exec = default_exec();
};

/// Transition density values on a uniform spatial grid, from the Fourier
/// inversion of e^{-t psi} on the conjugate frequency grid.
struct DensityGrid {
    double t = 0.0;
    int dim = 1;
    double dx = 0.0;
    double half_width = 0.0;        // grid covers [-L, L)
    double frequency_extent = 0.0;  // Xi
    int nodes = 0;                  // M

    std::vector<double> x;  // ascending
    std::vector<double> p;

    // diagnostics
    double mass = 0.0;
    double min_value = 0.0;
    double freq_tail_mass = 0.0;  // share of e^{-t psi} mass in the top 10% band
    double edge_value = 0.0;
    int clamped_negatives = 0;

    bool has_node(double xq) const;
    /// Value at an exact grid node; throws invalid_input_error otherwise.
    double value_at(double xq) const;
    std::size_t index_of(double xq) const;
};

DensityGrid density_grid(const LevyModel& model, double t,
                         const DensityGridParams& params = {});

/// Single-point inversion by oscillatory panel quadrature, independent of the
/// grid path.
double density_at(const LevyModel& model, double t, double x);

/// sup-norm of p_{t+s} - p_t * p_s with the convolution done on the shared
/// grid of the three densities.
double semigroup_check(const LevyModel& model, double t, double s,
                       const DensityGridParams& params = {});

/// Minimal 2-D grid (tensor frequency grid, full complex transform).
struct DensityGrid2d {
    double t = 0.0;
    double dx = 0.0;
    int nodes = 0;
    std::vector<double> p;  // row-major nodes x nodes, index (ix, iy)
    double mass = 0.0;
    double value_at(double x0, double x1) const;
    double half_width = 0.0;
};

DensityGrid2d density_grid_2d(const LevyModel& model, double t, int log2_nodes = 10,
                              double tail_threshold = 1e-16);

}  // namespace levykit
