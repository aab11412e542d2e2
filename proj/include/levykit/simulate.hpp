#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "levykit/density.hpp"
#include "levykit/model.hpp"
#include "levykit/parallel.hpp"

namespace levykit {

enum class Compensation { none, gaussian };

/// A reproducible sampling job for increments X_t of a 1-D model.
struct SamplePlan {
    explicit SamplePlan(LevyModel m) : model(std::move(m)) {}

    LevyModel model;
    double t = 1.0;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    /// Jumps below this size are dropped (none) or replaced by a centred
    /// gaussian with the matching variance t int_{|y|<eps} y^2 nu(dy).
    double epsilon = 0.0;
    Compensation compensation = Compensation::gaussian;
};

/// Draws plan.count independent increments. Deterministic per (seed, count):
/// the index space is cut into fixed chunks, chunk c uses the RNG stream
/// (seed, c), and results land in preassigned slots, so serial and OpenMP
/// runs are byte-identical.
std::vector<double> sample_increments(const SamplePlan& plan,
                                      Exec exec = default_exec());

struct EmpiricalComparison {
    double ks_distance = 0.0;
    double sup_density_gap = 0.0;  // histogram with the grid's bin width vs p
    std::size_t count = 0;
};

/// Kolmogorov-Smirnov distance between the empirical law of the samples and
/// the CDF integrated from the Fourier density grid.
EmpiricalComparison empirical_vs_fourier(const SamplePlan& plan,
                                         const DensityGrid& grid,
                                         Exec exec = default_exec());

/// Samples as little-endian 64-bit floats plus a JSON sidecar
/// {seed, count, t, epsilon, model}.
void write_samples(const std::string& path, const SamplePlan& plan,
                   const std::vector<double>& samples);

}  // namespace levykit
