// Serial vs OpenMP timing for the data-parallel kernels: exponent-table fill,
// Dirichlet difference form, Monte Carlo sampling.

#include <chrono>
#include <cstdio>
#include <vector>

#include "levykit/bernstein.hpp"
#include "levykit/density.hpp"
#include "levykit/dirichlet.hpp"
#include "levykit/simulate.hpp"

using namespace levykit;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.1f ms   openmp %9.1f ms   speedup %.2fx\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", max_threads());

    auto radial = bernstein_radial_model(BernsteinFn::power(0.75), 1);
    {
        DensityGridParams params;
        params.min_log2_nodes = 15;
        double checksum_serial = 0.0, checksum_parallel = 0.0;
        params.exec = Exec::serial;
        const double ts = time_ms(
            [&] { checksum_serial = density_grid(radial, 0.25, params).value_at(0.0); });
        params.exec = Exec::openmp;
        const double tp = time_ms(
            [&] { checksum_parallel = density_grid(radial, 0.25, params).value_at(0.0); });
        report("density exponent fill", ts, tp);
        if (checksum_serial != checksum_parallel)
            std::printf("  MISMATCH: %.17g vs %.17g\n", checksum_serial,
                        checksum_parallel);
    }
    {
        TestFunction u(TestFnKind::gaussian, 0.0, 1.0, {4096, 16.0});
        double vs = 0.0, vp = 0.0;
        const double ts = time_ms([&] { vs = form_difference(radial, u, Exec::serial).value; });
        const double tp = time_ms([&] { vp = form_difference(radial, u, Exec::openmp).value; });
        report("difference form", ts, tp);
        if (vs != vp) std::printf("  MISMATCH: %.17g vs %.17g\n", vs, vp);
    }
    {
        SamplePlan plan(LevyModel::from_measure(LevyMeasure::semi_stable(1.0)));
        plan.t = 1.0;
        plan.count = 400000;
        plan.seed = 42;
        plan.epsilon = std::ldexp(1.0, -20);
        std::vector<double> a, b;
        const double ts = time_ms([&] { a = sample_increments(plan, Exec::serial); });
        const double tp = time_ms([&] { b = sample_increments(plan, Exec::openmp); });
        report("semi-stable sampling", ts, tp);
        if (a != b) std::printf("  MISMATCH in sample streams\n");
    }
    return 0;
}
