#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace levykit {

/// Execution policy for the data-parallel kernels. Every kernel has a serial
/// reference path; the OpenMP path must produce identical results, which the
/// test suite checks bit for bit.
enum class Exec { serial, openmp };

inline Exec default_exec() {
#ifdef _OPENMP
    return Exec::openmp;
#else
    return Exec::serial;
#endif
}

/// Index-parallel loop. Bodies write to disjoint slots, so the result does not
/// depend on the schedule.
template <class Body>
void parallel_for(std::size_t n, Body&& body, Exec exec = default_exec()) {
#ifdef _OPENMP
    if (exec == Exec::openmp) {
        #pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

/// Deterministic sum reduction: the index range is cut into fixed chunks that
/// do not depend on the thread count, each chunk is summed in index order, and
/// the chunk results are added in chunk order. Serial and OpenMP runs agree
/// bitwise.
template <class Term>
double chunked_sum(std::size_t n, Term&& term, Exec exec = default_exec(),
                   std::size_t chunk = 1024) {
    if (n == 0) return 0.0;
    const std::size_t nchunks = (n + chunk - 1) / chunk;
    std::vector<double> partial(nchunks, 0.0);
    parallel_for(
        nchunks,
        [&](std::size_t c) {
            const std::size_t lo = c * chunk;
            const std::size_t hi = lo + chunk < n ? lo + chunk : n;
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) s += term(i);
            partial[c] = s;
        },
        exec);
    double total = 0.0;
    for (double s : partial) total += s;
    return total;
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace levykit
