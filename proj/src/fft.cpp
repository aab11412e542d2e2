#include "levykit/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace levykit::fft {

namespace {
// FFTW plan creation is not thread safe; execution on the planned arrays is.
std::mutex plan_mutex;
}  // namespace

std::vector<double> even_spectrum_synthesis(const std::vector<double>& half_spectrum) {
    const std::size_t m = 2 * (half_spectrum.size() - 1);
    std::vector<std::complex<double>> in(half_spectrum.size());
    for (std::size_t k = 0; k < half_spectrum.size(); ++k)
        in[k] = {half_spectrum[k], 0.0};
    std::vector<double> out(m);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_c2r_1d(static_cast<int>(m),
                                    reinterpret_cast<fftw_complex*>(in.data()),
                                    out.data(), FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

void dft(std::vector<std::complex<double>>& data, bool inverse) {
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_1d(static_cast<int>(data.size()),
                                reinterpret_cast<fftw_complex*>(data.data()),
                                reinterpret_cast<fftw_complex*>(data.data()),
                                inverse ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
}

void dft2(std::vector<std::complex<double>>& data, int n, bool inverse) {
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(data.data()),
                                reinterpret_cast<fftw_complex*>(data.data()),
                                inverse ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
}

}  // namespace levykit::fft
