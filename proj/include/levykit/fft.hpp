#pragma once

#include <complex>
#include <vector>

namespace levykit::fft {

/// Inverse transform of a real even spectrum. Input F_k at frequencies
/// k * dxi, k = 0..M/2 (length M/2+1); output has length M with
///   out[j] = F_0 + 2 sum_{k=1}^{M/2-1} F_k cos(2 pi j k / M) + F_{M/2} cos(pi j),
/// i.e. the trapezoid sum over the symmetric frequency grid.
std::vector<double> even_spectrum_synthesis(const std::vector<double>& half_spectrum);

/// In-place complex DFT, unnormalized; inverse divides by nothing.
void dft(std::vector<std::complex<double>>& data, bool inverse);

/// 2-D complex DFT on row-major n x n data.
void dft2(std::vector<std::complex<double>>& data, int n, bool inverse);

}  // namespace levykit::fft
