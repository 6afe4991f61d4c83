#pragma once

#include <complex>
#include <vector>

namespace gfdn {

/// In-place complex FFT helpers on top of FFTW.
///
/// Plans are cached per transform size, created under a global lock
/// (FFTW's planner is not thread-safe) with FFTW_ESTIMATE so planning is
/// deterministic, and executed via the new-array interface which is safe
/// to call concurrently on distinct buffers.
void fft(std::vector<std::complex<double>>& x);
void ifft(std::vector<std::complex<double>>& x); // includes the 1/N scale

std::vector<std::complex<double>> fft_copy(const std::vector<std::complex<double>>& x);

/// Linear convolution, length a.size() + b.size() - 1. Uses FFT for large
/// inputs and the direct sum for small ones.
std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b);

/// Next power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

} // namespace gfdn
