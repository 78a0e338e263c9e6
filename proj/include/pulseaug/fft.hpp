#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace pulseaug {

/// In-place radix-2 FFT; size must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse);

/// Exact N-point DFT for arbitrary N (radix-2 when N is a power of two,
/// Bluestein's chirp-z otherwise).
std::vector<std::complex<double>> dft(std::vector<std::complex<double>> x);

/// Magnitude spectrum of a real signal: |X_k| for k = 0 .. N/2, where
/// N = values.size() * pad_factor (zero padding appended).
std::vector<double> magnitude_spectrum(const std::vector<double>& values, int pad_factor = 1);

}  // namespace pulseaug
