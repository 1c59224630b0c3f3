#pragma once

#include <complex>
#include <span>
#include <vector>

namespace rirforge {

// Real-input FFT of length n (input zero-padded or truncated to n).
// Returns n/2 + 1 bins. n must be even.
std::vector<std::complex<double>> rfft(std::span<const double> x, std::size_t n);

// Inverse of rfft, returning n real samples (normalized).
std::vector<double> irfft(std::span<const std::complex<double>> spec, std::size_t n);

// Full linear convolution, length a.size() + b.size() - 1.
// Uses an FFT of the next power of two; falls back to the direct form when
// one operand is short, which keeps convolution with a one-hot kernel exact.
std::vector<double> fft_convolve(std::span<const double> a, std::span<const double> b);

std::size_t next_pow2(std::size_t n);

}  // namespace rirforge
