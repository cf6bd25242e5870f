#pragma once

#include <complex>
#include <vector>

namespace sinoforge {

/// Discrete Fourier transform of a, in place. Forward is unnormalized
/// (X[k] = sum_j x[j] e^{-2pi i jk/n}); inverse divides by n so the pair
/// round-trips. Power-of-two lengths use an iterative radix-2 transform,
/// anything else falls back to the direct O(n^2) sum.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

bool is_power_of_two(std::size_t n);

/// Smallest power of two >= n (n >= 1).
std::size_t next_power_of_two(std::size_t n);

} // namespace sinoforge
