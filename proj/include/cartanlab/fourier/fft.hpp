#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cartan {

using cplx = std::complex<double>;

bool is_power_of_two(std::size_t n) noexcept;

// Unnormalized DFT: out[k] = sum_j in[j] exp(sign * 2 pi i jk / n), sign = -1
// or +1. Radix-2 for powers of two, direct O(n^2) sum otherwise.
void dft_inplace(std::vector<cplx>& data, int sign);
void dft_inplace(cplx* data, std::size_t n, int sign);

// Row-major rows x cols array, transformed along both axes.
void dft2_inplace(std::vector<cplx>& data, std::size_t rows, std::size_t cols, int sign);

}  // namespace cartan
