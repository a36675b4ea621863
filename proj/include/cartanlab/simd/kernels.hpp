#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace cartan::simd {

using cplx = std::complex<double>;

enum class Level { Scalar, Avx2 };

std::string_view level_name(Level level) noexcept;

// C (m x n) = A (m x k) * B (k x n), all row-major, C must not alias A or B.
using CgemmFn = void (*)(const cplx* A, const cplx* B, cplx* C,
                         std::size_t m, std::size_t k, std::size_t n);

// One radix-2 decimation-in-time stage over data[0..n): butterflies of span
// 2*half, twiddles tw[j] = exp(sign*2*pi*i*j/(2*half)) for j < half.
using FftStageFn = void (*)(cplx* data, std::size_t n, std::size_t half, const cplx* tw);

// out[i] = sum_j uw[j] * q_ij^s with
// q_ij = za[i]*ua[j] / |1 - z_i conj(u_j)|^2, z_i = zx[i] + i zy[i].
using BerezinRowsFn = void (*)(const double* zx, const double* zy, const double* za,
                               std::size_t nz, const double* ux, const double* uy,
                               const double* ua, const double* uw, std::size_t nu,
                               double s, double* out);

struct KernelTable {
    Level level;
    CgemmFn cgemm;
    FftStageFn fft_stage;
    BerezinRowsFn berezin_rows;
};

// Kernels of the best level supported by this CPU, unless overridden with
// force_level() or the CARTANLAB_SIMD environment variable ("scalar"/"avx2").
const KernelTable& active() noexcept;
Level detected_level() noexcept;
bool level_available(Level level) noexcept;
// Returns false (and changes nothing) if the level is not available.
bool force_level(Level level) noexcept;
const KernelTable& table(Level level);

namespace scalar {
void cgemm(const cplx* A, const cplx* B, cplx* C, std::size_t m, std::size_t k, std::size_t n);
void fft_stage(cplx* data, std::size_t n, std::size_t half, const cplx* tw);
void berezin_rows(const double* zx, const double* zy, const double* za, std::size_t nz,
                  const double* ux, const double* uy, const double* ua, const double* uw,
                  std::size_t nu, double s, double* out);
}  // namespace scalar

#if defined(CARTANLAB_HAVE_AVX2)
namespace avx2 {
void cgemm(const cplx* A, const cplx* B, cplx* C, std::size_t m, std::size_t k, std::size_t n);
void fft_stage(cplx* data, std::size_t n, std::size_t half, const cplx* tw);
void berezin_rows(const double* zx, const double* zy, const double* za, std::size_t nz,
                  const double* ux, const double* uy, const double* ua, const double* uw,
                  std::size_t nu, double s, double* out);
}  // namespace avx2
#endif

// Exponent handled by repeated squaring when s is a non-negative integer of
// at most this size; otherwise q^s goes through std::pow.
inline constexpr double kMaxIntegerPower = 1 << 20;

}  // namespace cartan::simd
