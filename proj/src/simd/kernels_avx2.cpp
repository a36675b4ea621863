#include <immintrin.h>

#include <cmath>

#include "cartanlab/simd/kernels.hpp"

namespace cartan::simd::avx2 {

namespace {

inline __m256d cmul(__m256d a, __m256d b) {
    // (ar + i ai)(br + i bi) for two interleaved complex lanes
    const __m256d ar = _mm256_movedup_pd(a);
    const __m256d ai = _mm256_permute_pd(a, 0xF);
    const __m256d bs = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bs));
}

}  // namespace

void cgemm(const cplx* A, const cplx* B, cplx* C, std::size_t m, std::size_t k, std::size_t n) {
    const std::size_t n2 = n & ~std::size_t{1};
    for (std::size_t i = 0; i < m; ++i) {
        double* c = reinterpret_cast<double*>(C + i * n);
        for (std::size_t j = 0; j < n; ++j) C[i * n + j] = 0.0;
        std::size_t l = 0;
        for (; l + 1 < k; l += 2) {
            const __m256d ar0 = _mm256_set1_pd(A[i * k + l].real());
            const __m256d ai0 = _mm256_set1_pd(A[i * k + l].imag());
            const __m256d ar1 = _mm256_set1_pd(A[i * k + l + 1].real());
            const __m256d ai1 = _mm256_set1_pd(A[i * k + l + 1].imag());
            const double* b0 = reinterpret_cast<const double*>(B + l * n);
            const double* b1 = reinterpret_cast<const double*>(B + (l + 1) * n);
            for (std::size_t j = 0; j < n2; j += 2) {
                __m256d acc = _mm256_loadu_pd(c + 2 * j);
                const __m256d v0 = _mm256_loadu_pd(b0 + 2 * j);
                const __m256d v1 = _mm256_loadu_pd(b1 + 2 * j);
                acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar0, v0, _mm256_mul_pd(ai0, _mm256_permute_pd(v0, 0x5))));
                acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar1, v1, _mm256_mul_pd(ai1, _mm256_permute_pd(v1, 0x5))));
                _mm256_storeu_pd(c + 2 * j, acc);
            }
            if (n2 != n) {
                C[i * n + n2] += A[i * k + l] * B[l * n + n2] + A[i * k + l + 1] * B[(l + 1) * n + n2];
            }
        }
        for (; l < k; ++l) {
            const __m256d ar = _mm256_set1_pd(A[i * k + l].real());
            const __m256d ai = _mm256_set1_pd(A[i * k + l].imag());
            const double* b = reinterpret_cast<const double*>(B + l * n);
            for (std::size_t j = 0; j < n2; j += 2) {
                const __m256d v = _mm256_loadu_pd(b + 2 * j);
                const __m256d acc = _mm256_loadu_pd(c + 2 * j);
                _mm256_storeu_pd(c + 2 * j, _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, _mm256_permute_pd(v, 0x5)))));
            }
            if (n2 != n) C[i * n + n2] += A[i * k + l] * B[l * n + n2];
        }
    }
}

void fft_stage(cplx* data, std::size_t n, std::size_t half, const cplx* tw) {
    if (half < 2) {
        scalar::fft_stage(data, n, half, tw);
        return;
    }
    const std::size_t span = 2 * half;
    for (std::size_t base = 0; base < n; base += span) {
        double* lo = reinterpret_cast<double*>(data + base);
        double* hi = reinterpret_cast<double*>(data + base + half);
        const double* w = reinterpret_cast<const double*>(tw);
        for (std::size_t j = 0; j < half; j += 2) {
            const __m256d t = cmul(_mm256_loadu_pd(w + 2 * j), _mm256_loadu_pd(hi + 2 * j));
            const __m256d u = _mm256_loadu_pd(lo + 2 * j);
            _mm256_storeu_pd(lo + 2 * j, _mm256_add_pd(u, t));
            _mm256_storeu_pd(hi + 2 * j, _mm256_sub_pd(u, t));
        }
    }
}

void berezin_rows(const double* zx, const double* zy, const double* za, std::size_t nz,
                  const double* ux, const double* uy, const double* ua, const double* uw,
                  std::size_t nu, double s, double* out) {
    const bool integral = s >= 0 && s <= kMaxIntegerPower && std::floor(s) == s;
    if (!integral) {
        scalar::berezin_rows(zx, zy, za, nz, ux, uy, ua, uw, nu, s, out);
        return;
    }
    const auto e = static_cast<unsigned long>(s);
    const std::size_t nu4 = nu & ~std::size_t{3};
    const __m256d one = _mm256_set1_pd(1.0);
    for (std::size_t i = 0; i < nz; ++i) {
        const __m256d x = _mm256_set1_pd(zx[i]);
        const __m256d y = _mm256_set1_pd(zy[i]);
        const __m256d a = _mm256_set1_pd(za[i]);
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t j = 0; j < nu4; j += 4) {
            const __m256d vx = _mm256_loadu_pd(ux + j);
            const __m256d vy = _mm256_loadu_pd(uy + j);
            const __m256d re = _mm256_sub_pd(one, _mm256_fmadd_pd(x, vx, _mm256_mul_pd(y, vy)));
            const __m256d im = _mm256_fmsub_pd(y, vx, _mm256_mul_pd(x, vy));
            const __m256d den = _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im));
            __m256d q = _mm256_div_pd(_mm256_mul_pd(a, _mm256_loadu_pd(ua + j)), den);
            __m256d r = one;
            for (unsigned long b = e; b; b >>= 1) {
                if (b & 1UL) r = _mm256_mul_pd(r, q);
                q = _mm256_mul_pd(q, q);
            }
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(uw + j), r, acc);
        }
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, acc);
        double tail = 0.0;
        if (nu4 != nu) {
            scalar::berezin_rows(zx + i, zy + i, za + i, 1, ux + nu4, uy + nu4, ua + nu4,
                                 uw + nu4, nu - nu4, s, &tail);
        }
        out[i] = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]) + tail;
    }
}

}  // namespace cartan::simd::avx2
