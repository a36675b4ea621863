#include <cmath>

#include "cartanlab/simd/kernels.hpp"

namespace cartan::simd::scalar {

void cgemm(const cplx* A, const cplx* B, cplx* C, std::size_t m, std::size_t k, std::size_t n) {
    for (std::size_t i = 0; i < m; ++i) {
        cplx* c = C + i * n;
        for (std::size_t j = 0; j < n; ++j) c[j] = 0.0;
        for (std::size_t l = 0; l < k; ++l) {
            const double ar = A[i * k + l].real();
            const double ai = A[i * k + l].imag();
            const cplx* b = B + l * n;
            for (std::size_t j = 0; j < n; ++j) {
                const double br = b[j].real();
                const double bi = b[j].imag();
                c[j] = cplx(c[j].real() + (ar * br - ai * bi), c[j].imag() + (ar * bi + ai * br));
            }
        }
    }
}

void fft_stage(cplx* data, std::size_t n, std::size_t half, const cplx* tw) {
    const std::size_t span = 2 * half;
    for (std::size_t base = 0; base < n; base += span) {
        for (std::size_t j = 0; j < half; ++j) {
            const cplx w = tw[j];
            const cplx x = data[base + j + half];
            const cplx t(w.real() * x.real() - w.imag() * x.imag(),
                         w.real() * x.imag() + w.imag() * x.real());
            const cplx u = data[base + j];
            data[base + j] = u + t;
            data[base + j + half] = u - t;
        }
    }
}

namespace {

double ipow(double q, unsigned long e) {
    double r = 1.0;
    while (e) {
        if (e & 1UL) r *= q;
        q *= q;
        e >>= 1;
    }
    return r;
}

}  // namespace

void berezin_rows(const double* zx, const double* zy, const double* za, std::size_t nz,
                  const double* ux, const double* uy, const double* ua, const double* uw,
                  std::size_t nu, double s, double* out) {
    const bool integral = s >= 0 && s <= kMaxIntegerPower && std::floor(s) == s;
    const auto e = static_cast<unsigned long>(integral ? s : 0.0);
    for (std::size_t i = 0; i < nz; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < nu; ++j) {
            const double re = 1.0 - (zx[i] * ux[j] + zy[i] * uy[j]);
            const double im = zy[i] * ux[j] - zx[i] * uy[j];
            const double q = za[i] * ua[j] / (re * re + im * im);
            acc += uw[j] * (integral ? ipow(q, e) : std::pow(q, s));
        }
        out[i] = acc;
    }
}

}  // namespace cartan::simd::scalar
