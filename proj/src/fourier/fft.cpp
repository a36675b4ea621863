#include "cartanlab/fourier/fft.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>

#include "cartanlab/core/error.hpp"
#include "cartanlab/simd/kernels.hpp"

namespace cartan {

namespace {

struct FftPlan {
    std::size_t n = 0;
    std::vector<std::size_t> bitrev;
    std::vector<std::vector<cplx>> twiddles;  // one table per stage
};

std::unique_ptr<FftPlan> build_plan(std::size_t n, int sign) {
    auto plan = std::make_unique<FftPlan>();
    plan->n = n;
    plan->bitrev.resize(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b)
            if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
        plan->bitrev[i] = r;
    }
    for (std::size_t half = 1; half < n; half *= 2) {
        std::vector<cplx> tw(half);
        for (std::size_t j = 0; j < half; ++j) {
            const double ang = sign * std::numbers::pi * static_cast<double>(j) / static_cast<double>(half);
            tw[j] = cplx(std::cos(ang), std::sin(ang));
        }
        plan->twiddles.push_back(std::move(tw));
    }
    return plan;
}

const FftPlan& plan_for(std::size_t n, int sign) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, int>, std::unique_ptr<FftPlan>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, sign}];
    if (!slot) slot = build_plan(n, sign);
    return *slot;
}

void naive_dft(cplx* data, std::size_t n, int sign) {
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double ang = sign * 2.0 * std::numbers::pi *
                               static_cast<double>((j * k) % n) / static_cast<double>(n);
            acc += data[j] * cplx(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    std::copy(out.begin(), out.end(), data);
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

void dft_inplace(cplx* data, std::size_t n, int sign) {
    if (sign != 1 && sign != -1) throw ContractError("dft: sign must be +1 or -1");
    if (n <= 1) return;
    if (!is_power_of_two(n)) {
        naive_dft(data, n, sign);
        return;
    }
    const FftPlan& plan = plan_for(n, sign);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = plan.bitrev[i];
        if (r > i) std::swap(data[i], data[r]);
    }
    const auto stage = simd::active().fft_stage;
    std::size_t s = 0;
    for (std::size_t half = 1; half < n; half *= 2, ++s) stage(data, n, half, plan.twiddles[s].data());
}

void dft_inplace(std::vector<cplx>& data, int sign) { dft_inplace(data.data(), data.size(), sign); }

void dft2_inplace(std::vector<cplx>& data, std::size_t rows, std::size_t cols, int sign) {
    if (data.size() != rows * cols) throw ContractError("dft2: size mismatch");
    for (std::size_t i = 0; i < rows; ++i) dft_inplace(data.data() + i * cols, cols, sign);
    std::vector<cplx> column(rows);
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) column[i] = data[i * cols + j];
        dft_inplace(column, sign);
        for (std::size_t i = 0; i < rows; ++i) data[i * cols + j] = column[i];
    }
}

}  // namespace cartan
