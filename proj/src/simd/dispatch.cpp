#include <atomic>
#include <cstdlib>
#include <cstring>

#include "cartanlab/core/error.hpp"
#include "cartanlab/simd/kernels.hpp"

namespace cartan::simd {

namespace {

const KernelTable kScalarTable{Level::Scalar, &scalar::cgemm, &scalar::fft_stage,
                               &scalar::berezin_rows};
#if defined(CARTANLAB_HAVE_AVX2)
const KernelTable kAvx2Table{Level::Avx2, &avx2::cgemm, &avx2::fft_stage, &avx2::berezin_rows};
#endif

bool cpu_has_avx2() noexcept {
#if defined(CARTANLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Level initial_level() noexcept {
    Level level = cpu_has_avx2() ? Level::Avx2 : Level::Scalar;
    if (const char* env = std::getenv("CARTANLAB_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) level = Level::Scalar;
    }
    return level;
}

std::atomic<Level>& current() noexcept {
    static std::atomic<Level> level{initial_level()};
    return level;
}

}  // namespace

std::string_view level_name(Level level) noexcept {
    return level == Level::Avx2 ? "avx2" : "scalar";
}

Level detected_level() noexcept {
    return cpu_has_avx2() ? Level::Avx2 : Level::Scalar;
}

bool level_available(Level level) noexcept {
    return level == Level::Scalar || cpu_has_avx2();
}

bool force_level(Level level) noexcept {
    if (!level_available(level)) return false;
    current().store(level);
    return true;
}

const KernelTable& table(Level level) {
    if (level == Level::Scalar) return kScalarTable;
#if defined(CARTANLAB_HAVE_AVX2)
    if (cpu_has_avx2()) return kAvx2Table;
#endif
    throw ContractError("requested SIMD level is not available on this CPU");
}

const KernelTable& active() noexcept {
#if defined(CARTANLAB_HAVE_AVX2)
    if (current().load(std::memory_order_relaxed) == Level::Avx2) return kAvx2Table;
#endif
    return kScalarTable;
}

}  // namespace cartan::simd
