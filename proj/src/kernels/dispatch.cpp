#include <cstdlib>
#include <cstring>

#include "phaserank/kernels/kernels.hpp"

namespace phaserank::kernels {

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", scalar::gap_margin_row, scalar::column_gram, scalar::rotate_columns};
    return table;
}

const KernelTable* avx2_kernels() {
#if defined(PHASERANK_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const KernelTable table{"avx2", avx2::gap_margin_row, avx2::column_gram, avx2::rotate_columns};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &table : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active_kernels() {
    static const KernelTable& chosen = [] () -> const KernelTable& {
        const char* env = std::getenv("PHASERANK_SIMD");
        if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_kernels();
        if (const auto* t = avx2_kernels()) return *t;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace phaserank::kernels
