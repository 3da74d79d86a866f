#include <immintrin.h>

#include "elp/kernels.hpp"

namespace elp::kernels {

namespace {

// Bit i set iff lane i violates some rule.
inline int violated_lanes(std::span<const PackedRule> rules, __m256i c) {
    const __m256i zero = _mm256_setzero_si256();
    __m256i viol = zero;
    for (const auto& r : rules) {
        const __m256i in = _mm256_set1_epi64x(static_cast<long long>(r.in));
        const __m256i out = _mm256_set1_epi64x(static_cast<long long>(r.out));
        const __m256i head = _mm256_set1_epi64x(static_cast<long long>(r.head));
        __m256i v = _mm256_cmpeq_epi64(_mm256_and_si256(c, in), in);
        v = _mm256_and_si256(v, _mm256_cmpeq_epi64(_mm256_and_si256(c, out), zero));
        v = _mm256_and_si256(v, _mm256_cmpeq_epi64(_mm256_and_si256(c, head), zero));
        viol = _mm256_or_si256(viol, v);
        if (_mm256_movemask_pd(_mm256_castsi256_pd(viol)) == 0xF) {
            break;
        }
    }
    return _mm256_movemask_pd(_mm256_castsi256_pd(viol));
}

} // namespace

void models_avx2(std::span<const PackedRule> rules, std::span<const std::uint64_t> candidates,
                 std::span<std::uint8_t> flags) {
    std::size_t i = 0;
    for (; i + 4 <= candidates.size(); i += 4) {
        const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(candidates.data() + i));
        const int viol = violated_lanes(rules, c);
        for (int k = 0; k < 4; ++k) {
            flags[i + k] = ((viol >> k) & 1) ? 0 : 1;
        }
    }
    if (i < candidates.size()) {
        models_scalar(rules, candidates.subspan(i), flags.subspan(i));
    }
}

bool any_model_avx2(std::span<const PackedRule> rules, std::span<const std::uint64_t> candidates) {
    std::size_t i = 0;
    for (; i + 4 <= candidates.size(); i += 4) {
        const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(candidates.data() + i));
        if (violated_lanes(rules, c) != 0xF) {
            return true;
        }
    }
    return i < candidates.size() && any_model_scalar(rules, candidates.subspan(i));
}

} // namespace elp::kernels
