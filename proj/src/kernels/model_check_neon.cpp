#include <arm_neon.h>

#include "elp/kernels.hpp"

namespace elp::kernels {

namespace {

// Lane i all-ones iff candidate i violates some rule.
inline uint64x2_t violated_lanes(std::span<const PackedRule> rules, uint64x2_t c) {
    const uint64x2_t zero = vdupq_n_u64(0);
    uint64x2_t viol = zero;
    for (const auto& r : rules) {
        const uint64x2_t in = vdupq_n_u64(r.in);
        const uint64x2_t out = vdupq_n_u64(r.out);
        const uint64x2_t head = vdupq_n_u64(r.head);
        uint64x2_t v = vceqq_u64(vandq_u64(c, in), in);
        v = vandq_u64(v, vceqq_u64(vandq_u64(c, out), zero));
        v = vandq_u64(v, vceqq_u64(vandq_u64(c, head), zero));
        viol = vorrq_u64(viol, v);
    }
    return viol;
}

} // namespace

void models_neon(std::span<const PackedRule> rules, std::span<const std::uint64_t> candidates,
                 std::span<std::uint8_t> flags) {
    std::size_t i = 0;
    for (; i + 2 <= candidates.size(); i += 2) {
        const uint64x2_t viol = violated_lanes(rules, vld1q_u64(candidates.data() + i));
        flags[i] = vgetq_lane_u64(viol, 0) ? 0 : 1;
        flags[i + 1] = vgetq_lane_u64(viol, 1) ? 0 : 1;
    }
    if (i < candidates.size()) {
        models_scalar(rules, candidates.subspan(i), flags.subspan(i));
    }
}

bool any_model_neon(std::span<const PackedRule> rules, std::span<const std::uint64_t> candidates) {
    std::size_t i = 0;
    for (; i + 2 <= candidates.size(); i += 2) {
        const uint64x2_t viol = violated_lanes(rules, vld1q_u64(candidates.data() + i));
        if (!vgetq_lane_u64(viol, 0) || !vgetq_lane_u64(viol, 1)) {
            return true;
        }
    }
    return i < candidates.size() && any_model_scalar(rules, candidates.subspan(i));
}

} // namespace elp::kernels
