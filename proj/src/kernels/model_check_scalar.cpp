#include "elp/kernels.hpp"

namespace elp::kernels {

namespace {

inline bool satisfies(std::span<const PackedRule> rules, std::uint64_t c) {
    for (const auto& r : rules) {
        if ((c & r.in) == r.in && (c & r.out) == 0 && (c & r.head) == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

void models_scalar(std::span<const PackedRule> rules, std::span<const std::uint64_t> candidates,
                   std::span<std::uint8_t> flags) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        flags[i] = satisfies(rules, candidates[i]) ? 1 : 0;
    }
}

bool any_model_scalar(std::span<const PackedRule> rules, std::span<const std::uint64_t> candidates) {
    for (auto c : candidates) {
        if (satisfies(rules, c)) {
            return true;
        }
    }
    return false;
}

} // namespace elp::kernels
