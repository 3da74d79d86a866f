#include <cstdlib>
#include <string>

#include "elp/kernels.hpp"

namespace elp::kernels {

namespace {

struct Table {
    ModelsFn models;
    AnyModelFn any;
    std::string_view name;
};

Table select() {
    const char* forced = std::getenv("ELP_KERNEL");
    const bool scalar_only = forced != nullptr && std::string(forced) == "scalar";
#if defined(__x86_64__) || defined(_M_X64)
    if (!scalar_only && __builtin_cpu_supports("avx2")) {
        return {models_avx2, any_model_avx2, "avx2"};
    }
#elif defined(__aarch64__)
    if (!scalar_only) {
        return {models_neon, any_model_neon, "neon"};
    }
#endif
    (void)scalar_only;
    return {models_scalar, any_model_scalar, "scalar"};
}

const Table& active() {
    static const Table t = select();
    return t;
}

} // namespace

void models(std::span<const PackedRule> rules, std::span<const std::uint64_t> candidates, std::span<std::uint8_t> flags) {
    active().models(rules, candidates, flags);
}

bool any_model(std::span<const PackedRule> rules, std::span<const std::uint64_t> candidates) {
    return active().any(rules, candidates);
}

std::string_view active_kernel() { return active().name; }

} // namespace elp::kernels
