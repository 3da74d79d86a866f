#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace elp::kernels {

/// Negation-free view of a rule used for batch model checks. A candidate c violates
/// the rule iff (c & in) == in, (c & out) == 0 and (c & head) == 0.
struct PackedRule {
    std::uint64_t in = 0;
    std::uint64_t out = 0;
    std::uint64_t head = 0;
};

/// flags[i] = 1 iff candidates[i] satisfies every rule. Spans must have equal length.
using ModelsFn = void (*)(std::span<const PackedRule>, std::span<const std::uint64_t>, std::span<std::uint8_t>);
/// True iff some candidate satisfies every rule.
using AnyModelFn = bool (*)(std::span<const PackedRule>, std::span<const std::uint64_t>);

void models_scalar(std::span<const PackedRule>, std::span<const std::uint64_t>, std::span<std::uint8_t>);
bool any_model_scalar(std::span<const PackedRule>, std::span<const std::uint64_t>);

#if defined(__x86_64__) || defined(_M_X64)
void models_avx2(std::span<const PackedRule>, std::span<const std::uint64_t>, std::span<std::uint8_t>);
bool any_model_avx2(std::span<const PackedRule>, std::span<const std::uint64_t>);
#endif
#if defined(__aarch64__)
void models_neon(std::span<const PackedRule>, std::span<const std::uint64_t>, std::span<std::uint8_t>);
bool any_model_neon(std::span<const PackedRule>, std::span<const std::uint64_t>);
#endif

/// Selected once per process from CPU features; ELP_KERNEL=scalar forces the reference path.
void models(std::span<const PackedRule> rules, std::span<const std::uint64_t> candidates, std::span<std::uint8_t> flags);
bool any_model(std::span<const PackedRule> rules, std::span<const std::uint64_t> candidates);
std::string_view active_kernel();

} // namespace elp::kernels
