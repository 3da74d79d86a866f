#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "elp/kernels.hpp"

using namespace elp::kernels;

namespace {

struct Case {
    std::vector<PackedRule> rules;
    std::vector<std::uint64_t> candidates;
};

Case random_case(std::mt19937_64& rng, std::size_t n_rules, std::size_t n_cand, unsigned atoms) {
    const std::uint64_t mask = atoms >= 64 ? ~0ULL : (1ULL << atoms) - 1;
    Case c;
    for (std::size_t i = 0; i < n_rules; ++i) {
        // sparse masks so that some candidates are models
        c.rules.push_back({rng() & rng() & mask, rng() & rng() & rng() & mask, rng() & mask});
    }
    for (std::size_t i = 0; i < n_cand; ++i) {
        c.candidates.push_back(rng() & mask);
    }
    return c;
}

std::vector<std::uint8_t> run(ModelsFn f, const Case& c) {
    std::vector<std::uint8_t> flags(c.candidates.size(), 7);
    f(c.rules, c.candidates, flags);
    return flags;
}

} // namespace

TEST_CASE("scalar kernel matches the violation definition") {
    const std::vector<PackedRule> rules{{0b01, 0b10, 0b100}}; // c :- a, not b  (a=bit0, b=bit1, c=bit2)
    const std::vector<std::uint64_t> cand{0b000, 0b001, 0b011, 0b101};
    std::vector<std::uint8_t> flags(4);
    models_scalar(rules, cand, flags);
    CHECK(flags == std::vector<std::uint8_t>{1, 0, 1, 1});
    CHECK(any_model_scalar(rules, cand));
    CHECK_FALSE(any_model_scalar(rules, std::vector<std::uint64_t>{0b001}));
    CHECK_FALSE(any_model_scalar(rules, std::vector<std::uint64_t>{}));
}

TEST_CASE("dispatched and SIMD kernels equal the scalar reference") {
    std::mt19937_64 rng(42);
    for (int n = 0; n < 300; ++n) {
        const auto c = random_case(rng, 1 + rng() % 9, rng() % 37, 1 + static_cast<unsigned>(rng() % 64));
        const auto ref = run(models_scalar, c);
        CHECK(run(models, c) == ref);
        const bool any_ref = any_model_scalar(c.rules, c.candidates);
        CHECK(any_model(c.rules, c.candidates) == any_ref);
        CHECK(any_ref == std::any_of(ref.begin(), ref.end(), [](auto f) { return f != 0; }));
#if defined(__x86_64__) || defined(_M_X64)
        if (__builtin_cpu_supports("avx2")) {
            CHECK(run(models_avx2, c) == ref);
            CHECK(any_model_avx2(c.rules, c.candidates) == any_ref);
        }
#endif
#if defined(__aarch64__)
        CHECK(run(models_neon, c) == ref);
        CHECK(any_model_neon(c.rules, c.candidates) == any_ref);
#endif
    }
}

TEST_CASE("a kernel is selected") {
    const auto k = active_kernel();
    CHECK((k == "scalar" || k == "avx2" || k == "neon"));
}
