#pragma once

#include <cstddef>

namespace elp {

/// Caps for the exhaustive searches. Exceeding one raises CapacityError.
struct Limits {
    std::size_t max_atoms = 20;             // atoms of a program handed to the stable-model search
    std::size_t max_guess_cores = 20;       // distinct subjective cores in one guess enumeration
    std::size_t max_brute_force_atoms = 4;  // atoms for enumerating every world view candidate
    std::size_t max_eht_atoms = 4;          // head atoms for the F15 search
    std::size_t max_unfounded_pairs = 1u << 22;

    /// Defaults, with max_atoms taken from ELP_MAX_ATOMS when set.
    static Limits from_env();
};

} // namespace elp
