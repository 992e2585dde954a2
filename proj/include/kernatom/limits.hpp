#pragma once

#include <cstddef>
#include <cstdint>

namespace kernatom {

// Size limits and sampling parameters shared by every module. Defaults match
// the documented desk-scale configuration; the CLI exposes the main ones as
// flags.
struct Limits {
    // Groups larger than this are rejected during enumeration.
    std::size_t max_order = 10'000;
    // Associativity is checked on all triples up to this order, sampled above.
    std::size_t associativity_exhaustive_cap = 512;
    std::size_t associativity_samples = 10'000;
    std::uint64_t seed = 0x6b65726e61746f6dULL;
    // Homomorphism validation is O(|G|^2); refuse domains above this order.
    std::size_t max_validate = 2048;
    // Action validation is O(|G|^2 |X|).
    std::uint64_t action_validation_cap = 10'000'000;
    // Candidate generator assignments tried by enumerate_homomorphisms.
    std::uint64_t enumeration_cap = 1'000'000;
    // Theorem verifiers refuse groups whose associativity was only sampled.
    bool allow_sampled = false;
};

}  // namespace kernatom
