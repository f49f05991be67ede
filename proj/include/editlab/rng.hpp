#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace editlab {

// Deterministic random source. std::mt19937_64 has a fully specified
// algorithm; the distribution helpers below are hand-rolled so sampled
// values do not depend on the standard library implementation.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), eng_(seed) {}

    uint64_t seed() const noexcept { return seed_; }

    uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform in [0, n). Rejection sampling, no modulo bias.
    uint64_t below(uint64_t n);

    // Uniform integer in [lo, hi], inclusive.
    int64_t range(int64_t lo, int64_t hi);

    // Standard normal via Box-Muller (cached spare value).
    double normal();

    // Child generator with a seed derived from this generator's seed and a
    // tag. Derivation reads no state, so derive() calls commute.
    Rng derive(std::string_view tag) const { return Rng(mix(seed_, tag)); }
    Rng derive(std::string_view tag, uint64_t index) const;

    static uint64_t mix(uint64_t seed, std::string_view tag);

private:
    uint64_t seed_;
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace editlab
