#pragma once

#include <cstdint>
#include <stdexcept>

namespace scrambler {

/// xorshift64* generator. Small, fast, and easy to reproduce in other
/// languages, which keeps fault schedules portable across reimplementations.
/// The all-zero state is a fixed point of the xorshift step, so seed 0 is
/// remapped to a fixed odd constant.
class Prng {
public:
    static constexpr std::uint64_t kZeroSeedReplacement = 0x9E3779B97F4A7C15ull;

    explicit Prng(std::uint64_t seed)
        : state_(seed != 0 ? seed : kZeroSeedReplacement) {}

    std::uint64_t next_u64() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }

    /// Uniform draw from [0, bound) by simple reduction. The modulo bias
    /// is below 2^-40 for every bound used here (< 2^24) — far beneath
    /// the experiments' statistical resolution — and keeping the mapping
    /// one-draw-per-index makes schedules trivially reproducible.
    std::uint64_t uniform_index(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("uniform_index: bound must be positive");
        return next_u64() % bound;
    }

    /// True with probability p, from the top 53 bits of one draw.
    bool bernoulli(double p) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("bernoulli: probability must be in [0, 1]");
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 < p;
    }

    friend bool operator==(const Prng&, const Prng&) = default;

private:
    std::uint64_t state_;
};

} // namespace scrambler
