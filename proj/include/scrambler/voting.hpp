#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace scrambler {

using Word = std::uint32_t;

/// Outcome of a majority vote over the replicas of one logical cell.
/// `majority` is set iff some value is held by more than half of the
/// replicas; `agreement` is the multiplicity of the most common value.
struct VoteResult {
    std::optional<Word> majority;
    int agreement = 0;
    int redundancy = 0;

    bool ok() const { return majority.has_value(); }
};

/// Risk of failure of a voted read, kept as an exact fraction so that
/// threshold comparisons (r > 1/2, r == 0) never hit floating-point ties.
struct RiskSample {
    int num = 1;
    int den = 1;

    bool is_zero() const { return num == 0; }
    double value() const { return static_cast<double>(num) / den; }

    friend bool operator==(RiskSample a, RiskSample b) {
        return static_cast<std::int64_t>(a.num) * b.den ==
               static_cast<std::int64_t>(b.num) * a.den;
    }
    friend bool operator<(RiskSample a, RiskSample b) {
        return static_cast<std::int64_t>(a.num) * b.den <
               static_cast<std::int64_t>(b.num) * a.den;
    }
    friend bool operator>(RiskSample a, RiskSample b) { return b < a; }
    friend bool operator<=(RiskSample a, RiskSample b) { return !(b < a); }
    friend bool operator>=(RiskSample a, RiskSample b) { return !(a < b); }
};

/// Plurality vote over an odd number of replicas (3..11). The result's
/// `majority` is present only when the top multiplicity exceeds half the
/// replica count; such a value is necessarily unique, so tie-breaking
/// never affects the outcome.
VoteResult majority_vote(std::span<const Word> replicas);

/// Risk of failure for a read at redundancy k = 2n+1 whose largest agreeing
/// set had size m: (k - m)/n when the vote succeeded (m > n), 1 otherwise.
/// Decreases by exactly 1/n per extra agreeing replica, 0 at unanimity.
RiskSample compute_risk(int redundancy, int agreement);

} // namespace scrambler
