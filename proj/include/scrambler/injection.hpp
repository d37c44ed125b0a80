#pragma once

#include <cstdint>

#include "scrambler/physical_memory.hpp"
#include "scrambler/prng.hpp"

namespace scrambler {

/// Applies scripted fault events to raw memory. All randomness flows
/// through one generator in a fixed draw order, so a (seed, script) pair
/// fully determines the fault pattern:
///
///   per scramble candidate: index draw, probability draw, then — only
///   if the event fires — one mask draw;
///   per burst candidate: start-index draw, one probability draw gating
///   the whole burst, then one mask draw per covered word if it fired.
///
/// Masks are nonzero 32-bit values (zero draws are redrawn), so a fired
/// upset always changes the word it hits.
class InjectionEngine {
public:
    InjectionEngine(PhysicalMemory& memory, std::uint64_t seed)
        : memory_(&memory), rng_(seed) {}

    /// n independent candidate upsets, each at a uniform address and
    /// applied with probability p.
    void scramble(std::uint64_t n, double p);

    /// n candidate bursts of `length` contiguous words each; a burst
    /// starts at a uniform address chosen so it fits entirely in memory,
    /// fires as a whole with probability p, and flips every covered word
    /// with an independent mask. Requires 1 <= length <= capacity
    /// (throws std::invalid_argument otherwise).
    void burst(std::uint64_t n, double p, std::uint64_t length);

    /// Total words actually flipped so far (a fired burst of length l
    /// contributes l).
    std::uint64_t scrambled_count() const { return scrambled_; }

    const Prng& rng() const { return rng_; }

private:
    PhysicalMemory* memory_;
    Prng rng_;
    std::uint64_t scrambled_ = 0;

    Word nonzero_mask();
};

} // namespace scrambler
