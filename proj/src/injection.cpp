#include "scrambler/injection.hpp"

#include <stdexcept>

namespace scrambler {

Word InjectionEngine::nonzero_mask() {
    // An upset that fired must change the word; redraw the (1 in 2^32)
    // zero masks. Truncation of the 64-bit draw is deliberate: one draw
    // per mask keeps the schedule easy to replay.
    for (;;) {
        const Word mask = static_cast<Word>(rng_.next_u64());
        if (mask != 0) return mask;
    }
}

void InjectionEngine::scramble(std::uint64_t n, double p) {
    const std::uint64_t capacity = memory_->capacity();
    for (std::uint64_t i = 0; i < n; ++i) {
        // Draw order is part of the reproducibility contract: index
        // first, then the gate, then the mask only if the upset fired.
        const std::uint64_t addr = rng_.uniform_index(capacity);
        if (!rng_.bernoulli(p)) continue;
        memory_->toggle(addr, nonzero_mask());
        ++scrambled_;
    }
}

void InjectionEngine::burst(std::uint64_t n, double p, std::uint64_t length) {
    const std::uint64_t capacity = memory_->capacity();
    if (length == 0 || length > capacity)
        throw std::invalid_argument("burst: length must be within [1, capacity]");
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t start = rng_.uniform_index(capacity - length + 1);
        if (!rng_.bernoulli(p)) continue;
        for (std::uint64_t j = 0; j < length; ++j)
            memory_->toggle(start + j, nonzero_mask());
        scrambled_ += length;
    }
}

} // namespace scrambler
