#include "scrambler/adaptation.hpp"

#include <stdexcept>

namespace scrambler {

namespace {

void check_policy(const AdaptationPolicy& policy) {
    if (policy.calm_window == 0)
        throw std::invalid_argument("adaptation: calm_window must be positive");
    if (policy.step <= 0 || policy.step % 2 != 0)
        throw std::invalid_argument("adaptation: step must be positive and even");
    auto odd_level = [](int level) { return level >= 3 && level <= 11 && level % 2 == 1; };
    if (!odd_level(policy.min_redundancy) || !odd_level(policy.max_redundancy) ||
        policy.min_redundancy > policy.max_redundancy)
        throw std::invalid_argument("adaptation: malformed redundancy bounds");
    if (policy.raise_threshold.den <= 0 || policy.raise_threshold.num < 0)
        throw std::invalid_argument("adaptation: malformed raise threshold");
}

} // namespace

RedundancyController::RedundancyController(const AdaptationPolicy& policy, int initial)
    : policy_(policy), current_(initial) {
    check_policy(policy);
    if (initial < policy.min_redundancy || initial > policy.max_redundancy || initial % 2 == 0)
        throw std::invalid_argument("adaptation: initial level must be odd and within bounds");
}

std::optional<RedundancyEvent> RedundancyController::observe(RiskSample risk, std::uint64_t cycle) {
    if (cycle <= last_cycle_)
        throw std::invalid_argument("adaptation: cycles must be strictly increasing");
    last_cycle_ = cycle;

    if (risk > policy_.raise_threshold) {
        calm_ = 0;
        if (current_ < policy_.max_redundancy) {
            current_ += policy_.step;
            return RedundancyEvent{cycle, current_, RedundancyEvent::Cause::raised};
        }
        return std::nullopt; // saturated high
    }

    if (risk.is_zero()) {
        if (++calm_ >= policy_.calm_window) {
            calm_ = 0; // a level change (or saturation at the floor) restarts the window
            if (current_ > policy_.min_redundancy) {
                current_ -= policy_.step;
                return RedundancyEvent{cycle, current_, RedundancyEvent::Cause::lowered};
            }
        }
        return std::nullopt;
    }

    // Nonzero risk at or below the threshold: tolerated, but not calm.
    calm_ = 0;
    return std::nullopt;
}

} // namespace scrambler
