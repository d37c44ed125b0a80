#pragma once

#include <cstdint>
#include <optional>

#include "scrambler/voting.hpp"

namespace scrambler {

/// Tuning knobs of the redundancy controller. Defaults match the
/// reference configuration: raise when risk exceeds 1/2, lower after a
/// window of 1000 consecutive risk-free reads, always by one odd step,
/// never outside [3, 11].
struct AdaptationPolicy {
    RiskSample raise_threshold{1, 2};
    std::uint32_t calm_window = 1000;
    int step = 2;
    int min_redundancy = 3;
    int max_redundancy = 11;
};

/// A change of redundancy level decided by the controller, stamped with
/// the read cycle whose risk sample triggered it.
struct RedundancyEvent {
    enum class Cause { raised, lowered };

    std::uint64_t cycle = 0;
    int new_level = 0;
    Cause cause = Cause::raised;

    friend bool operator==(const RedundancyEvent&, const RedundancyEvent&) = default;
};

/// Hysteresis controller mapping a stream of per-read risk samples to a
/// redundancy level. Raising is immediate and aggressive (any sample
/// above the threshold); lowering is conservative (a full calm window of
/// zero-risk samples, with the counter reset by any nonzero sample or by
/// any level change, including the completed lowering itself — so
/// consecutive drops are at least a window apart). At the bounds the
/// controller saturates silently.
class RedundancyController {
public:
    /// `initial` must be odd and within [min_redundancy, max_redundancy];
    /// throws std::invalid_argument otherwise (as does a malformed policy).
    RedundancyController(const AdaptationPolicy& policy, int initial);

    /// Feeds one risk sample. `cycle` must be strictly greater than the
    /// previous call's (throws std::invalid_argument otherwise). Returns
    /// the event if this sample changed the published level.
    std::optional<RedundancyEvent> observe(RiskSample risk, std::uint64_t cycle);

    /// Level the memory system should be running at right now.
    int publish() const { return current_; }

    const AdaptationPolicy& policy() const { return policy_; }
    std::uint32_t calm_count() const { return calm_; }

private:
    AdaptationPolicy policy_;
    int current_;
    std::uint32_t calm_ = 0;
    std::uint64_t last_cycle_ = 0;
};

} // namespace scrambler
