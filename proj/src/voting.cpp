#include "scrambler/voting.hpp"

#include <stdexcept>

namespace scrambler {

namespace {

void check_level(int redundancy) {
    if (redundancy < 3 || redundancy > 11 || redundancy % 2 == 0)
        throw std::invalid_argument("redundancy must be odd and within [3, 11]");
}

} // namespace

VoteResult majority_vote(std::span<const Word> replicas) {
    const int k = static_cast<int>(replicas.size());
    check_level(k);

    // k <= 11, so a quadratic multiplicity scan beats any container.
    int best = 0;
    Word best_value = 0;
    for (int i = 0; i < k; ++i) {
        int count = 1;
        for (int j = i + 1; j < k; ++j)
            if (replicas[j] == replicas[i]) ++count;
        if (count > best) {
            best = count;
            best_value = replicas[i];
        }
    }

    VoteResult result;
    result.agreement = best;
    result.redundancy = k;
    if (best > k / 2) result.majority = best_value;
    return result;
}

RiskSample compute_risk(int redundancy, int agreement) {
    check_level(redundancy);
    if (agreement < 1 || agreement > redundancy)
        throw std::invalid_argument("agreement must be within [1, redundancy]");

    const int n = redundancy / 2; // redundancy = 2n + 1
    if (agreement > n) return RiskSample{redundancy - agreement, n};
    return RiskSample{1, 1};
}

} // namespace scrambler
