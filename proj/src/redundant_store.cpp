#include "scrambler/redundant_store.hpp"

#include <algorithm>
#include <stdexcept>

namespace scrambler {

namespace {

void check_level(int level, int r_max) {
    if (level < 3 || level > 11 || level % 2 == 0)
        throw std::invalid_argument("redundancy level must be odd and within [3, 11]");
    if (level > r_max)
        throw std::invalid_argument("redundancy level exceeds the layout's r_max");
}

} // namespace

RedundantStore::RedundantStore(const LayoutMap& layout, int initial_redundancy, bool scrub)
    : layout_(layout),
      memory_(layout.capacity()),
      active_(initial_redundancy),
      scrub_(scrub),
      // Zero-filled memory is a valid full-depth image of every cell, so
      // the whole replica range is trustworthy from the start.
      trusted_(layout.n_cells(), static_cast<std::uint8_t>(layout.r_max())) {
    check_level(initial_redundancy, layout.r_max());
}

void RedundantStore::check_cell(std::uint64_t cell) const {
    if (cell >= layout_.n_cells())
        throw std::out_of_range("cell index out of range");
}

void RedundantStore::write(std::uint64_t cell, Word value) {
    check_cell(cell);
    for (int j = 0; j < active_; ++j)
        memory_.store(layout_.addr(cell, j), value);
    trusted_[cell] = static_cast<std::uint8_t>(active_);
    counters_.replica_accesses += static_cast<std::uint64_t>(active_);
}

ReadOutcome RedundantStore::read(std::uint64_t cell) {
    check_cell(cell);

    const int voted = std::min(active_, static_cast<int>(trusted_[cell]));
    Word replicas[11];
    for (int j = 0; j < voted; ++j)
        replicas[j] = memory_.load(layout_.addr(cell, j));

    const VoteResult vote = majority_vote({replicas, static_cast<std::size_t>(voted)});

    counters_.replica_accesses += static_cast<std::uint64_t>(active_);
    ++counters_.reads_per_level[static_cast<std::size_t>(CellCounters::level_index(active_))];

    if (!vote.ok()) {
        ++counters_.read_failures;
        return ReadOutcome{std::nullopt, vote.agreement, voted};
    }

    if (scrub_) {
        const Word value = *vote.majority;
        std::uint64_t rewrites = 0;
        for (int j = 0; j < active_; ++j) {
            const std::size_t addr = layout_.addr(cell, j);
            if (j >= voted || memory_.load(addr) != value) {
                memory_.store(addr, value);
                ++rewrites;
            }
        }
        counters_.replica_accesses += rewrites;
        trusted_[cell] = static_cast<std::uint8_t>(active_);
    }

    return ReadOutcome{vote.majority, vote.agreement, voted};
}

void RedundantStore::set_redundancy(int level) {
    check_level(level, layout_.r_max());
    active_ = level;
}

} // namespace scrambler
