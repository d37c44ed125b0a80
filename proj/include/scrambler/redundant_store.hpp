#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "scrambler/layout.hpp"
#include "scrambler/physical_memory.hpp"
#include "scrambler/voting.hpp"

namespace scrambler {

/// Result of one logical read: the voted value (absent when no majority
/// existed), the winning multiplicity, and how many replicas actually
/// voted — which can be lower than the store's active redundancy right
/// after a redundancy increase, until a write or scrub repopulates the
/// cell (see RedundantStore::read).
struct ReadOutcome {
    std::optional<Word> value;
    int agreement = 0;
    int voted_redundancy = 0;

    bool ok() const { return value.has_value(); }
};

/// Bookkeeping used by the cost model: physical replica traffic, failed
/// reads, and how many logical reads were served at each redundancy level.
struct CellCounters {
    std::uint64_t replica_accesses = 0;
    std::uint64_t read_failures = 0;
    std::array<std::uint64_t, 5> reads_per_level{}; // levels 3,5,7,9,11

    static int level_index(int level) { return (level - 3) / 2; }

    std::uint64_t reads_at(int level) const {
        return reads_per_level[static_cast<std::size_t>(level_index(level))];
    }
};

/// Logical memory of n_cells word-sized cells, each stored as `active`
/// replicas placed by a LayoutMap. Reads are majority votes; with
/// scrubbing enabled a successful read rewrites disagreeing replicas in
/// place. The active redundancy can be retargeted at any time between
/// operations without copying memory:
///
///  - lowering simply stops reading/writing the tail replicas (stale
///    contents stay in memory but are never consulted again unless the
///    level is raised back);
///  - raising takes effect lazily per cell: votes include at most as many
///    replicas as the cell last had written (its trusted prefix), and the
///    next write or successful scrub of the cell extends the prefix to
///    the new level.
///
/// A fresh store starts zero-filled, which is indistinguishable from
/// every cell having been written with 0 at full depth, so the trusted
/// prefix starts at r_max for all cells.
class RedundantStore {
public:
    /// `initial_redundancy` must be odd, within [3, 11] and <= layout.r_max();
    /// throws std::invalid_argument otherwise.
    RedundantStore(const LayoutMap& layout, int initial_redundancy, bool scrub);

    /// Stores `value` in the first `redundancy()` replicas of `cell` and
    /// marks them as the cell's trusted prefix.
    void write(std::uint64_t cell, Word value);

    /// Majority vote over min(redundancy(), trusted prefix) replicas.
    /// On success with scrubbing enabled, rewrites every disagreeing
    /// replica among the first `redundancy()` and sets the trusted prefix
    /// to `redundancy()`. On failure, leaves replicas untouched.
    ReadOutcome read(std::uint64_t cell);

    /// Retargets the active redundancy; same validity rules as the
    /// constructor's initial level.
    void set_redundancy(int level);

    int redundancy() const { return active_; }
    bool scrub_enabled() const { return scrub_; }

    const CellCounters& counters() const { return counters_; }
    const LayoutMap& layout() const { return layout_; }

    /// Raw storage, exposed for fault injection and inspection.
    PhysicalMemory& memory() { return memory_; }
    const PhysicalMemory& memory() const { return memory_; }

private:
    LayoutMap layout_;
    PhysicalMemory memory_;
    int active_;
    bool scrub_;
    std::vector<std::uint8_t> trusted_; // per-cell trusted-prefix depth
    CellCounters counters_;

    void check_cell(std::uint64_t cell) const;
};

} // namespace scrambler
