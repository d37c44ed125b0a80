#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "scrambler/adaptation.hpp"
#include "scrambler/script.hpp"

namespace scrambler {

/// One experiment run: a store of n_cells cells is written once with a
/// known pattern, then read round-robin for total_reads cycles while the
/// fault script executes on a virtual clock (reads_per_second read cycles
/// per script second). Fault commands take effect atomically at their
/// scheduled cycle, before that cycle's read. With `adaptive` set, every
/// read's risk is fed to a RedundancyController and level changes apply
/// from the next operation on.
struct ExperimentConfig {
    std::string script_path;
    int initial_redundancy = 5;
    bool scrub = true;
    bool adaptive = false;
    std::uint64_t n_cells = 20000;
    std::uint64_t stride = 20;
    std::uint64_t total_reads = 65000000;
    std::uint64_t seed = 1;
    std::uint64_t reads_per_second = 100000;

    /// When nonempty, the CLI writes the emit_trace CSV here after the run.
    std::string trace_path;

    /// Optional progress hook; receives one line per script action and a
    /// marker every 50000 read cycles. Keeps the run loop free of I/O.
    std::function<void(const std::string&)> on_action;
};

struct ExperimentReport {
    std::uint64_t scrambled_cells = 0;
    std::uint64_t failures = 0;
    int final_redundancy = 0;
    std::map<int, std::uint64_t> runs_per_level; // keys 3,5,7,9,11
    std::uint64_t replica_accesses = 0;
    std::vector<RedundancyEvent> events;

    // Echoed from the run so trace emission is self-contained.
    int initial_redundancy = 0;
    std::uint64_t total_reads = 0;

    friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// Runs the experiment on an already-parsed script.
ExperimentReport run_experiment(const ExperimentConfig& config, const Script& script);

/// Convenience overload: parses config.script_path first.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Replica-access cost model: sum over levels of level * reads served at
/// that level.
std::uint64_t cost(const ExperimentReport& report);

/// Writes the run summary:
///   <scrambled> scrambled cells, <failures> failures, redundance == <final>
///   redundance 3: <n> runs
///   ... (one line per level 3,5,7,9,11)
void write_summary(const ExperimentReport& report, std::ostream& out);

/// Writes the redundancy trace as CSV: a `cycle,redundancy` header, an
/// initial row (0, initial), one row per adaptation event, and a final
/// row (total_reads, final).
void emit_trace(const ExperimentReport& report, std::ostream& out);

} // namespace scrambler
