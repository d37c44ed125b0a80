#include "scrambler/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <variant>

#include "scrambler/injection.hpp"
#include "scrambler/redundant_store.hpp"

namespace scrambler {

namespace {

std::string format_g(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

std::string action_line(const ScriptCommand& command) {
    struct Line {
        std::string operator()(const SleepCommand& c) const {
            return "Scrambler::sleep(" + format_g(c.seconds) + ")";
        }
        std::string operator()(const ScrambleCommand& c) const {
            return "Scrambler::scramble(" + std::to_string(c.count) + "," +
                   format_g(c.probability) + ")";
        }
        std::string operator()(const BurstCommand& c) const {
            return "Scrambler::burst(" + std::to_string(c.count) + "," +
                   format_g(c.probability) + "," + std::to_string(c.length) + ")";
        }
        std::string operator()(const EndCommand&) const { return "Scrambler::END"; }
    };
    return std::visit(Line{}, command);
}

void check_config(const ExperimentConfig& config) {
    if (config.n_cells == 0 || config.stride == 0 || config.total_reads == 0 ||
        config.reads_per_second == 0)
        throw std::invalid_argument("experiment: all counts must be positive");
}

} // namespace

ExperimentReport run_experiment(const ExperimentConfig& config, const Script& script) {
    check_config(config);

    const AdaptationPolicy policy;
    const LayoutMap layout(config.n_cells, config.stride, policy.max_redundancy);
    RedundantStore store(layout, config.initial_redundancy, config.scrub);
    InjectionEngine engine(store.memory(), config.seed);
    std::optional<RedundancyController> controller;
    if (config.adaptive) controller.emplace(policy, config.initial_redundancy);

    const auto log = [&config](const std::string& line) {
        if (config.on_action) config.on_action(line);
    };

    // Baseline pattern: every cell holds its own index.
    for (std::uint64_t i = 0; i < config.n_cells; ++i)
        store.write(i, static_cast<Word>(i));

    ExperimentReport report;
    report.initial_redundancy = config.initial_redundancy;
    report.total_reads = config.total_reads;

    std::size_t pc = 0;
    std::uint64_t command_cycle = 1; // cycle at which script[pc] is due

    for (std::uint64_t cycle = 1; cycle <= config.total_reads; ++cycle) {
        // Fault commands due now run atomically before this cycle's read.
        while (pc < script.size() && command_cycle <= cycle) {
            const ScriptCommand& command = script[pc];
            log(action_line(command));
            if (const auto* sleep = std::get_if<SleepCommand>(&command)) {
                command_cycle += static_cast<std::uint64_t>(std::llround(
                    sleep->seconds * static_cast<double>(config.reads_per_second)));
                ++pc;
            } else if (const auto* scramble = std::get_if<ScrambleCommand>(&command)) {
                engine.scramble(scramble->count, scramble->probability);
                ++pc;
            } else if (const auto* burst = std::get_if<BurstCommand>(&command)) {
                engine.burst(burst->count, burst->probability, burst->length);
                ++pc;
            } else {
                pc = script.size(); // END: injection stops, reads continue
            }
        }

        if (config.on_action && (cycle - 1) % 50000 == 0)
            log("run " + std::to_string(cycle));

        const ReadOutcome outcome = store.read((cycle - 1) % config.n_cells);
        const RiskSample risk = compute_risk(outcome.voted_redundancy, outcome.agreement);
        if (controller) {
            if (const auto event = controller->observe(risk, cycle)) {
                store.set_redundancy(controller->publish());
                report.events.push_back(*event);
            }
        }
    }

    const CellCounters& counters = store.counters();
    report.scrambled_cells = engine.scrambled_count();
    report.failures = counters.read_failures;
    report.final_redundancy = store.redundancy();
    for (int level = 3; level <= 11; level += 2)
        report.runs_per_level[level] = counters.reads_at(level);
    report.replica_accesses = counters.replica_accesses;
    return report;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    return run_experiment(config, parse_script_file(config.script_path));
}

std::uint64_t cost(const ExperimentReport& report) {
    std::uint64_t total = 0;
    for (const auto& [level, runs] : report.runs_per_level)
        total += static_cast<std::uint64_t>(level) * runs;
    return total;
}

void write_summary(const ExperimentReport& report, std::ostream& out) {
    out << report.scrambled_cells << " scrambled cells, " << report.failures
        << " failures, redundance == " << report.final_redundancy << "\n";
    for (int level = 3; level <= 11; level += 2) {
        const auto it = report.runs_per_level.find(level);
        const std::uint64_t runs = it == report.runs_per_level.end() ? 0 : it->second;
        out << "redundance " << level << ": " << runs << " runs\n";
    }
}

void emit_trace(const ExperimentReport& report, std::ostream& out) {
    out << "cycle,redundancy\n";
    out << 0 << "," << report.initial_redundancy << "\n";
    for (const auto& event : report.events)
        out << event.cycle << "," << event.new_level << "\n";
    out << report.total_reads << "," << report.final_redundancy << "\n";
}

} // namespace scrambler
