#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "scrambler/experiment.hpp"
#include "scrambler/script.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Adaptively redundant memory simulator with scripted fault injection"};

    scrambler::ExperimentConfig config;
    config.total_reads = 1000000; // desk-scale default; pass --reads 65000000 for full scale

    std::string scrub_mode;
    std::string adaptive_mode;

    app.add_option("script", config.script_path, "fault-injection script file")->required();
    app.add_option("initial-redundancy", config.initial_redundancy,
                   "initial redundancy level (odd, 3..11)")
        ->required();
    app.add_option("scrub-mode", scrub_mode, "scrub | noscrub")
        ->required()
        ->check(CLI::IsMember({"scrub", "noscrub"}));
    app.add_option("adaptive-mode", adaptive_mode, "adaptive | noadaptive")
        ->required()
        ->check(CLI::IsMember({"adaptive", "noadaptive"}));
    app.add_option("--cells", config.n_cells, "number of logical cells")->capture_default_str();
    app.add_option("--stride", config.stride, "replica separation in physical cells")
        ->capture_default_str();
    app.add_option("--reads", config.total_reads, "total read cycles")->capture_default_str();
    app.add_option("--seed", config.seed, "PRNG seed")->capture_default_str();
    app.add_option("--reads-per-second", config.reads_per_second,
                   "read cycles per script second")
        ->capture_default_str();
    app.add_option("--trace", config.trace_path, "write the redundancy trace CSV to this file");

    CLI11_PARSE(app, argc, argv);

    config.scrub = scrub_mode == "scrub";
    config.adaptive = adaptive_mode == "adaptive";
    config.on_action = [](const std::string& line) { std::cout << line << "\n"; };

    try {
        const scrambler::ExperimentReport report = scrambler::run_experiment(config);
        scrambler::write_summary(report, std::cout);
        if (!config.trace_path.empty()) {
            std::ofstream trace(config.trace_path, std::ios::binary);
            scrambler::emit_trace(report, trace);
            if (!trace.good()) {
                std::cerr << "scrambler: cannot write trace file: " << config.trace_path << "\n";
                return 1;
            }
        }
    } catch (const scrambler::ScriptParseError& error) {
        std::cerr << "scrambler: " << config.script_path << ": " << error.what() << "\n";
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "scrambler: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
