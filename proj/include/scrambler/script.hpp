#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace scrambler {

/// Fault-schedule script commands. One command per line, uppercase
/// keyword, comma-separated arguments:
///
///   SLEEP s          advance virtual time by s seconds (s > 0, decimal)
///   SCRAMBLE n, p    n independent single-word upsets, each applied
///                    with probability p
///   BURST n, p, l    n candidate bursts of l contiguous words, each
///                    burst applied atomically with probability p
///   END              end of schedule (mandatory, nothing may follow)
///
/// `//` starts a comment; blank lines are ignored. Numbers are decimal
/// integers or decimal fractions (no signs, no exponents).
struct SleepCommand {
    double seconds = 0;
    friend bool operator==(const SleepCommand&, const SleepCommand&) = default;
};

struct ScrambleCommand {
    std::uint64_t count = 0;
    double probability = 0;
    friend bool operator==(const ScrambleCommand&, const ScrambleCommand&) = default;
};

struct BurstCommand {
    std::uint64_t count = 0;
    double probability = 0;
    std::uint64_t length = 0;
    friend bool operator==(const BurstCommand&, const BurstCommand&) = default;
};

struct EndCommand {
    friend bool operator==(const EndCommand&, const EndCommand&) = default;
};

using ScriptCommand = std::variant<SleepCommand, ScrambleCommand, BurstCommand, EndCommand>;
using Script = std::vector<ScriptCommand>;

/// Parse failure, carrying the 1-based source line it was detected on
/// (for a missing END, the line just past the end of input).
class ScriptParseError : public std::runtime_error {
public:
    ScriptParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Parses script text. The result always has EndCommand as its last
/// element. Throws ScriptParseError on malformed input: unknown keyword,
/// wrong argument count, malformed number, argument out of range
/// (probabilities within [0, 1], sleep seconds > 0, counts/lengths >= 1),
/// missing END, or trailing commands after END.
Script parse_script(std::string_view text);

/// Reads and parses a script file; throws std::runtime_error if the file
/// cannot be read, ScriptParseError on malformed content.
Script parse_script_file(const std::string& path);

/// Renders one command in canonical script syntax (uppercase keyword,
/// comma-separated decimal arguments).
std::string to_string(const ScriptCommand& command);

/// Renders a whole script, one command per line. parse_script inverts
/// this exactly, including numeric values.
std::string print_script(const Script& script);

} // namespace scrambler
