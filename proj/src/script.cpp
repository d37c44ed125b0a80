#include "scrambler/script.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace scrambler {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Decimal integer or decimal fraction: digits with at most one '.', no
// sign, no exponent.
bool is_number_token(std::string_view t) {
    if (t.empty()) return false;
    bool digit = false;
    bool dot = false;
    for (const char c : t) {
        if (c >= '0' && c <= '9') {
            digit = true;
        } else if (c == '.') {
            if (dot) return false;
            dot = true;
        } else {
            return false;
        }
    }
    return digit;
}

double parse_fraction(std::string_view token, int line) {
    if (!is_number_token(token))
        throw ScriptParseError(line, "malformed number '" + std::string(token) + "'");
    return std::strtod(std::string(token).c_str(), nullptr);
}

std::uint64_t parse_count(std::string_view token, int line, const std::string& what) {
    if (!is_number_token(token) || token.find('.') != std::string_view::npos)
        throw ScriptParseError(line, "malformed number '" + std::string(token) +
                                         "': " + what + " must be a decimal integer");
    std::uint64_t value = 0;
    const auto result = std::from_chars(token.data(), token.data() + token.size(), value);
    if (result.ec != std::errc() || result.ptr != token.data() + token.size())
        throw ScriptParseError(line, "malformed number '" + std::string(token) + "': " + what +
                                         " out of range");
    return value;
}

double parse_probability(std::string_view token, int line) {
    const double p = parse_fraction(token, line);
    if (p < 0.0 || p > 1.0)
        throw ScriptParseError(line, "probability " + std::string(token) +
                                         " outside [0, 1]");
    return p;
}

std::vector<std::string_view> split_args(std::string_view rest) {
    std::vector<std::string_view> args;
    if (trim(rest).empty()) return args;
    std::size_t pos = 0;
    for (;;) {
        const auto comma = rest.find(',', pos);
        args.push_back(trim(rest.substr(pos, comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return args;
}

void check_arity(const std::vector<std::string_view>& args, std::size_t want,
                 std::string_view keyword, int line) {
    if (args.size() != want)
        throw ScriptParseError(line, std::string(keyword) + " takes " + std::to_string(want) +
                                         " argument(s), got " + std::to_string(args.size()));
}

// Shortest round-trip decimal without exponent notation, so printed
// scripts stay inside the grammar.
std::string format_decimal(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    std::string s(buf, result.ptr);
    const auto epos = s.find('e');
    if (epos == std::string::npos) return s;

    std::string digits = s.substr(0, epos);
    const int exponent = std::atoi(s.c_str() + epos + 1);
    int frac = 0;
    if (const auto dot = digits.find('.'); dot != std::string::npos) {
        frac = static_cast<int>(digits.size() - dot - 1);
        digits.erase(dot, 1);
    }
    const int shift = exponent - frac; // value = digits * 10^shift
    if (shift >= 0) return digits + std::string(static_cast<std::size_t>(shift), '0');
    const int int_digits = static_cast<int>(digits.size()) + shift;
    if (int_digits > 0)
        return digits.substr(0, static_cast<std::size_t>(int_digits)) + "." +
               digits.substr(static_cast<std::size_t>(int_digits));
    return "0." + std::string(static_cast<std::size_t>(-int_digits), '0') + digits;
}

} // namespace

Script parse_script(std::string_view text) {
    Script script;
    bool ended = false;
    int line_no = 0;
    std::size_t pos = 0;

    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;

        if (const auto comment = raw.find("//"); comment != std::string_view::npos)
            raw = raw.substr(0, comment);
        raw = trim(raw);
        if (raw.empty()) continue;
        if (ended) throw ScriptParseError(line_no, "command after END");

        const auto ws = raw.find_first_of(" \t");
        const std::string_view keyword = ws == std::string_view::npos ? raw : raw.substr(0, ws);
        const std::string_view rest =
            ws == std::string_view::npos ? std::string_view{} : raw.substr(ws + 1);
        const auto args = split_args(rest);

        if (keyword == "SLEEP") {
            check_arity(args, 1, keyword, line_no);
            const double seconds = parse_fraction(args[0], line_no);
            if (!(seconds > 0.0))
                throw ScriptParseError(line_no, "sleep seconds must be positive");
            script.push_back(SleepCommand{seconds});
        } else if (keyword == "SCRAMBLE") {
            check_arity(args, 2, keyword, line_no);
            const std::uint64_t count = parse_count(args[0], line_no, "repetition count");
            const double p = parse_probability(args[1], line_no);
            script.push_back(ScrambleCommand{count, p});
        } else if (keyword == "BURST") {
            check_arity(args, 3, keyword, line_no);
            const std::uint64_t count = parse_count(args[0], line_no, "repetition count");
            const double p = parse_probability(args[1], line_no);
            const std::uint64_t length = parse_count(args[2], line_no, "burst length");
            if (length == 0) throw ScriptParseError(line_no, "burst length must be at least 1");
            script.push_back(BurstCommand{count, p, length});
        } else if (keyword == "END") {
            check_arity(args, 0, keyword, line_no);
            script.push_back(EndCommand{});
            ended = true;
        } else {
            throw ScriptParseError(line_no, "unknown keyword '" + std::string(keyword) + "'");
        }
    }

    if (!ended) throw ScriptParseError(line_no + 1, "missing END");
    return script;
}

Script parse_script_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read script file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_script(buffer.str());
}

std::string to_string(const ScriptCommand& command) {
    struct Printer {
        std::string operator()(const SleepCommand& c) const {
            return "SLEEP " + format_decimal(c.seconds);
        }
        std::string operator()(const ScrambleCommand& c) const {
            return "SCRAMBLE " + std::to_string(c.count) + ", " + format_decimal(c.probability);
        }
        std::string operator()(const BurstCommand& c) const {
            return "BURST " + std::to_string(c.count) + ", " + format_decimal(c.probability) +
                   ", " + std::to_string(c.length);
        }
        std::string operator()(const EndCommand&) const { return "END"; }
    };
    return std::visit(Printer{}, command);
}

std::string print_script(const Script& script) {
    std::string out;
    for (const auto& command : script) {
        out += to_string(command);
        out += '\n';
    }
    return out;
}

} // namespace scrambler
