#pragma once

#include <map>
#include <string>
#include <vector>

namespace pfb::cli {

enum ExitStatus : int {
    kComputed = 0,
    kUsageError = 1,
    kComputationError = 2,
    kConsistencyViolation = 3,
};

/// A parsed invocation: subcommand plus option values keyed by long name
/// (without dashes). Flags are stored with an empty value.
struct Command {
    std::string subcommand;
    std::map<std::string, std::string> options;

    bool flag(const std::string& name) const { return options.count(name) != 0; }

    /// Subcommand followed by its options in declaration order, e.g.
    /// "irr --q 13 --g 2 --n 6 --json". Parsing it yields an equal Command.
    std::string canonical() const;

    friend bool operator==(const Command&, const Command&) = default;
};

/// Thrown for unknown subcommands, unknown flags and missing options.
struct UsageError {
    std::string message;
    std::string usage;
};

/// Arguments exclude the program name. Throws UsageError.
Command parse_command(const std::vector<std::string>& args);

struct RunResult {
    int status = kComputed;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args);

}  // namespace pfb::cli
