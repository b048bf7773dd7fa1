#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordpar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// A parsed command line: one subcommand path and its flag values.
struct Invocation {
    /// e.g. {"separate"} or {"gtsp", "solve"}.
    std::vector<std::string> command;
    /// Flag name without dashes -> value; switches carry "true".
    std::map<std::string, std::string> flags;

    friend bool operator==(const Invocation&, const Invocation&) = default;
};

/// Thrown for malformed command lines and flag values.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses arguments (without the program name). Throws UsageError.
Invocation parse(const std::vector<std::string>& args);
/// Arguments that parse back to the same invocation.
std::vector<std::string> render(const Invocation& invocation);

/**
 * Runs one command. Returns 0 on success, 1 on domain errors and 2 on usage
 * errors; diagnostics go to `err` as a single line.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordpar::cli
