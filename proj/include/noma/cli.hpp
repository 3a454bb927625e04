#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace noma::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kBadArguments = 2,
    kInfeasible = 3,
    kOutputFailure = 4,
};

/// Environment variable holding the default sweep seed.
inline constexpr const char* kSeedEnv = "NOMA_SEED";

/// Runs one command line (args excludes the program name). Tables go to
/// `out` unless a subcommand writes to a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads `key = value` lines; '#' starts a comment. Throws std::runtime_error
/// on unreadable files or lines without '='.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

}  // namespace noma::cli
