#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace roughset::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kDataError = 2,
    kInternalError = 3,
};

/// Runs one command line. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory holding fixtures/ and rules/: $ROUGHSET_FIXTURES when set,
/// otherwise the data directory compiled into the build.
std::filesystem::path data_dir();

/// `path` as given when it exists, otherwise relative to data_dir().
std::filesystem::path resolve_input(const std::filesystem::path& path);

}  // namespace roughset::cli
