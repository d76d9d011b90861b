#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wptk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitVerification = 2;

const std::vector<std::string>& command_names();

/// Runs `command` with the INI file at `config_path`. Summaries go to `out`,
/// diagnostics and warnings to `err`. Returns the process exit code.
int run(const std::string& command, const std::string& config_path, std::ostream& out,
        std::ostream& err);

}  // namespace wptk::cli
