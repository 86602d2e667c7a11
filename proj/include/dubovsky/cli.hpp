#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dubovsky/analysis.hpp"

namespace dubovsky {

enum ExitStatus : int { kExitOk = 0, kExitUsage = 1, kExitRuntime = 2 };

/// Subcommands: presets, run, analyze, sweep. Diagnostics go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience form; args[0] is the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// key=value lines followed by a one-line JSON summary.
std::string format_report(const RegimeReport& report, const std::string& label);

}  // namespace dubovsky
