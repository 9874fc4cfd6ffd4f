#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matchbounds::cli {

/// Runs one CLI invocation. Exit code 0 on success, 1 on invalid input or
/// usage, 2 when a requested verification reports violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace matchbounds::cli
