#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toughham {

/// Runs one subcommand. `args` excludes the program name. Reports go to `out`
/// as tab-separated lines under a header; diagnostics go to `err`.
/// Returns 0 on a clean run, 1 when violations or bad records were found, 2 on
/// a usage error.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace toughham
