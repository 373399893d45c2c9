#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polarmin::cli {

enum Exit : int { Ok = 0, Parse = 2, Geometry = 3, NoStart = 4, Violation = 5 };

/// Runs one invocation; args exclude the program name. JSON goes to `out`
/// (or the --output file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polarmin::cli
