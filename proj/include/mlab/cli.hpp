#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlab {

/// Command-line entry point; args excludes the program name.
/// Exit codes: 0 all reports pass or skip, 1 some report failed, 2 bad arguments or a hard error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlab
