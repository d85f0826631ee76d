#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gkm {
namespace cli {

// Parses the arguments (program name excluded) and runs one subcommand.
// Returns 0 on success, 1 when a requested check fails, 2 on bad input or
// usage, 3 when a computation reports a diagnostic.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cli
} // namespace gkm
