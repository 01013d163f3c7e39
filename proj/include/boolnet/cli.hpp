#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boolnet {

// Runs the command-line front end. Returns 0 on success, 1 on domain errors
// (e.g. a mixing time was requested for a chain that cannot mix), 2 on usage
// errors. All subcommands are thin adapters over the library.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boolnet
