#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coderco {

// Full command-line surface. args excludes the program name. Returns the
// process exit code: 0 = answered (including "obstructed"/"blocked"),
// 1 = axiom failure or overflow, 2 = parse/usage error, 3 = internal error.
// Reads CODERCO_INDEX_BOUND / CODERCO_MAX_DEGREE / CODERCO_SEED into the
// process config before dispatching.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coderco
