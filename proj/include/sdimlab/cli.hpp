#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdim::cli {

/// Entry point of the `sdimlab` tool. Returns 0 on success, 1 on domain
/// errors and 2 on usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace sdim::cli
