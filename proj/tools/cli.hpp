#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace howe::cli {

/// Runs one command. Returns 0 on success, 1 on invalid input, 2 when an
/// internal consistency check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace howe::cli
