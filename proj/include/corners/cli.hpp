#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace corners::cli {

/// Runs one verb (`args` excludes the program name). Returns 0 on success,
/// 1 on a domain error, 2 on malformed input or usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corners::cli
