#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsfan::cli {

/// Runs one bsfan invocation. args excludes the program name.
/// Returns 0 on success, 1 when a table fails a cone or positivity check
/// (certificate on `out`), 2 on usage or input errors (diagnostic on `err`).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsfan::cli
