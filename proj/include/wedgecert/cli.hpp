#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wedgecert {

// Runs one CLI invocation.  Returns 0 on success, 1 on usage/parse/
// precondition/resource errors, 2 on a certified-identity violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wedgecert
