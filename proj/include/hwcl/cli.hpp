#pragma once

#include <iosfwd>

namespace hwcl {

// Full command-line front end. Returns the process exit code:
//   0 success, 2 usage/parse error, 3 size cap exceeded,
//   4 numerical contract violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hwcl
