#pragma once

#include <iosfwd>

namespace ricmp {

// Command-line front end. Returns the process exit code:
//   0  all assertions hold
//   1  a mathematical assertion failed
//   2  usage or domain error
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ricmp
