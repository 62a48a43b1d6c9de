#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frank::cli {

/// Exit statuses of the frankcert tool.
enum Status : int {
  kOk = 0,
  kUsage = 1,         // bad arguments, unreadable or unparseable input
  kPrecondition = 2,  // connectivity/bound preconditions, rejected certificate
  kInternal = 3,      // invariant violation inside the library
};

/// Runs the tool with `args` (args[0] is the program name). JSON results go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace frank::cli
