#pragma once

#include <iosfwd>

namespace rmpc::cli {

/// Parses flags, runs the sweep and writes the result. Returns the process
/// exit code; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& err);

}  // namespace rmpc::cli
