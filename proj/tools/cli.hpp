#pragma once

#include <iosfwd>

namespace matforms::cli {

/// Exit codes of the command-line front end.
inline constexpr int kOk = 0;
inline constexpr int kNonIdentity = 1;
inline constexpr int kUsage = 2;

/// Parses argv and dispatches; JSON (or --text) goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace matforms::cli
