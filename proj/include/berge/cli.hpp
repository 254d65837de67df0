#pragma once

#include <iosfwd>

namespace berge::cli {

enum Exit : int { kOk = 0, kCounterexamples = 1, kUsage = 2, kMalformed = 3, kBudget = 4 };

/// Default vertex-count guard; BERGE_MAX_N or --max-n override it, up to
/// kMaxVertices.
inline constexpr int kDefaultMaxN = 16;

/// Runs one command line. Results go to `out` as JSON (one line per input
/// graph), diagnostics to `err`; the return value is the exit status.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace berge::cli
