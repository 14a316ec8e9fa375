#pragma once

#include <iosfwd>

namespace bisym::cli {

inline constexpr const char* kToolVersion = "1.0.0";

// Exit-code protocol: 0 clean, 1 axiom failure (or non-invertible table),
// 2 hypothesis-violated dichotomy, 3 inconclusive dichotomy, 64 usage/config
// errors, 65 DSL parse errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAxiomFailure = 1;
inline constexpr int kExitHypothesisViolated = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;

/// Run the command-line tool in-process. argv follows main() conventions.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bisym::cli
