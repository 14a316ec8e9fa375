#pragma once

#include <string>
#include <vector>

#include "bisym/binary_map.hpp"

namespace bisym {

/// Construct one of the built-in maps on the given domain.
///
/// Accepted names: arithmetic, geometric, harmonic, power(p), exponential(l),
/// min, max, projection-left, projection-right, paper-example-1,
/// paper-example-2. These identifiers are stable: they are what the CLI and
/// the DSL's builtin(...) escape hatch accept.
///
/// Domain rules: geometric and harmonic need lo > 0; power(p) needs lo >= 0,
/// and lo > 0 when p <= 0 (power(0) aliases geometric); exponential rejects
/// l == 0; the two piecewise example maps are fixed on [0, 1].
BinaryMap builtin(const std::string& name, const Interval& domain);

/// Catalog of non-parametric names plus the parametric templates, for
/// diagnostics and sweep tests.
std::vector<std::string> builtin_catalog();

} // namespace bisym
