#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace bisym {

/// A single violating input tuple with both evaluated sides.
struct Witness {
    std::vector<double> inputs;
    double lhs = 0.0;
    double rhs = 0.0;
    double diff = 0.0;
    std::string note;
};

enum class Verdict { HoldsOnSample, Fails };

const char* verdict_name(Verdict v);

/// Witness lists are truncated at this many entries; truncated_count always
/// carries the total number of violations found.
inline constexpr std::size_t kMaxWitnesses = 32;

struct PropertyReport {
    std::string property;
    Verdict verdict = Verdict::HoldsOnSample;
    double tolerance = 0.0;
    std::uint64_t samples_checked = 0;
    std::vector<Witness> witnesses;
    std::uint64_t truncated_count = 0; // total violations, shown or not
    std::map<std::string, double> stats;

    bool holds() const { return verdict == Verdict::HoldsOnSample; }
};

nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const PropertyReport& r);

} // namespace bisym
