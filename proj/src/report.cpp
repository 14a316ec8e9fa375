#include "bisym/report.hpp"

namespace bisym {

const char* verdict_name(Verdict v) {
    return v == Verdict::HoldsOnSample ? "holds-on-sample" : "fails";
}

nlohmann::json to_json(const Witness& w) {
    nlohmann::json j{
        {"inputs", w.inputs},
        {"lhs", w.lhs},
        {"rhs", w.rhs},
        {"diff", w.diff},
    };
    if (!w.note.empty())
        j["note"] = w.note;
    return j;
}

nlohmann::json to_json(const PropertyReport& r) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back(to_json(w));
    nlohmann::json j{
        {"property", r.property},
        {"verdict", verdict_name(r.verdict)},
        {"tolerance", r.tolerance},
        {"samples_checked", r.samples_checked},
        {"witnesses", std::move(witnesses)},
        {"truncated_count", r.truncated_count},
    };
    if (!r.stats.empty())
        j["stats"] = r.stats;
    return j;
}

} // namespace bisym
