#ifndef ROOKLAB_REPORT_HPP
#define ROOKLAB_REPORT_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "rooklab/graph.hpp"
#include "rooklab/metrics.hpp"

namespace rooklab {

using Json = nlohmann::ordered_json;

enum class Verdict { Certified, BoundConsistent, Discrepancy, OracleSkipped };
std::string_view verdict_name(Verdict v);

/// One analysed quantity: what the constructions produced, what the closed
/// forms promise, and what brute force found.
struct QuantityRecord {
    std::string name;
    Json constructed;  // null when there is no construction
    std::vector<BoundRecord> bounds;
    Json oracle;       // null when the oracle did not run
    Verdict verdict = Verdict::OracleSkipped;
    std::vector<std::string> notes;  // failed checks, verbatim values, skip reasons
};

struct AnalysisReport {
    GraphSpec spec;
    std::int64_t p = 0;
    std::vector<QuantityRecord> quantities;

    const QuantityRecord* find(std::string_view name) const;
    std::size_t discrepancies() const;
};

inline const std::set<std::string>& oracle_names() {
    static const std::set<std::string> names{"alpha", "gamma", "omega", "chi", "diameter", "spectrum"};
    return names;
}

/// Parses "all", "none" or a comma list drawn from oracle_names().
std::set<std::string> parse_oracle_selection(std::string_view text);

AnalysisReport analyze(const GraphSpec& spec, const std::set<std::string>& oracles, const Limits& limits = {});

Json to_json(const BoundRecord& b);
Json to_json(const QuantityRecord& q);
Json to_json(const AnalysisReport& r);
Json spec_json(const GraphSpec& spec);
Json vertex_json(const Vertex& v);

}  // namespace rooklab

#endif
