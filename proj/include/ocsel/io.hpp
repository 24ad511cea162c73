#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ocsel/reductions.hpp"
#include "ocsel/types.hpp"

namespace ocsel {

// One instance document: election, query, optional provenance block
// (reduction name, source graph, k, dummy blocks) carried verbatim.
struct InstanceDoc {
    Election election;
    OutlierQuery query;
    nlohmann::ordered_json provenance; // null when absent
};

// Canonical form: fixed key order, each vote's indices sorted ascending,
// outlier budget normalized to n_bar. Semantically equal instances
// serialize to identical bytes.
std::string serialize_instance(const InstanceDoc& doc);
std::string serialize_instance(const ReducedInstance& ri);

// Rejects out-of-range indices, unknown rule names, n_bar >= n and
// schema violations with positioned messages (InputError).
InstanceDoc parse_instance(const std::string& text);

struct ReportDoc {
    std::string algorithm;
    Solution solution;
    bool exact = true;
    std::string bound; // empty for exact algorithms
    std::uint64_t nodes_explored = 0;
    int threads = 1;
    std::optional<std::uint64_t> seed;
    // instance echo, cross-checked by verify
    int m = 0;
    int n = 0;
    ScoringRule rule = ScoringRule::Minisum;
    int m_star = 0;
    int n_bar = 0;
};

// Reports are byte-deterministic; wall-clock timing is only written when
// include_timing is set.
std::string serialize_report(const SolverReport& rep, const Election& e,
                             const OutlierQuery& q, bool include_timing = false);
ReportDoc parse_report(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace ocsel
