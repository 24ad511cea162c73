#include "ocsel/io.hpp"

#include <fstream>
#include <sstream>

#include "ocsel/scoring.hpp"

namespace ocsel {

using nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

ordered_json instance_to_json(const Election& e, const OutlierQuery& q,
                              const ordered_json& provenance) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["m"] = e.m;
    doc["rule"] = rule_name(q.rule);
    doc["m_star"] = q.m_star;
    doc["n_bar"] = q.n_bar;
    if (q.target) doc["target"] = *q.target;
    ordered_json votes = ordered_json::array();
    for (const Bitset& v : e.votes) votes.push_back(v.to_indices());
    doc["votes"] = std::move(votes);
    if (!provenance.is_null()) doc["provenance"] = provenance;
    return doc;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

[[noreturn]] void field_error(const std::string& where, const std::string& why) {
    throw InputError(where + ": " + why);
}

template <class T>
T require_field(const ordered_json& doc, const std::string& key) {
    if (!doc.contains(key)) field_error(key, "missing field");
    try {
        return doc.at(key).get<T>();
    } catch (const nlohmann::json::exception& ex) {
        field_error(key, ex.what());
    }
}

} // namespace

std::string serialize_instance(const InstanceDoc& doc) {
    doc.election.validate();
    doc.query.validate(doc.election);
    return dump(instance_to_json(doc.election, doc.query, doc.provenance));
}

std::string serialize_instance(const ReducedInstance& ri) {
    ordered_json prov;
    prov["reduction"] = ri.reduction;
    prov["k"] = ri.k;
    ordered_json graph;
    graph["vertex_count"] = ri.source.vertex_count;
    if (ri.source.left_size) graph["left_size"] = *ri.source.left_size;
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : ri.source.edges) edges.push_back({u, v});
    graph["edges"] = std::move(edges);
    prov["graph"] = std::move(graph);
    if (!ri.dummy_candidates.empty()) prov["dummy_candidates"] = ri.dummy_candidates;
    if (!ri.dummy_votes.empty()) prov["dummy_votes"] = ri.dummy_votes;
    return dump(instance_to_json(ri.election, ri.query, prov));
}

InstanceDoc parse_instance(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw InputError(std::string("instance parse error: ") + ex.what());
    }
    if (!doc.is_object()) throw InputError("instance document must be a JSON object");

    int schema = require_field<int>(doc, "schema_version");
    if (schema != kSchemaVersion)
        field_error("schema_version", "unsupported version " + std::to_string(schema));

    InstanceDoc out;
    out.election.m = require_field<int>(doc, "m");
    if (out.election.m < 1) field_error("m", "needs at least one candidate");

    std::string rule = require_field<std::string>(doc, "rule");
    auto parsed_rule = rule_from_name(rule);
    if (!parsed_rule) field_error("rule", "unknown rule name '" + rule + "'");
    out.query.rule = *parsed_rule;

    if (!doc.contains("votes") || !doc.at("votes").is_array())
        field_error("votes", "missing or not an array");
    const auto& votes = doc.at("votes");
    if (votes.empty()) field_error("votes", "needs at least one vote");
    for (std::size_t i = 0; i < votes.size(); ++i) {
        const auto& vote = votes.at(i);
        std::string where = "votes[" + std::to_string(i) + "]";
        if (!vote.is_array()) field_error(where, "vote must be an index array");
        Bitset b(out.election.m);
        for (std::size_t j = 0; j < vote.size(); ++j) {
            if (!vote.at(j).is_number_integer())
                field_error(where + "[" + std::to_string(j) + "]", "not an integer");
            long long c = vote.at(j).get<long long>();
            if (c < 0 || c >= out.election.m)
                field_error(where + "[" + std::to_string(j) + "]",
                            "candidate index " + std::to_string(c) +
                                " out of range [0, " + std::to_string(out.election.m) + ")");
            b.set(static_cast<int>(c));
        }
        out.election.votes.push_back(std::move(b));
    }
    const int n = out.election.n();

    out.query.m_star = require_field<int>(doc, "m_star");
    if (out.query.m_star < 0 || out.query.m_star > out.election.m)
        field_error("m_star", "committee size out of range [0, m]");

    const bool has_nbar = doc.contains("n_bar");
    const bool has_nstar = doc.contains("n_star");
    if (has_nbar == has_nstar)
        throw InputError("exactly one of n_bar and n_star must be given");
    if (has_nbar) {
        out.query.n_bar = require_field<int>(doc, "n_bar");
    } else {
        int n_star = require_field<int>(doc, "n_star");
        out.query.n_bar = n - n_star;
    }
    if (out.query.n_bar < 0 || out.query.n_bar >= n)
        field_error(has_nbar ? "n_bar" : "n_star",
                    "outlier budget must satisfy 0 <= n_bar < n");

    if (doc.contains("target")) {
        if (!doc.at("target").is_number_integer())
            field_error("target", "must be an integer");
        out.query.target = doc.at("target").get<Score>();
    }
    if (doc.contains("provenance")) out.provenance = doc.at("provenance");
    return out;
}

std::string serialize_report(const SolverReport& rep, const Election& e,
                             const OutlierQuery& q, bool include_timing) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["algorithm"] = rep.algorithm;
    doc["score"] = rep.solution.score;
    doc["committee"] = rep.solution.committee;
    doc["non_outliers"] = rep.solution.non_outliers;
    doc["optimal"] = rep.exact;
    if (!rep.exact) {
        if (rep.algorithm == "eps-mbar")
            doc["bound"] = "score <= max(OPT, eps * mbar * OPT)";
        else
            doc["bound"] = "best sampled candidate; score >= OPT";
    }
    doc["nodes_explored"] = rep.nodes_explored;
    doc["threads"] = rep.threads;
    if (rep.seed)
        doc["seed"] = *rep.seed;
    else
        doc["seed"] = nullptr;
    ordered_json inst;
    inst["m"] = e.m;
    inst["n"] = e.n();
    inst["rule"] = rule_name(q.rule);
    inst["m_star"] = q.m_star;
    inst["n_bar"] = q.n_bar;
    doc["instance"] = std::move(inst);
    if (include_timing) doc["elapsed_ms"] = rep.elapsed_ms;
    return dump(doc);
}

ReportDoc parse_report(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw InputError(std::string("report parse error: ") + ex.what());
    }
    if (!doc.is_object()) throw InputError("report document must be a JSON object");
    int schema = require_field<int>(doc, "schema_version");
    if (schema != kSchemaVersion)
        field_error("schema_version", "unsupported version " + std::to_string(schema));

    ReportDoc out;
    out.algorithm = require_field<std::string>(doc, "algorithm");
    out.solution.score = require_field<Score>(doc, "score");
    out.solution.committee = require_field<std::vector<int>>(doc, "committee");
    out.solution.non_outliers = require_field<std::vector<int>>(doc, "non_outliers");
    out.exact = require_field<bool>(doc, "optimal");
    if (doc.contains("bound") && doc.at("bound").is_string())
        out.bound = doc.at("bound").get<std::string>();
    out.nodes_explored = require_field<std::uint64_t>(doc, "nodes_explored");
    out.threads = require_field<int>(doc, "threads");
    if (doc.contains("seed") && !doc.at("seed").is_null())
        out.seed = doc.at("seed").get<std::uint64_t>();

    if (!doc.contains("instance") || !doc.at("instance").is_object())
        field_error("instance", "missing echo block");
    const auto& inst = doc.at("instance");
    out.m = require_field<int>(inst, "m");
    out.n = require_field<int>(inst, "n");
    std::string rule = require_field<std::string>(inst, "rule");
    auto parsed_rule = rule_from_name(rule);
    if (!parsed_rule) field_error("instance.rule", "unknown rule name '" + rule + "'");
    out.rule = *parsed_rule;
    out.m_star = require_field<int>(inst, "m_star");
    out.n_bar = require_field<int>(inst, "n_bar");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
}

} // namespace ocsel
