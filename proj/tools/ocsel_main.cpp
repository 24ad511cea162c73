#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ocsel/approx.hpp"
#include "ocsel/combinatorics.hpp"
#include "ocsel/exact.hpp"
#include "ocsel/io.hpp"
#include "ocsel/reductions.hpp"
#include "ocsel/scoring.hpp"
#include "ocsel/special.hpp"

using namespace ocsel;

namespace {

// exit codes: 0 ok, 1 parse error, 2 infeasible parameters or structure
// violation, 3 size-cap refusal, 4 verification discrepancy
constexpr int kExitParse = 1;
constexpr int kExitQuery = 2;
constexpr int kExitCap = 3;
constexpr int kExitVerify = 4;

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        write_file(path, content);
}

struct SolveOpts {
    std::string instance_path;
    std::string algorithm = "auto";
    std::string epsilon = "1/2";
    int sample_size = 0; // 0: derived default
    std::string mode = "exhaustive";
    int trials = 64;
    std::uint64_t seed = 0;
    int threads = 1;
    int cap_m = 30;
    int cap_n = 25;
    std::string output;
    bool timing = false;
};

ApproxConfig approx_config(const SolveOpts& o) {
    ApproxConfig cfg;
    cfg.epsilon = parse_rational(o.epsilon);
    if (o.sample_size > 0) cfg.sample_size = o.sample_size;
    if (o.mode == "exhaustive")
        cfg.mode = ApproxConfig::Mode::ExhaustiveSubsets;
    else if (o.mode == "monte-carlo")
        cfg.mode = ApproxConfig::Mode::MonteCarlo;
    else
        throw QueryError("unknown sampling mode '" + o.mode + "'");
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    return cfg;
}

SolverReport run_algorithm(const std::string& algo, const Election& e,
                           const OutlierQuery& q, const SolveOpts& o) {
    ExactCaps caps{o.cap_m, o.cap_n};
    if (algo == "committee-enum") return solve_committee_enum(e, q, o.threads, caps);
    if (algo == "voterset-enum") return solve_voterset_enum(e, q, o.threads, caps);
    if (algo == "oracle") return brute_force_oracle(e, q);
    if (algo == "eps-mbar") return approx_eps_mbar(e, q, approx_config(o), o.threads);
    if (algo == "sampling") return approx_sampling(e, q, approx_config(o), o.threads);
    if (algo == "auto") {
        if (q.rule == ScoringRule::Minisum) {
            StructureClass s = detect_structure(e);
            if (s == StructureClass::SingleApprovalVotes || s == StructureClass::Both)
                return solve_single_approval_greedy(e, q);
            if (s == StructureClass::SingleApproverCandidates)
                return solve_single_approver_dp(e, q);
        }
        if (e.m <= o.cap_m) return solve_committee_enum(e, q, o.threads, caps);
        if (q.rule == ScoringRule::Minisum)
            return approx_eps_mbar(e, q, approx_config(o), o.threads);
        throw CapError("instance exceeds the exact caps and only minisum has an "
                       "approximation route; raise --cap-m to force enumeration");
    }
    throw QueryError("unknown algorithm '" + algo + "'");
}

int cmd_solve(const SolveOpts& o) {
    InstanceDoc doc = parse_instance(read_file(o.instance_path));
    SolverReport rep = run_algorithm(o.algorithm, doc.election, doc.query, o);
    emit(o.output, serialize_report(rep, doc.election, doc.query, o.timing));
    std::fprintf(stderr, "%s: score %lld, %llu nodes, %.2f ms\n", rep.algorithm.c_str(),
                 rep.solution.score, static_cast<unsigned long long>(rep.nodes_explored),
                 rep.elapsed_ms);
    return 0;
}

struct DecideOpts {
    std::string instance_path;
    long long target = 0;
    bool target_given = false;
    int threads = 1;
    int cap_n = 25;
    std::string output;
};

int cmd_decide(const DecideOpts& o) {
    InstanceDoc doc = parse_instance(read_file(o.instance_path));
    OutlierQuery q = doc.query;
    if (o.target_given) q.target = o.target;
    if (!q.target)
        throw QueryError("decide needs a target score (instance field or --target)");

    Decision d = decide_minisum_fpt(doc.election, q, o.threads, ExactCaps{30, o.cap_n});

    nlohmann::ordered_json out;
    out["schema_version"] = 1;
    out["target"] = *q.target;
    out["answer"] = d.yes ? "yes" : "no";
    if (d.yes) {
        nlohmann::ordered_json w;
        w["committee"] = d.witness->committee;
        w["non_outliers"] = d.witness->non_outliers;
        w["score"] = d.witness->score;
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    emit(o.output, out.dump(2) + "\n");
    return 0;
}

struct GenerateOpts {
    std::string reduction;
    std::string graph;
    int k = 0;
    std::string rule; // empty: per-reduction default
    std::string output;
};

int cmd_generate(const GenerateOpts& o) {
    Graph g = Graph::load(o.graph);

    auto rule_or = [&](ScoringRule def) {
        if (o.rule.empty()) return def;
        auto r = rule_from_name(o.rule);
        if (!r) throw QueryError("unknown rule '" + o.rule + "'");
        return *r;
    };

    ReducedInstance ri;
    if (o.reduction == "vc3")
        ri = reduce_vc3(g, o.k, rule_or(ScoringRule::Minisum));
    else if (o.reduction == "clique-edge-complement")
        ri = reduce_clique_edges_as_votes(g, o.k, rule_or(ScoringRule::Minisum),
                                          EdgeVoteVariant::Complement);
    else if (o.reduction == "clique-edge-incident")
        ri = reduce_clique_edges_as_votes(g, o.k, rule_or(ScoringRule::Minisum),
                                          EdgeVoteVariant::Incident);
    else if (o.reduction == "clique-vertex-nonincident")
        ri = reduce_clique_vertices_as_votes(g, o.k, rule_or(ScoringRule::Minisum),
                                             VertexVoteVariant::NonIncident);
    else if (o.reduction == "clique-vertex-incident")
        ri = reduce_clique_vertices_as_votes(g, o.k, rule_or(ScoringRule::Minisum),
                                             VertexVoteVariant::Incident);
    else if (o.reduction == "clique-net-dummy") {
        ScoringRule r = rule_or(ScoringRule::NetDisapproval);
        if (r != ScoringRule::NetDisapproval)
            throw QueryError("clique-net-dummy is a net-disapproval construction");
        ri = reduce_clique_net_dummy(g, o.k);
    } else if (o.reduction == "biclique") {
        ScoringRule r = rule_or(ScoringRule::Disapproval);
        if (r != ScoringRule::Disapproval)
            throw QueryError("biclique is a disapproval construction");
        ri = reduce_biclique(g, o.k);
    } else {
        throw QueryError("unknown reduction '" + o.reduction + "'");
    }

    emit(o.output, serialize_instance(ri));
    return 0;
}

struct VerifyOpts {
    std::string instance_path;
    std::string solution_path;
    bool against_oracle = false;
};

int cmd_verify(const VerifyOpts& o) {
    InstanceDoc doc = parse_instance(read_file(o.instance_path));
    ReportDoc rep = parse_report(read_file(o.solution_path));
    const Election& e = doc.election;
    const OutlierQuery& q = doc.query;

    int failures = 0;
    auto fail = [&](const std::string& what) {
        std::fprintf(stderr, "verify: %s\n", what.c_str());
        ++failures;
    };

    if (rep.m != e.m) fail("instance.m mismatch");
    if (rep.n != e.n()) fail("instance.n mismatch");
    if (rep.rule != q.rule) fail("instance.rule mismatch");
    if (rep.m_star != q.m_star) fail("instance.m_star mismatch");
    if (rep.n_bar != q.n_bar) fail("instance.n_bar mismatch");

    const Solution& sol = rep.solution;
    if (static_cast<int>(sol.committee.size()) != q.m_star)
        fail("committee size " + std::to_string(sol.committee.size()) +
             " != m_star " + std::to_string(q.m_star));
    for (std::size_t i = 0; i < sol.committee.size(); ++i) {
        int c = sol.committee[i];
        if (c < 0 || c >= e.m) fail("committee[" + std::to_string(i) + "] out of range");
        if (i > 0 && sol.committee[i - 1] >= c)
            fail("committee indices not strictly increasing");
    }
    for (std::size_t i = 0; i < sol.non_outliers.size(); ++i) {
        int v = sol.non_outliers[i];
        if (v < 0 || v >= e.n())
            fail("non_outliers[" + std::to_string(i) + "] out of range");
        if (i > 0 && sol.non_outliers[i - 1] >= v)
            fail("non-outlier indices not strictly increasing");
    }
    if (static_cast<int>(sol.non_outliers.size()) < q.n_star(e.n()))
        fail("non-outlier set smaller than n_star");

    if (failures == 0) {
        Score actual = recompute_score(q.rule, e, sol.committee, sol.non_outliers);
        if (actual != sol.score)
            fail("score field " + std::to_string(sol.score) + " recomputes to " +
                 std::to_string(actual));
    }

    if (failures == 0 && o.against_oracle) {
        SolverReport oracle = brute_force_oracle(e, q);
        if (rep.exact && sol.score != oracle.solution.score)
            fail("claimed exact score " + std::to_string(sol.score) +
                 " but optimum is " + std::to_string(oracle.solution.score));
        if (sol.score < oracle.solution.score)
            fail("score beats the oracle optimum; solution cannot be feasible");
    }

    if (failures > 0) return kExitVerify;
    std::fprintf(stderr, "verify: ok\n");
    return 0;
}

struct BenchOpts {
    std::string suite = "random";
    int count = 20;
    std::uint64_t seed = 1;
    int max_m = 8;
    int max_n = 8;
    std::string epsilon = "1/2";
    std::string output;
};

Election random_election(SplitMix64& rng, int max_m, int max_n) {
    Election e;
    e.m = 2 + static_cast<int>(rng.below(max_m - 1));
    int n = 2 + static_cast<int>(rng.below(max_n - 1));
    for (int i = 0; i < n; ++i) {
        Bitset v(e.m);
        for (int c = 0; c < e.m; ++c)
            if (rng.below(2)) v.set(c);
        e.votes.push_back(std::move(v));
    }
    return e;
}

int cmd_bench_random(const BenchOpts& o, std::ostringstream& csv) {
    csv << "suite,id,algorithm,m,n,m_star,n_bar,rule,score,opt,ratio,elapsed_ms\n";
    SplitMix64 rng(o.seed);
    ApproxConfig cfg;
    cfg.epsilon = parse_rational(o.epsilon);

    for (int id = 0; id < o.count; ++id) {
        Election e = random_election(rng, std::min(o.max_m, kOracleMaxCandidates),
                                     std::min(o.max_n, kOracleMaxVotes));
        OutlierQuery q;
        q.rule = ScoringRule::Minisum;
        q.m_star = static_cast<int>(rng.below(e.m + 1));
        q.n_bar = static_cast<int>(rng.below(e.n()));

        SolverReport oracle = brute_force_oracle(e, q);
        const Score opt = oracle.solution.score;

        ApproxConfig sampling_cfg = cfg;
        sampling_cfg.sample_size = std::max(1, q.n_star(e.n()));

        std::vector<SolverReport> reps;
        reps.push_back(solve_committee_enum(e, q));
        reps.push_back(solve_voterset_enum(e, q));
        reps.push_back(std::move(oracle));
        reps.push_back(approx_eps_mbar(e, q, cfg));
        reps.push_back(approx_sampling(e, q, sampling_cfg));

        for (const SolverReport& r : reps) {
            double ratio = 1.0;
            if (opt != 0)
                ratio = static_cast<double>(r.solution.score) / static_cast<double>(opt);
            else if (r.solution.score != 0)
                ratio = -1.0; // undefined against a zero optimum
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6f,%.3f", ratio, r.elapsed_ms);
            csv << "random," << id << ',' << r.algorithm << ',' << e.m << ',' << e.n()
                << ',' << q.m_star << ',' << q.n_bar << ',' << rule_name(q.rule) << ','
                << r.solution.score << ',' << opt << ',' << buf << "\n";
        }
    }
    return 0;
}

int cmd_bench_reductions(const BenchOpts& o, std::ostringstream& csv) {
    csv << "suite,reduction,graph,k,rule,m,n,t,score,decision,expected,elapsed_ms\n";

    const std::vector<std::string> graphs = {
        "complete:4", "complete:5",         "cycle:5",
        "cycle:6",    "path:3",             "path:4",
        "complete_bipartite:2:2",           "complete_bipartite:3:3",
        "random_regular:8:3:1",             "random_regular:10:3:2",
    };

    for (const std::string& spec : graphs) {
        Graph g = Graph::from_family(spec);
        for (int k = 2; k <= g.vertex_count; ++k) {
            std::vector<ReducedInstance> instances;
            auto try_add = [&](auto&& make) {
                try {
                    instances.push_back(make());
                } catch (const QueryError&) {
                    // reduction preconditions not met for this (graph, k)
                }
            };
            for (ScoringRule rule : {ScoringRule::Minisum, ScoringRule::Disapproval,
                                     ScoringRule::NetDisapproval}) {
                try_add([&] { return reduce_vc3(g, k, rule); });
                try_add([&] {
                    return reduce_clique_edges_as_votes(g, k, rule,
                                                        EdgeVoteVariant::Complement);
                });
                try_add([&] {
                    return reduce_clique_edges_as_votes(g, k, rule,
                                                        EdgeVoteVariant::Incident);
                });
                try_add([&] {
                    return reduce_clique_vertices_as_votes(g, k, rule,
                                                           VertexVoteVariant::NonIncident);
                });
                try_add([&] {
                    return reduce_clique_vertices_as_votes(g, k, rule,
                                                           VertexVoteVariant::Incident);
                });
            }
            try_add([&] { return reduce_clique_net_dummy(g, k); });
            try_add([&] { return reduce_biclique(g, k); });

            for (const ReducedInstance& ri : instances) {
                bool expected;
                if (ri.reduction == "vc3")
                    expected = min_vertex_cover_size(g) <= ri.k;
                else if (ri.reduction == "biclique")
                    expected = has_biclique(g, ri.k);
                else
                    expected = has_clique(g, ri.k);

                SolverReport rep;
                bool oracle_ok = ri.election.m <= kOracleMaxCandidates &&
                                 ri.election.n() <= kOracleMaxVotes;
                if (oracle_ok)
                    rep = brute_force_oracle(ri.election, ri.query);
                else
                    rep = solve_committee_enum(ri.election, ri.query);
                bool decision = rep.solution.score <= *ri.query.target;

                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f", rep.elapsed_ms);
                csv << "reductions," << ri.reduction << ',' << spec << ',' << ri.k << ','
                    << rule_name(ri.query.rule) << ',' << ri.election.m << ','
                    << ri.election.n() << ',' << *ri.query.target << ','
                    << rep.solution.score << ',' << (decision ? "yes" : "no") << ','
                    << (expected ? "yes" : "no") << ',' << buf << "\n";
            }
        }
    }
    return 0;
}

int cmd_bench(const BenchOpts& o) {
    std::ostringstream csv;
    int rc;
    if (o.suite == "random")
        rc = cmd_bench_random(o, csv);
    else if (o.suite == "reductions")
        rc = cmd_bench_reductions(o, csv);
    else
        throw QueryError("unknown suite '" + o.suite + "'");
    emit(o.output, csv.str());
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"approval-ballot committee selection with outliers"};
    app.require_subcommand(1);

    SolveOpts so;
    CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("--instance", so.instance_path, "instance JSON file")->required();
    solve->add_option("--algorithm", so.algorithm,
                      "committee-enum | voterset-enum | oracle | eps-mbar | sampling | auto");
    solve->add_option("--epsilon", so.epsilon, "rational epsilon, e.g. 1/3");
    solve->add_option("--sample-size", so.sample_size,
                      "sampling subset size r (0: derived from epsilon)");
    solve->add_option("--mode", so.mode, "exhaustive | monte-carlo");
    solve->add_option("--trials", so.trials, "monte-carlo trials");
    solve->add_option("--seed", so.seed, "seed for monte-carlo sampling");
    solve->add_option("--threads", so.threads, "worker threads");
    solve->add_option("--cap-m", so.cap_m, "committee enumeration cap on m");
    solve->add_option("--cap-n", so.cap_n, "voter-set enumeration cap on n");
    solve->add_option("--output", so.output, "report path (default stdout)");
    solve->add_flag("--timing", so.timing, "include wall-clock time in the report");

    DecideOpts do_;
    CLI::App* decide = app.add_subcommand("decide", "minisum decision procedure");
    decide->add_option("--instance", do_.instance_path, "instance JSON file")->required();
    CLI::Option* target_opt =
        decide->add_option("--target", do_.target, "target score (overrides instance)");
    decide->add_option("--threads", do_.threads, "worker threads");
    decide->add_option("--cap-n", do_.cap_n, "voter-set enumeration cap on n");
    decide->add_option("--output", do_.output, "answer path (default stdout)");

    GenerateOpts go;
    CLI::App* generate = app.add_subcommand("generate", "emit a reduction instance");
    generate->add_option("--reduction", go.reduction,
                         "vc3 | clique-edge-complement | clique-edge-incident | "
                         "clique-vertex-nonincident | clique-vertex-incident | "
                         "clique-net-dummy | biclique")
        ->required();
    generate->add_option("--graph", go.graph, "edge-list file or family spec")->required();
    generate->add_option("--k", go.k, "solution size parameter")->required();
    generate->add_option("--rule", go.rule, "scoring rule (per-reduction default)");
    generate->add_option("--output", go.output, "instance path (default stdout)");

    VerifyOpts vo;
    CLI::App* verify = app.add_subcommand("verify", "re-check a report against an instance");
    verify->add_option("--instance", vo.instance_path, "instance JSON file")->required();
    verify->add_option("--solution", vo.solution_path, "report JSON file")->required();
    verify->add_flag("--against-oracle", vo.against_oracle,
                     "re-solve within oracle caps and check optimality claims");

    BenchOpts bo;
    CLI::App* bench = app.add_subcommand("bench", "benchmark CSV");
    bench->add_option("--suite", bo.suite, "random | reductions");
    bench->add_option("--count", bo.count, "random suite: number of instances");
    bench->add_option("--seed", bo.seed, "random suite: base seed");
    bench->add_option("--max-m", bo.max_m, "random suite: max candidates");
    bench->add_option("--max-n", bo.max_n, "random suite: max votes");
    bench->add_option("--epsilon", bo.epsilon, "epsilon for the approximators");
    bench->add_option("--output", bo.output, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (solve->parsed()) return cmd_solve(so);
        if (decide->parsed()) {
            do_.target_given = target_opt->count() > 0;
            return cmd_decide(do_);
        }
        if (generate->parsed()) return cmd_generate(go);
        if (verify->parsed()) return cmd_verify(vo);
        if (bench->parsed()) return cmd_bench(bo);
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParse;
    } catch (const CapError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCap;
    } catch (const QueryError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitQuery;
    }
    return 0;
}
