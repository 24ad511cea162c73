#include "ocsel/exact.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <thread>

#include "ocsel/combinatorics.hpp"
#include "ocsel/scoring.hpp"

namespace ocsel {

namespace {

struct Best {
    bool has = false;
    Solution sol;

    void offer(Solution&& s) {
        if (!has || solution_less(s, sol)) {
            sol = std::move(s);
            has = true;
        }
    }
    void merge(Best&& o) {
        if (o.has) offer(std::move(o.sol));
    }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Splits [0, total) into contiguous chunks, one worker per chunk. Each
// worker reduces to a local (score, committee, votes) minimum; the final
// merge is by the same key, so the result is independent of the worker
// count and of scheduling.
template <class Body>
std::pair<Best, std::uint64_t> run_partitioned(std::uint64_t total, int threads, Body body) {
    if (threads < 1) threads = 1;
    if (static_cast<std::uint64_t>(threads) > total && total > 0)
        threads = static_cast<int>(total);

    if (threads == 1) {
        Best best;
        std::uint64_t nodes = 0;
        body(0, total, best, nodes);
        return {std::move(best), nodes};
    }

    std::vector<Best> bests(threads);
    std::vector<std::uint64_t> nodes(threads, 0);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
        std::uint64_t lo = total * w / threads;
        std::uint64_t hi = total * (w + 1) / threads;
        pool.emplace_back([&, w, lo, hi] { body(lo, hi, bests[w], nodes[w]); });
    }
    for (auto& t : pool) t.join();

    Best best;
    std::uint64_t total_nodes = 0;
    for (int w = 0; w < threads; ++w) {
        best.merge(std::move(bests[w]));
        total_nodes += nodes[w];
    }
    return {std::move(best), total_nodes};
}

std::vector<int> mask_to_indices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return out;
}

} // namespace

SolverReport solve_committee_enum(const Election& e, const OutlierQuery& q,
                                  int threads, ExactCaps caps) {
    e.validate();
    q.validate(e);
    if (e.m > caps.committee_enum_m)
        throw CapError("committee enumeration refuses m=" + std::to_string(e.m) +
                       " (cap " + std::to_string(caps.committee_enum_m) + ")");

    auto t0 = Clock::now();
    const int n_star = q.n_star(e.n());
    const std::uint64_t total = binomial(e.m, q.m_star);

    auto [best, nodes] = run_partitioned(
        total, threads,
        [&](std::uint64_t lo, std::uint64_t hi, Best& acc, std::uint64_t& cnt) {
            if (lo >= hi) return;
            std::vector<int> comb = unrank_combination(e.m, q.m_star, lo);
            for (std::uint64_t r = lo; r < hi; ++r) {
                Bitset mask = Bitset::from_indices(e.m, comb);
                auto [votes, score] =
                    best_nonoutliers_for_committee(q.rule, e, mask, n_star);
                ++cnt;
                acc.offer(Solution{comb, std::move(votes), score});
                if (r + 1 < hi) next_combination(comb, e.m);
            }
        });

    SolverReport rep;
    rep.solution = std::move(best.sol);
    rep.algorithm = "committee-enum";
    rep.nodes_explored = nodes;
    rep.threads = threads < 1 ? 1 : threads;
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

SolverReport solve_voterset_enum(const Election& e, const OutlierQuery& q,
                                 int threads, ExactCaps caps) {
    e.validate();
    q.validate(e);
    const int n = e.n();
    if (n > caps.voterset_enum_n)
        throw CapError("voter-set enumeration refuses n=" + std::to_string(n) +
                       " (cap " + std::to_string(caps.voterset_enum_n) + ")");

    auto t0 = Clock::now();
    const int n_star = q.n_star(n);

    Best best;
    std::uint64_t nodes = 0;

    auto evaluate = [&](const std::vector<int>& subset, Best& acc) {
        std::vector<int> committee =
            best_committee_for_votes(q.rule, e, subset, q.m_star);
        Bitset cmask = Bitset::from_indices(e.m, committee);
        Score s = total_score(q.rule, cmask, e, subset);
        acc.offer(Solution{std::move(committee), subset, s});
    };

    if (q.rule != ScoringRule::NetDisapproval) {
        // nonnegative per-vote scores: the optimum uses exactly n* votes
        const std::uint64_t total = binomial(n, n_star);
        auto [b, cnt] = run_partitioned(
            total, threads,
            [&](std::uint64_t lo, std::uint64_t hi, Best& acc, std::uint64_t& c) {
                if (lo >= hi) return;
                std::vector<int> comb = unrank_combination(n, n_star, lo);
                for (std::uint64_t r = lo; r < hi; ++r) {
                    evaluate(comb, acc);
                    ++c;
                    if (r + 1 < hi) next_combination(comb, n);
                }
            });
        best = std::move(b);
        nodes = cnt;
    } else {
        // negative votes make larger non-outlier sets profitable: scan
        // every subset of size >= n*
        if (n > 62)
            throw CapError("net-disapproval voter-set enumeration needs n <= 62");
        const std::uint64_t total = std::uint64_t{1} << n;
        auto [b, cnt] = run_partitioned(
            total, threads,
            [&](std::uint64_t lo, std::uint64_t hi, Best& acc, std::uint64_t& c) {
                for (std::uint64_t mask = lo; mask < hi; ++mask) {
                    if (__builtin_popcountll(mask) < n_star) continue;
                    evaluate(mask_to_indices(mask), acc);
                    ++c;
                }
            });
        best = std::move(b);
        nodes = cnt;
    }

    SolverReport rep;
    rep.solution = std::move(best.sol);
    rep.algorithm = "voterset-enum";
    rep.nodes_explored = nodes;
    rep.threads = threads < 1 ? 1 : threads;
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Decision decide_minisum_fpt(const Election& e, const OutlierQuery& q,
                            int threads, ExactCaps caps) {
    e.validate();
    q.validate(e);
    if (q.rule != ScoringRule::Minisum)
        throw QueryError("decide_minisum_fpt handles the minisum rule only");
    if (!q.target)
        throw QueryError("decide_minisum_fpt requires a target score");

    const Score t = *q.target;
    const int n_star = q.n_star(e.n());

    if (t < n_star) {
        // A yes-instance has n* nonnegative distances summing to < n*,
        // forcing a distance-zero vote: the committee equals some ballot.
        Best best;
        for (int i = 0; i < e.n(); ++i) {
            if (e.votes[i].count() != q.m_star) continue;
            auto [votes, score] =
                best_nonoutliers_for_committee(q.rule, e, e.votes[i], n_star);
            if (score <= t)
                best.offer(Solution{e.votes[i].to_indices(), std::move(votes), score});
        }
        if (best.has) return {true, std::move(best.sol)};
        return {false, std::nullopt};
    }

    SolverReport rep = solve_voterset_enum(e, q, threads, caps);
    if (rep.solution.score <= t) return {true, std::move(rep.solution)};
    return {false, std::nullopt};
}

SolverReport brute_force_oracle(const Election& e, const OutlierQuery& q) {
    e.validate();
    q.validate(e);
    if (e.m > kOracleMaxCandidates || e.n() > kOracleMaxVotes)
        throw CapError("brute_force_oracle refuses m=" + std::to_string(e.m) +
                       ", n=" + std::to_string(e.n()) + " (caps " +
                       std::to_string(kOracleMaxCandidates) + ", " +
                       std::to_string(kOracleMaxVotes) + ")");

    auto t0 = Clock::now();
    const int n = e.n();
    const int n_star = q.n_star(n);
    const std::uint64_t vote_masks = std::uint64_t{1} << n;

    Best best;
    std::uint64_t nodes = 0;

    std::vector<int> comb(q.m_star);
    for (int i = 0; i < q.m_star; ++i) comb[i] = i;
    bool more = true;
    while (more) {
        Bitset cmask = Bitset::from_indices(e.m, comb);
        std::vector<Score> pv(n);
        for (int i = 0; i < n; ++i) pv[i] = per_vote_score(q.rule, cmask, e.votes[i]);

        for (std::uint64_t mask = 0; mask < vote_masks; ++mask) {
            if (__builtin_popcountll(mask) < n_star) continue;
            Score total = 0;
            std::uint64_t w = mask;
            while (w) {
                total += pv[__builtin_ctzll(w)];
                w &= w - 1;
            }
            ++nodes;
            best.offer(Solution{comb, mask_to_indices(mask), total});
        }
        more = next_combination(comb, e.m);
    }

    SolverReport rep;
    rep.solution = std::move(best.sol);
    rep.algorithm = "oracle";
    rep.nodes_explored = nodes;
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

} // namespace ocsel
