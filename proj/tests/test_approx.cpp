#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ocsel/approx.hpp"
#include "ocsel/exact.hpp"
#include "ocsel/scoring.hpp"
#include "test_util.hpp"

using namespace ocsel;
using namespace testutil;

namespace {

// ball oracle: filter the full C(m, m_star) enumeration by distance
std::vector<std::vector<int>> filter_ball(const Bitset& vote, int radius, int m,
                                          int m_star) {
    std::vector<std::vector<int>> out;
    std::vector<int> comb(m_star);
    for (int i = 0; i < m_star; ++i) comb[i] = i;
    bool more = m_star <= m;
    while (more) {
        Bitset mask = Bitset::from_indices(m, comb);
        if (symdiff_count(mask, vote) <= radius) out.push_back(comb);
        more = next_combination(comb, m);
    }
    return out;
}

} // namespace

TEST_CASE("rational parsing") {
    Rational r = parse_rational("1/3");
    CHECK(r.num == 1);
    CHECK(r.den == 3);
    r = parse_rational("0.25");
    CHECK(r.num == 1);
    CHECK(r.den == 4);
    r = parse_rational("2");
    CHECK(r.num == 2);
    CHECK(r.den == 1);
    CHECK_THROWS_AS(parse_rational("0"), InputError);
    CHECK_THROWS_AS(parse_rational("-1/2"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);

    ApproxConfig cfg;
    cfg.epsilon = {1, 3};
    CHECK(cfg.radius() == 3);
    cfg.epsilon = {2, 1};
    CHECK(cfg.radius() == 0);
    cfg.epsilon = {1, 1};
    CHECK(cfg.radius() == 1);
}

TEST_CASE("hamming ball: radius zero") {
    Bitset s = Bitset::from_indices(5, {1, 3});
    auto ball = hamming_ball_committees(s, 0, 5, 2);
    REQUIRE(ball.size() == 1);
    CHECK(ball[0] == std::vector<int>{1, 3});
    CHECK(hamming_ball_committees(s, 0, 5, 3).empty());
}

TEST_CASE("hamming ball: the six-committee example") {
    // m=4, S={0,1}, m*=2, radius 2: every pair except the disjoint {2,3}
    Bitset s = Bitset::from_indices(4, {0, 1});
    auto ball = hamming_ball_committees(s, 2, 4, 2);
    std::vector<std::vector<int>> expect = {
        {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
    };
    CHECK(ball == expect);
}

TEST_CASE("hamming ball equals distance filtering, in order, no duplicates") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 80; ++trial) {
        int m = 1 + static_cast<int>(rng.below(8));
        int m_star = static_cast<int>(rng.below(m + 1));
        int radius = static_cast<int>(rng.below(m + 2));
        Bitset vote(m);
        for (int c = 0; c < m; ++c)
            if (rng.below(2)) vote.set(c);
        auto ball = hamming_ball_committees(vote, radius, m, m_star);
        CHECK(ball == filter_ball(vote, radius, m, m_star));
        std::set<std::vector<int>> dedup(ball.begin(), ball.end());
        CHECK(dedup.size() == ball.size());
        CHECK(std::is_sorted(ball.begin(), ball.end()));
    }
}

TEST_CASE("eps-mbar is exact when a ballot equals the optimal committee") {
    Election e;
    e.m = 6;
    e.votes.assign(4, Bitset::from_indices(6, {0, 2}));
    e.votes.push_back(Bitset::from_indices(6, {3, 4}));
    OutlierQuery q{ScoringRule::Minisum, 2, 1, std::nullopt};
    ApproxConfig cfg;
    cfg.epsilon = {1, 1};
    SolverReport r = approx_eps_mbar(e, q, cfg);
    CHECK(r.solution.score == 0);
    CHECK(r.solution.committee == std::vector<int>{0, 2});
    CHECK_FALSE(r.exact);
}

TEST_CASE("eps-mbar honors the approximation guarantee") {
    SplitMix64 rng(2024);
    const Rational epsilons[] = {{1, 3}, {1, 2}, {1, 1}};
    for (int trial = 0; trial < 120; ++trial) {
        Election e = random_election_sized(rng, 7, 7);
        OutlierQuery q = random_query(rng, e, ScoringRule::Minisum);
        Score opt = brute_force_oracle(e, q).solution.score;
        for (const Rational& eps : epsilons) {
            ApproxConfig cfg;
            cfg.epsilon = eps;
            SolverReport r = approx_eps_mbar(e, q, cfg);
            Score got = r.solution.score;
            ScoringRule rule = q.rule;
            CHECK(recompute_score(rule, e, r.solution.committee, r.solution.non_outliers) ==
                  got);
            CAPTURE(trial);
            CAPTURE(eps.den);
            CHECK(got >= opt);
            Score mbar = e.m - q.m_star;
            // got <= max(OPT, eps * mbar * OPT), checked in exact arithmetic
            bool within = got <= opt || got * eps.den <= eps.num * mbar * opt;
            CHECK(within);
            // exact whenever OPT <= n*/eps
            if (opt * eps.num <= static_cast<Score>(q.n_star(e.n())) * eps.den)
                CHECK(got == opt);
        }
    }
}

TEST_CASE("eps-mbar fallback bound when the committee is small enough") {
    // the mbar*n* fallback bound needs m >= 2m*; radius 0 makes the
    // fallback dominant unless some ballot has size exactly m*
    SplitMix64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        Election e = random_election_sized(rng, 8, 6);
        int m_star = static_cast<int>(rng.below(e.m / 2 + 1));
        OutlierQuery q{ScoringRule::Minisum, m_star, static_cast<int>(rng.below(e.n())),
                       std::nullopt};
        ApproxConfig cfg;
        cfg.epsilon = {static_cast<long long>(e.m) + 1, 1}; // radius 0
        SolverReport r = approx_eps_mbar(e, q, cfg);
        CHECK(r.solution.score <=
              static_cast<Score>(e.m - m_star) * q.n_star(e.n()));
    }
}

TEST_CASE("sampling with the full vote set and no outliers is exact") {
    SplitMix64 rng(4040);
    for (int trial = 0; trial < 40; ++trial) {
        Election e = random_election_sized(rng, 7, 7);
        OutlierQuery q{ScoringRule::Minisum, static_cast<int>(rng.below(e.m + 1)), 0,
                       std::nullopt};
        ApproxConfig cfg;
        cfg.sample_size = e.n();
        SolverReport r = approx_sampling(e, q, cfg);
        CHECK(r.exact);
        CHECK(r.solution.score == brute_force_oracle(e, q).solution.score);
    }
}

TEST_CASE("sampling never beats the optimum") {
    SplitMix64 rng(606);
    for (int trial = 0; trial < 40; ++trial) {
        Election e = random_election_sized(rng, 7, 8);
        OutlierQuery q = random_query(rng, e, ScoringRule::Minisum);
        Score opt = brute_force_oracle(e, q).solution.score;
        ApproxConfig cfg;
        cfg.sample_size = std::max(1, q.n_star(e.n()));
        SolverReport r = approx_sampling(e, q, cfg);
        CHECK(r.solution.score >= opt);
        CHECK(recompute_score(q.rule, e, r.solution.committee, r.solution.non_outliers) ==
              r.solution.score);
        CHECK(static_cast<int>(r.solution.non_outliers.size()) == q.n_star(e.n()));
    }
}

TEST_CASE("monte-carlo sampling is deterministic and monotone in trials") {
    SplitMix64 rng(11);
    Election e = random_election(rng, 6, 9);
    OutlierQuery q{ScoringRule::Minisum, 3, 3, std::nullopt};

    ApproxConfig cfg;
    cfg.mode = ApproxConfig::Mode::MonteCarlo;
    cfg.sample_size = 3;
    cfg.seed = 99;
    cfg.trials = 16;

    SolverReport a = approx_sampling(e, q, cfg);
    SolverReport b = approx_sampling(e, q, cfg);
    CHECK(a.solution.committee == b.solution.committee);
    CHECK(a.solution.non_outliers == b.solution.non_outliers);
    CHECK(a.solution.score == b.solution.score);
    CHECK(a.seed == std::uint64_t{99});

    Score prev = 0;
    bool first = true;
    for (int trials : {1, 2, 4, 8, 16, 32}) {
        cfg.trials = trials;
        Score s = approx_sampling(e, q, cfg).solution.score;
        if (!first) CHECK(s <= prev);
        prev = s;
        first = false;
    }
}

TEST_CASE("sampling size errors and rule checks") {
    Election e;
    e.m = 3;
    e.votes.assign(4, Bitset(3));
    OutlierQuery q{ScoringRule::Minisum, 1, 0, std::nullopt};
    ApproxConfig cfg;
    cfg.sample_size = 5;
    CHECK_THROWS_AS(approx_sampling(e, q, cfg), CapError);
    q.rule = ScoringRule::Disapproval;
    cfg.sample_size = 2;
    CHECK_THROWS_AS(approx_sampling(e, q, cfg), QueryError);
    CHECK_THROWS_AS(approx_eps_mbar(e, q, cfg), QueryError);

    // the derived default is clamped to n by the solver entry point
    ApproxConfig def;
    def.epsilon = {1, 2};
    CHECK(def.default_sample_size(8) >= 1);
}
