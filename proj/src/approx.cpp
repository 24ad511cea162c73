#include "ocsel/approx.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>

#include "ocsel/combinatorics.hpp"
#include "ocsel/scoring.hpp"

namespace ocsel {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

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

void require_minisum(const OutlierQuery& q, const char* who) {
    if (q.rule != ScoringRule::Minisum)
        throw QueryError(std::string(who) + " handles the minisum rule only");
}

// (greedy committee of V', n* closest votes to it, re-greedied) candidate
Solution sample_candidate(const Election& e, const OutlierQuery& q,
                          const std::vector<int>& sampled) {
    const int n_star = q.n_star(e.n());
    std::vector<int> c1 = best_committee_for_votes(q.rule, e, sampled, q.m_star);
    Bitset c1mask = Bitset::from_indices(e.m, c1);
    auto [closest, ignored] =
        best_nonoutliers_for_committee(ScoringRule::Minisum, e, c1mask, n_star);
    (void)ignored;
    std::vector<int> c2 = best_committee_for_votes(q.rule, e, closest, q.m_star);
    Bitset c2mask = Bitset::from_indices(e.m, c2);
    Score s = total_score(q.rule, c2mask, e, closest);
    return Solution{std::move(c2), std::move(closest), s};
}

} // namespace

Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw InputError("not a positive rational: '" + text + "'"); };
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            long long num = std::stoll(text.substr(0, slash));
            long long den = std::stoll(text.substr(slash + 1));
            if (num <= 0 || den <= 0) bad();
            long long g = std::gcd(num, den);
            return {num / g, den / g};
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            std::size_t frac_len = text.size() - dot - 1;
            if (frac_len == 0 || frac_len > 15) bad();
            long long num = std::stoll(digits);
            long long den = 1;
            for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
            if (num <= 0) bad();
            long long g = std::gcd(num, den);
            return {num / g, den / g};
        }
        long long num = std::stoll(text);
        if (num <= 0) bad();
        return {num, 1};
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        bad();
    }
    return {1, 1}; // unreachable
}

int ApproxConfig::default_sample_size(int m) const {
    double eps = static_cast<double>(epsilon.num) / static_cast<double>(epsilon.den);
    double r = std::ceil(12.0 * std::log(static_cast<double>(std::max(m, 2))) / (eps * eps));
    if (r < 1.0) r = 1.0;
    return static_cast<int>(r);
}

std::vector<std::vector<int>> hamming_ball_committees(const Bitset& vote, int radius,
                                                      int m, int m_star) {
    std::vector<std::vector<int>> out;
    if (radius < 0 || m_star < 0 || m_star > m) return out;

    std::vector<int> inside = vote.to_indices();
    std::vector<int> outside;
    outside.reserve(m - inside.size());
    for (int c = 0; c < m; ++c)
        if (!vote.test(c)) outside.push_back(c);
    const int s = static_cast<int>(inside.size());

    // |X delta S| = s + m_star - 2a where a = |X ^ S|
    int a_min = std::max({0, m_star - static_cast<int>(outside.size()),
                          (s + m_star - radius + 1) / 2});
    int a_max = std::min(s, m_star);

    for (int a = a_min; a <= a_max; ++a) {
        const int b = m_star - a;
        std::vector<int> pick_in(a), pick_out(b);
        std::iota(pick_in.begin(), pick_in.end(), 0);
        bool more_in = true;
        while (more_in) {
            std::iota(pick_out.begin(), pick_out.end(), 0);
            bool more_out = true;
            while (more_out) {
                std::vector<int> x;
                x.reserve(m_star);
                for (int i : pick_in) x.push_back(inside[i]);
                for (int i : pick_out) x.push_back(outside[i]);
                std::sort(x.begin(), x.end());
                out.push_back(std::move(x));
                more_out = next_combination(pick_out, static_cast<int>(outside.size()));
            }
            more_in = next_combination(pick_in, s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SolverReport approx_eps_mbar(const Election& e, const OutlierQuery& q,
                             const ApproxConfig& cfg, int threads) {
    e.validate();
    q.validate(e);
    require_minisum(q, "approx_eps_mbar");

    auto t0 = Clock::now();
    const int n = e.n();
    const int n_star = q.n_star(n);
    const int radius = cfg.radius();
    const int m_bar = e.m - q.m_star;
    if (threads < 1) threads = 1;

    // eps * mbar <= 1 makes the guarantee plain exactness, and the
    // pigeonhole/fallback pair cannot deliver it (the mbar*n* bound needs
    // m >= 2m*). All C(m, mbar) committees fit the same m^(1/eps) budget
    // as one Hamming ball, so enumerate them outright.
    if (m_bar <= radius) {
        std::vector<int> comb(q.m_star);
        for (int i = 0; i < q.m_star; ++i) comb[i] = i;
        Best exact_best;
        std::uint64_t count = 0;
        bool more = true;
        while (more) {
            Bitset cmask = Bitset::from_indices(e.m, comb);
            auto [votes, score] = best_nonoutliers_for_committee(q.rule, e, cmask, n_star);
            ++count;
            exact_best.offer(Solution{comb, std::move(votes), score});
            more = next_combination(comb, e.m);
        }
        SolverReport rep;
        rep.solution = std::move(exact_best.sol);
        rep.algorithm = "eps-mbar";
        rep.nodes_explored = count;
        rep.threads = threads;
        rep.exact = false; // still reported under the approximation contract
        rep.elapsed_ms = ms_since(t0);
        return rep;
    }

    // (a) every committee within floor(1/eps) of some ballot, paired with
    // its best n* non-outliers
    std::vector<Best> bests(threads);
    std::vector<std::uint64_t> nodes(threads, 0);
    {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (int i = w; i < n; i += threads) {
                    for (auto& comm :
                         hamming_ball_committees(e.votes[i], radius, e.m, q.m_star)) {
                        Bitset cmask = Bitset::from_indices(e.m, comm);
                        auto [votes, score] =
                            best_nonoutliers_for_committee(q.rule, e, cmask, n_star);
                        ++nodes[w];
                        bests[w].offer(Solution{std::move(comm), std::move(votes), score});
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    Best best;
    std::uint64_t total_nodes = 0;
    for (int w = 0; w < threads; ++w) {
        best.merge(std::move(bests[w]));
        total_nodes += nodes[w];
    }

    // (b) fallback: the n* votes closest to the full-electorate greedy
    // committee, re-greedied. Any n*-vote choice admits the mbar*n* bound;
    // this one is empirically much stronger.
    {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        std::vector<int> g0 = best_committee_for_votes(q.rule, e, all, q.m_star);
        Bitset g0mask = Bitset::from_indices(e.m, g0);
        auto [vf, score_unused] =
            best_nonoutliers_for_committee(q.rule, e, g0mask, n_star);
        (void)score_unused;
        std::vector<int> cf = best_committee_for_votes(q.rule, e, vf, q.m_star);
        Bitset cfmask = Bitset::from_indices(e.m, cf);
        Score s = total_score(q.rule, cfmask, e, vf);
        ++total_nodes;
        best.offer(Solution{std::move(cf), std::move(vf), s});
    }

    SolverReport rep;
    rep.solution = std::move(best.sol);
    rep.algorithm = "eps-mbar";
    rep.nodes_explored = total_nodes;
    rep.threads = threads;
    rep.exact = false;
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

SolverReport approx_sampling(const Election& e, const OutlierQuery& q,
                             const ApproxConfig& cfg, int threads) {
    e.validate();
    q.validate(e);
    require_minisum(q, "approx_sampling");

    auto t0 = Clock::now();
    const int n = e.n();
    if (threads < 1) threads = 1;

    int r = cfg.sample_size.value_or(std::min(cfg.default_sample_size(e.m), n));
    if (r < 1) throw QueryError("sample size must be at least 1");
    if (r > n)
        throw CapError("sample size r=" + std::to_string(r) + " exceeds n=" +
                       std::to_string(n));

    std::vector<Best> bests(threads);
    std::vector<std::uint64_t> nodes(threads, 0);
    std::vector<std::thread> pool;

    if (cfg.mode == ApproxConfig::Mode::ExhaustiveSubsets) {
        const std::uint64_t total = binomial(n, r);
        for (int w = 0; w < threads; ++w) {
            std::uint64_t lo = total * w / threads;
            std::uint64_t hi = total * (w + 1) / threads;
            pool.emplace_back([&, w, lo, hi] {
                if (lo >= hi) return;
                std::vector<int> comb = unrank_combination(n, r, lo);
                for (std::uint64_t rank = lo; rank < hi; ++rank) {
                    bests[w].offer(sample_candidate(e, q, comb));
                    ++nodes[w];
                    if (rank + 1 < hi) next_combination(comb, n);
                }
            });
        }
    } else {
        if (cfg.trials < 1) throw QueryError("trials must be at least 1");
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                // one stream per worker, derived from (seed, worker index)
                SplitMix64 rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (w + 1)));
                int my_trials = cfg.trials / threads + (w < cfg.trials % threads ? 1 : 0);
                for (int t = 0; t < my_trials; ++t) {
                    std::vector<int> sampled = rng.subset(n, r);
                    bests[w].offer(sample_candidate(e, q, sampled));
                    ++nodes[w];
                }
            });
        }
    }
    for (auto& t : pool) t.join();

    Best best;
    std::uint64_t total_nodes = 0;
    for (int w = 0; w < threads; ++w) {
        best.merge(std::move(bests[w]));
        total_nodes += nodes[w];
    }

    SolverReport rep;
    rep.solution = std::move(best.sol);
    rep.algorithm = "sampling";
    rep.nodes_explored = total_nodes;
    rep.threads = threads;
    rep.exact = cfg.mode == ApproxConfig::Mode::ExhaustiveSubsets && r == n && q.n_bar == 0;
    if (cfg.mode == ApproxConfig::Mode::MonteCarlo) rep.seed = cfg.seed;
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

} // namespace ocsel
