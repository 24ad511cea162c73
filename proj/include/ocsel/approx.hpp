#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocsel/types.hpp"

namespace ocsel {

// Epsilon is kept as an exact rational so the ball radius floor(1/eps)
// and the guarantee checks never see floating-point error.
struct Rational {
    long long num = 1;
    long long den = 1;
};

// Accepts "1/3", "0.25" and "2". Throws InputError unless the value is
// a positive rational.
Rational parse_rational(const std::string& text);

struct ApproxConfig {
    Rational epsilon{1, 2};
    std::optional<int> sample_size; // r; derived from epsilon when absent

    enum class Mode { ExhaustiveSubsets, MonteCarlo };
    Mode mode = Mode::ExhaustiveSubsets;
    int trials = 1;           // MonteCarlo only
    std::uint64_t seed = 0;   // MonteCarlo only

    // floor(1/epsilon)
    int radius() const { return static_cast<int>(epsilon.den / epsilon.num); }

    // ceil(12 ln(max(m,2)) / eps^2); the constant 12 is a conventional
    // Chernoff-style choice, capped to n by the callers.
    int default_sample_size(int m) const;
};

// Every size-m_star subset X with |X delta vote| <= radius, each exactly
// once, in lexicographic order. Empty when no such committee exists.
std::vector<std::vector<int>> hamming_ball_committees(const Bitset& vote, int radius,
                                                      int m, int m_star);

// eps*mbar-approximation for minisum: searches the Hamming balls of
// radius floor(1/eps) around every ballot, plus a greedy fallback
// committee over a chosen n*-vote subset. Returned score is at most
// max(OPT, eps*mbar*OPT).
SolverReport approx_eps_mbar(const Election& e, const OutlierQuery& q,
                             const ApproxConfig& cfg, int threads = 1);

// Sampling scheme for minisum: for each sampled r-subset V', take its
// greedy committee, reselect the n* closest votes of the full election,
// re-greedy, and keep the best. Exhaustive mode sweeps all C(n, r)
// subsets; MonteCarlo draws `trials` seeded samples.
SolverReport approx_sampling(const Election& e, const OutlierQuery& q,
                             const ApproxConfig& cfg, int threads = 1);

} // namespace ocsel
