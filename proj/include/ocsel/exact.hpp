#pragma once

#include <optional>

#include "ocsel/types.hpp"

namespace ocsel {

// Size caps are configuration, not constants of the problem. Exceeding
// one raises CapError; there is no silent truncation.
struct ExactCaps {
    int committee_enum_m = 30; // solve_committee_enum refuses m above this
    int voterset_enum_n = 25;  // solve_voterset_enum refuses n above this
};

// Enumerates all C(m, m*) committees, pairs each with its best
// non-outlier set, and returns the minimum under the global tie-break.
// Globally optimal for all four rules.
SolverReport solve_committee_enum(const Election& e, const OutlierQuery& q,
                                  int threads = 1, ExactCaps caps = {});

// Enumerates candidate non-outlier sets and pairs each with its greedy
// committee. For the three nonnegative rules the optimum uses exactly n*
// votes, so only C(n, n*) subsets are scanned; under net disapproval the
// optimal set may be larger and every subset of size >= n* is scanned
// instead. Always agrees with solve_committee_enum on score and, under
// the tie-break, on the committee.
SolverReport solve_voterset_enum(const Election& e, const OutlierQuery& q,
                                 int threads = 1, ExactCaps caps = {});

struct Decision {
    bool yes = false;
    std::optional<Solution> witness; // present iff yes
};

// Minisum-only decision procedure for "is there a solution with score
// <= t". For t < n* some non-outlier must be at distance zero from the
// committee, so it suffices to try every vote of size m* as the
// committee; otherwise falls back to voterset enumeration.
Decision decide_minisum_fpt(const Election& e, const OutlierQuery& q,
                            int threads = 1, ExactCaps caps = {});

// Independent double enumeration (all committees x all vote subsets of
// size >= n*), reusing none of the half-solver shortcuts. Ground truth
// for every other solver; hard caps m <= 12, n <= 16.
SolverReport brute_force_oracle(const Election& e, const OutlierQuery& q);

inline constexpr int kOracleMaxCandidates = 12;
inline constexpr int kOracleMaxVotes = 16;

} // namespace ocsel
