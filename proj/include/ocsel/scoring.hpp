#pragma once

#include <utility>

#include "ocsel/types.hpp"

namespace ocsel {

// Per-vote score of a committee against one ballot (Table of rules in
// types.hpp). Total function on committees and votes over the same m.
Score per_vote_score(ScoringRule rule, const Bitset& committee, const Bitset& vote);

// Sum of per-vote scores over the given vote indices.
Score total_score(ScoringRule rule, const Bitset& committee, const Election& e,
                  const std::vector<int>& subset);

// counts[c] = number of votes approving candidate c.
std::vector<int> approval_counts(const Election& e);
std::vector<int> approval_counts(const Election& e, const std::vector<int>& subset);

// The m_star candidates with the highest approval counts restricted to
// `subset`, ties broken by smallest candidate index. For all four rules
// the total score decomposes per candidate, so the same top-count greedy
// minimizes every one of them; the result is also the lexicographically
// smallest optimal committee for the subset.
std::vector<int> best_committee_for_votes(ScoringRule rule, const Election& e,
                                          const std::vector<int>& subset, int m_star);

// The n_star votes with the smallest per-vote score (ties by smallest
// vote index). Under net disapproval every further vote with strictly
// negative score is added as well: the problem only requires
// |V*| >= n*, and negative contributions lower the total.
std::pair<std::vector<int>, Score>
best_nonoutliers_for_committee(ScoringRule rule, const Election& e,
                               const Bitset& committee, int n_star);

// Recompute a claimed solution's score from scratch.
Score recompute_score(ScoringRule rule, const Election& e,
                      const std::vector<int>& committee,
                      const std::vector<int>& non_outliers);

} // namespace ocsel
