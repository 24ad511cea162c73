#include "ocsel/scoring.hpp"

#include <algorithm>
#include <numeric>

namespace ocsel {

const char* rule_name(ScoringRule r) {
    switch (r) {
    case ScoringRule::Minisum: return "minisum";
    case ScoringRule::Disapproval: return "disapproval";
    case ScoringRule::DisapprovalPrime: return "disapproval-prime";
    case ScoringRule::NetDisapproval: return "net-disapproval";
    }
    return "?";
}

std::optional<ScoringRule> rule_from_name(const std::string& name) {
    if (name == "minisum") return ScoringRule::Minisum;
    if (name == "disapproval") return ScoringRule::Disapproval;
    if (name == "disapproval-prime") return ScoringRule::DisapprovalPrime;
    if (name == "net-disapproval") return ScoringRule::NetDisapproval;
    return std::nullopt;
}

void Election::validate() const {
    if (m < 1) throw QueryError("election needs at least one candidate");
    if (votes.empty()) throw QueryError("election needs at least one vote");
    for (const Bitset& v : votes)
        if (v.size() != m) throw QueryError("vote width does not match candidate count");
}

void OutlierQuery::validate(const Election& e) const {
    if (m_star < 0 || m_star > e.m)
        throw QueryError("committee size m* must lie in [0, m]");
    if (n_bar < 0 || n_bar >= e.n())
        throw QueryError("outlier budget n_bar must lie in [0, n)");
}

bool solution_less(const Solution& a, const Solution& b) {
    if (a.score != b.score) return a.score < b.score;
    if (a.committee != b.committee) return a.committee < b.committee;
    return a.non_outliers < b.non_outliers;
}

Score per_vote_score(ScoringRule rule, const Bitset& committee, const Bitset& vote) {
    switch (rule) {
    case ScoringRule::Minisum:
        return symdiff_count(committee, vote);
    case ScoringRule::Disapproval:
        return setminus_count(committee, vote);
    case ScoringRule::DisapprovalPrime:
        return setminus_count(vote, committee);
    case ScoringRule::NetDisapproval:
        return static_cast<Score>(setminus_count(committee, vote)) -
               intersect_count(committee, vote);
    }
    return 0;
}

Score total_score(ScoringRule rule, const Bitset& committee, const Election& e,
                  const std::vector<int>& subset) {
    Score s = 0;
    for (int i : subset) s += per_vote_score(rule, committee, e.votes[i]);
    return s;
}

std::vector<int> approval_counts(const Election& e) {
    std::vector<int> idx(e.n());
    std::iota(idx.begin(), idx.end(), 0);
    return approval_counts(e, idx);
}

std::vector<int> approval_counts(const Election& e, const std::vector<int>& subset) {
    std::vector<int> counts(e.m, 0);
    for (int i : subset)
        for (int c : e.votes[i].to_indices()) ++counts[c];
    return counts;
}

std::vector<int> best_committee_for_votes(ScoringRule rule, const Election& e,
                                          const std::vector<int>& subset, int m_star) {
    (void)rule; // the same greedy is optimal for every rule
    if (m_star < 0 || m_star > e.m)
        throw QueryError("best_committee_for_votes: m_star out of range");
    std::vector<int> counts = approval_counts(e, subset);
    std::vector<int> order(e.m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (counts[a] != counts[b]) return counts[a] > counts[b];
        return a < b;
    });
    std::vector<int> committee(order.begin(), order.begin() + m_star);
    std::sort(committee.begin(), committee.end());
    return committee;
}

std::pair<std::vector<int>, Score>
best_nonoutliers_for_committee(ScoringRule rule, const Election& e,
                               const Bitset& committee, int n_star) {
    const int n = e.n();
    if (n_star < 1 || n_star > n)
        throw QueryError("best_nonoutliers_for_committee: n_star out of range");

    std::vector<Score> scores(n);
    for (int i = 0; i < n; ++i) scores[i] = per_vote_score(rule, committee, e.votes[i]);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (scores[a] != scores[b]) return scores[a] < scores[b];
        return a < b;
    });

    std::vector<char> chosen(n, 0);
    for (int r = 0; r < n_star; ++r) chosen[order[r]] = 1;
    if (rule == ScoringRule::NetDisapproval) {
        for (int i = 0; i < n; ++i)
            if (scores[i] < 0) chosen[i] = 1;
    }

    std::vector<int> picked;
    Score total = 0;
    for (int i = 0; i < n; ++i) {
        if (chosen[i]) {
            picked.push_back(i);
            total += scores[i];
        }
    }
    return {std::move(picked), total};
}

Score recompute_score(ScoringRule rule, const Election& e,
                      const std::vector<int>& committee,
                      const std::vector<int>& non_outliers) {
    Bitset c = Bitset::from_indices(e.m, committee);
    return total_score(rule, c, e, non_outliers);
}

} // namespace ocsel
