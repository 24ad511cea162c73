#include "ocsel/special.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <numeric>

#include "ocsel/scoring.hpp"

namespace ocsel {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

constexpr Score kInfeasible = LLONG_MAX / 4;

} // namespace

const char* structure_name(StructureClass s) {
    switch (s) {
    case StructureClass::SingleApprovalVotes: return "single-approval-votes";
    case StructureClass::SingleApproverCandidates: return "single-approver-candidates";
    case StructureClass::Both: return "both";
    case StructureClass::Neither: return "neither";
    }
    return "?";
}

StructureClass detect_structure(const Election& e) {
    e.validate();
    int max_vote = 0;
    for (const Bitset& v : e.votes) max_vote = std::max(max_vote, v.count());
    std::vector<int> counts = approval_counts(e);
    int max_count = *std::max_element(counts.begin(), counts.end());

    const bool single_vote = max_vote <= 1;
    const bool single_approver = max_count <= 1;
    if (single_vote && single_approver) return StructureClass::Both;
    if (single_vote) return StructureClass::SingleApprovalVotes;
    if (single_approver) return StructureClass::SingleApproverCandidates;
    return StructureClass::Neither;
}

SolverReport solve_single_approval_greedy(const Election& e, const OutlierQuery& q) {
    e.validate();
    q.validate(e);
    if (q.rule != ScoringRule::Minisum)
        throw QueryError("solve_single_approval_greedy handles the minisum rule only");
    for (const Bitset& v : e.votes)
        if (v.count() > 1)
            throw QueryError("solve_single_approval_greedy requires every vote to "
                             "approve at most one candidate");

    auto t0 = Clock::now();
    const int n = e.n();
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> committee = best_committee_for_votes(q.rule, e, all, q.m_star);
    Bitset cmask = Bitset::from_indices(e.m, committee);

    // removal savings per vote: non-member approval m*+1, empty vote m*,
    // member approval m*-1
    std::vector<int> class_w, class_y, class_u;
    for (int i = 0; i < n; ++i) {
        const Bitset& v = e.votes[i];
        if (v.count() == 0)
            class_y.push_back(i);
        else if (intersect_count(v, cmask) == 1)
            class_u.push_back(i);
        else
            class_w.push_back(i);
    }

    std::vector<char> outlier(n, 0);
    int left = q.n_bar;
    for (const std::vector<int>* cls : {&class_w, &class_y, &class_u})
        for (int i : *cls) {
            if (left == 0) break;
            outlier[i] = 1;
            --left;
        }

    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (!outlier[i]) keep.push_back(i);

    Score s = total_score(q.rule, cmask, e, keep);

    SolverReport rep;
    rep.solution = Solution{std::move(committee), std::move(keep), s};
    rep.algorithm = "single-approval-greedy";
    rep.nodes_explored = static_cast<std::uint64_t>(n);
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

SolverReport solve_single_approver_dp(const Election& e, const OutlierQuery& q) {
    e.validate();
    q.validate(e);
    if (q.rule != ScoringRule::Minisum)
        throw QueryError("solve_single_approver_dp handles the minisum rule only");
    {
        std::vector<int> counts = approval_counts(e);
        for (int c : counts)
            if (c > 1)
                throw QueryError("solve_single_approver_dp requires pairwise disjoint "
                                 "votes (every candidate approved at most once)");
    }

    auto t0 = Clock::now();
    const int n = e.n();
    const int nb = q.n_bar;
    const int cap = q.m_star;
    const int n_star = q.n_star(n);

    std::vector<int> size(n);
    for (int i = 0; i < n; ++i) size[i] = e.votes[i].count();

    enum Choice : char { None, Outlier, Full, Partial };

    // value[i][j][l]: minimal residual cost over the first i votes with j
    // outliers used and committee budget l for those votes
    auto idx = [&](int i, int j, int l) { return (i * (nb + 1) + j) * (cap + 1) + l; };
    std::vector<Score> value(static_cast<std::size_t>(n + 1) * (nb + 1) * (cap + 1),
                             kInfeasible);
    std::vector<Choice> choice(value.size(), None);

    for (int l = 0; l <= cap; ++l) value[idx(0, 0, l)] = 0;

    for (int i = 1; i <= n; ++i) {
        const int s = size[i - 1];
        for (int j = 0; j <= std::min(nb, i); ++j) {
            for (int l = 0; l <= cap; ++l) {
                Score best = kInfeasible;
                Choice pick = None;
                if (j >= 1 && value[idx(i - 1, j - 1, l)] < kInfeasible) {
                    best = value[idx(i - 1, j - 1, l)];
                    pick = Outlier;
                }
                if (l >= s) {
                    Score prev = value[idx(i - 1, j, l - s)];
                    if (prev < kInfeasible && prev - s < best) {
                        best = prev - s;
                        pick = Full;
                    }
                } else {
                    Score prev = value[idx(i - 1, j, 0)];
                    if (prev < kInfeasible && prev + s - 2 * l < best) {
                        best = prev + s - 2 * l;
                        pick = Partial;
                    }
                }
                value[idx(i, j, l)] = best;
                choice[idx(i, j, l)] = pick;
            }
        }
    }

    // budget monotonicity makes l = m* the minimizing end cell
    Score residual = kInfeasible;
    int l_end = cap;
    for (int l = 0; l <= cap; ++l) {
        if (value[idx(n, nb, l)] < residual) {
            residual = value[idx(n, nb, l)];
            l_end = l;
        }
    }
    if (residual >= kInfeasible)
        throw QueryError("solve_single_approver_dp: no feasible outlier assignment");

    // walk back-pointers; allocated candidates in index order
    std::vector<char> outlier(n, 0);
    std::vector<int> allocated;
    int j = nb, l = l_end;
    for (int i = n; i >= 1; --i) {
        Choice pick = choice[idx(i, j, l)];
        if (pick == Outlier) {
            outlier[i - 1] = 1;
            --j;
        } else if (pick == Full) {
            for (int c : e.votes[i - 1].to_indices()) allocated.push_back(c);
            l -= size[i - 1];
        } else { // Partial: the l smallest-index members
            std::vector<int> members = e.votes[i - 1].to_indices();
            for (int t = 0; t < l; ++t) allocated.push_back(members[t]);
            l = 0;
        }
    }

    std::sort(allocated.begin(), allocated.end());
    std::vector<char> in_committee(e.m, 0);
    for (int c : allocated) in_committee[c] = 1;
    // pad with the smallest-index unallocated candidates
    int need = cap - static_cast<int>(allocated.size());
    for (int c = 0; c < e.m && need > 0; ++c) {
        if (!in_committee[c]) {
            in_committee[c] = 1;
            --need;
        }
    }
    std::vector<int> committee;
    committee.reserve(cap);
    for (int c = 0; c < e.m; ++c)
        if (in_committee[c]) committee.push_back(c);

    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (!outlier[i]) keep.push_back(i);

    Score s = static_cast<Score>(n_star) * cap + residual;

    SolverReport rep;
    rep.solution = Solution{std::move(committee), std::move(keep), s};
    rep.algorithm = "single-approver-dp";
    rep.nodes_explored = static_cast<std::uint64_t>(value.size());
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

} // namespace ocsel
