#pragma once

#include "ocsel/types.hpp"

namespace ocsel {

enum class StructureClass {
    SingleApprovalVotes,      // every vote approves at most one candidate
    SingleApproverCandidates, // every candidate approved by at most one vote
    Both,
    Neither,
};

const char* structure_name(StructureClass s);

StructureClass detect_structure(const Election& e);

// Exact polynomial solver for minisum when every vote approves at most
// one candidate: pick the m* most approved candidates, then remove
// outliers greedily by removal savings (votes approving a non-member
// first, empty votes next, votes approving a member last).
SolverReport solve_single_approval_greedy(const Election& e, const OutlierQuery& q);

// Exact polynomial solver for minisum when all votes are pairwise
// disjoint: dynamic program over (votes processed, outliers used,
// remaining committee capacity), scoring the residual sum(|S_i| - 2 x_i)
// on top of the fixed n* m* term.
SolverReport solve_single_approver_dp(const Election& e, const OutlierQuery& q);

} // namespace ocsel
