#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ocsel/graph.hpp"
#include "ocsel/types.hpp"

namespace ocsel {

// A generated election plus query whose yes/no answer under the target
// score encodes a graph problem. The embedded source graph and k are
// enough to re-derive the instance bit for bit: candidates and votes
// follow vertex/edge index order, dummy blocks appended last.
struct ReducedInstance {
    Election election;
    OutlierQuery query;
    std::string reduction;
    Graph source;
    int k = 0;
    std::vector<int> dummy_candidates;
    std::vector<int> dummy_votes;
};

enum class EdgeVoteVariant { Complement, Incident };
enum class VertexVoteVariant { NonIncident, Incident };

// Vertex cover on a 3-regular graph. One candidate and one vote per
// vertex, S_i = neighbours of u_i; m* = k, n_bar = k,
// t = (n-k)(k-3) for minisum and disapproval, (n-k)(k-6) for net.
// Yes-instance iff the graph has a vertex cover of size k.
ReducedInstance reduce_vc3(const Graph& g, int k, ScoringRule rule);

// k-clique with one vote per edge and one candidate per vertex.
//   Complement: S_i = vertices not in e_i; requires a regular graph;
//     m_bar = k, n* = C(k,2); t = (k-2) C(k,2) for minisum, 0 for
//     disapproval.
//   Incident: S_i = the two endpoints of e_i; m* = k, n* = C(k,2);
//     t = (k-2) C(k,2) for minisum and disapproval, (k-4) C(k,2) for net.
ReducedInstance reduce_clique_edges_as_votes(const Graph& g, int k, ScoringRule rule,
                                             EdgeVoteVariant variant);

// k-clique with one vote per vertex and one candidate per edge; requires
// a d-regular graph; n_bar = k.
//   NonIncident: S_i = edges avoiding u_i; m* = C(k,2);
//     t = (n-k)(m - C(k,2) - d) for minisum, 0 for disapproval.
//   Incident: S_i = edges at u_i; m_bar = C(k,2);
//     t = (n-k)(m - C(k,2) - d) for minisum and disapproval.
ReducedInstance reduce_clique_vertices_as_votes(const Graph& g, int k, ScoringRule rule,
                                                VertexVoteVariant variant);

// k-clique under net disapproval with a dummy block: candidates are the
// edges plus C(k,2) dummies D, votes are the vertex votes
// S_i = {edges avoiding u_i} plus n+2k copies of D; n_bar = k,
// m* = 2 C(k,2), t = 0.
ReducedInstance reduce_clique_net_dummy(const Graph& g, int k);

// K_{k,k} biclique under disapproval: one vote per left vertex, one
// candidate per right vertex, S_i = right-neighbourhood; n* = m* = k,
// t = 0.
ReducedInstance reduce_biclique(const Graph& g, int k);

// Swaps the two disapproval variants: every vote is complemented and the
// committee size flips to m_bar; n*, n_bar and t are unchanged. Exactly
// score-preserving and an involution on (votes, m*, rule).
std::pair<Election, OutlierQuery> complement_transform(const Election& e,
                                                       const OutlierQuery& q);

} // namespace ocsel
