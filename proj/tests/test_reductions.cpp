#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ocsel/exact.hpp"
#include "ocsel/reductions.hpp"
#include "ocsel/scoring.hpp"
#include "test_util.hpp"

using namespace ocsel;
using namespace testutil;

namespace {

bool reduced_decision(const ReducedInstance& ri) {
    REQUIRE(ri.query.target.has_value());
    SolverReport rep;
    if (ri.election.m <= kOracleMaxCandidates && ri.election.n() <= kOracleMaxVotes)
        rep = brute_force_oracle(ri.election, ri.query);
    else
        rep = solve_committee_enum(ri.election, ri.query);
    return rep.solution.score <= *ri.query.target;
}

Score witness_score(const ReducedInstance& ri, const std::vector<int>& committee,
                    const std::vector<int>& non_outliers) {
    return recompute_score(ri.query.rule, ri.election, committee, non_outliers);
}

} // namespace

TEST_CASE("graph basics and families") {
    Graph k4 = Graph::from_family("complete:4");
    CHECK(k4.vertex_count == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.regular_degree() == 3);

    Graph c5 = Graph::from_family("cycle:5");
    CHECK(c5.regular_degree() == 2);

    Graph p3 = Graph::from_family("path:3"); // 3 edges, 4 vertices
    CHECK(p3.vertex_count == 4);
    CHECK(p3.edge_count() == 3);
    CHECK_FALSE(p3.regular_degree().has_value());

    Graph k22 = Graph::from_family("complete_bipartite:2:2");
    CHECK(k22.left_size == 2);
    CHECK(k22.edge_count() == 4);

    Graph rr = Graph::from_family("random_regular:8:3:1");
    CHECK(rr.vertex_count == 8);
    CHECK(rr.regular_degree() == 3);
    // same seed, same graph
    CHECK(Graph::from_family("random_regular:8:3:1").edges == rr.edges);

    CHECK_THROWS_AS(Graph::from_family("torus:3"), InputError);
    CHECK_THROWS_AS(Graph::build(3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph::build(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph::build(4, {{0, 1}}, 2), InputError); // edge inside left side
}

TEST_CASE("graph text round trip") {
    Graph g = Graph::from_family("complete_bipartite:2:3");
    Graph back = Graph::parse_text(g.to_text());
    CHECK(back.vertex_count == g.vertex_count);
    CHECK(back.edges == g.edges);
    CHECK(back.left_size == g.left_size);

    CHECK_THROWS_AS(Graph::parse_text("e 0 1\n"), InputError);     // missing p
    CHECK_THROWS_AS(Graph::parse_text("p 2\nq 1\n"), InputError);  // unknown tag
    CHECK_THROWS_AS(Graph::parse_text("p 2\ne 0 5\n"), InputError);
}

TEST_CASE("graph oracles") {
    CHECK(has_clique(Graph::from_family("complete:4"), 4));
    CHECK_FALSE(has_clique(Graph::from_family("cycle:5"), 3));
    CHECK(min_vertex_cover_size(Graph::from_family("complete:4")) == 3);
    CHECK(min_vertex_cover_size(Graph::from_family("cycle:4")) == 2);
    CHECK(has_biclique(Graph::from_family("complete_bipartite:2:2"), 2));

    Graph matching = Graph::build(4, {{0, 2}, {1, 3}}, 2);
    CHECK_FALSE(has_biclique(matching, 2));
    CHECK(has_biclique(matching, 1));

    Graph big = Graph::build(17, {{0, 1}});
    CHECK_THROWS_AS(has_clique(big, 2), CapError);
    CHECK_THROWS_AS(has_biclique(Graph::from_family("cycle:4"), 1), QueryError);
}

TEST_CASE("vc3: structure, parameters and K4 round trip") {
    Graph k4 = Graph::from_family("complete:4");
    ReducedInstance ri = reduce_vc3(k4, 3, ScoringRule::Minisum);
    CHECK(ri.election.m == 4);
    CHECK(ri.election.n() == 4);
    CHECK(ri.query.m_star == 3);
    CHECK(ri.query.n_bar == 3);
    CHECK(ri.query.target == Score{0});
    // every vote approves exactly 3 candidates, every candidate approved 3 times
    for (const Bitset& v : ri.election.votes) CHECK(v.count() == 3);
    for (int c : approval_counts(ri.election)) CHECK(c == 3);
    CHECK(reduced_decision(ri)); // K4 has a vertex cover of size 3

    ReducedInstance net = reduce_vc3(k4, 3, ScoringRule::NetDisapproval);
    CHECK(net.query.target == Score{-3});
    CHECK(reduced_decision(net));

    CHECK_THROWS_AS(reduce_vc3(k4, 2, ScoringRule::Minisum), QueryError);
    CHECK_THROWS_AS(reduce_vc3(k4, 4, ScoringRule::Minisum), QueryError);
    CHECK_THROWS_AS(reduce_vc3(Graph::from_family("cycle:5"), 3, ScoringRule::Minisum),
                    QueryError);
    CHECK_THROWS_AS(reduce_vc3(k4, 3, ScoringRule::DisapprovalPrime), QueryError);
}

TEST_CASE("vc3: K_{3,3} has a one-sided cover") {
    Graph k33 = Graph::from_family("complete_bipartite:3:3");
    ReducedInstance ri = reduce_vc3(k33, 3, ScoringRule::Minisum);
    CHECK(ri.query.target == Score{0});
    CHECK(reduced_decision(ri));

    // forward witness: cover -> committee scores exactly (n-k)(k-3)
    auto cover = find_vertex_cover(k33, 3);
    REQUIRE(cover.has_value());
    std::vector<int> keep;
    std::vector<char> in_cover(k33.vertex_count, 0);
    for (int v : *cover) in_cover[v] = 1;
    for (int v = 0; v < k33.vertex_count; ++v)
        if (!in_cover[v]) keep.push_back(v);
    CHECK(witness_score(ri, *cover, keep) == Score{0});
}

TEST_CASE("vc3 round trips on random cubic graphs, all rules") {
    for (int seed = 1; seed <= 4; ++seed) {
        Graph g = Graph::from_family("random_regular:8:3:" + std::to_string(seed));
        for (int k = 3; k < g.vertex_count; ++k) {
            bool expected = min_vertex_cover_size(g) <= k;
            for (ScoringRule rule : {ScoringRule::Minisum, ScoringRule::Disapproval,
                                     ScoringRule::NetDisapproval}) {
                ReducedInstance ri = reduce_vc3(g, k, rule);
                CAPTURE(seed);
                CAPTURE(k);
                CAPTURE(rule_name(rule));
                CHECK(reduced_decision(ri) == expected);
            }
        }
    }
}

TEST_CASE("clique-edge-incident: votes of size two, K4 and P3") {
    Graph k4 = Graph::from_family("complete:4");
    ReducedInstance ri =
        reduce_clique_edges_as_votes(k4, 3, ScoringRule::Minisum, EdgeVoteVariant::Incident);
    CHECK(ri.election.n() == 6);
    CHECK(ri.query.m_star == 3);
    CHECK(ri.query.n_bar == 3); // 6 edges - C(3,2)
    CHECK(ri.query.target == Score{3});
    for (const Bitset& v : ri.election.votes) CHECK(v.count() == 2);
    CHECK(reduced_decision(ri));

    // forward witness: clique edges as non-outliers, clique vertices as committee
    auto clique = find_clique(k4, 3);
    REQUIRE(clique.has_value());
    std::vector<int> picked_edges;
    for (int j = 0; j < k4.edge_count(); ++j) {
        auto [u, v] = k4.edges[j];
        bool in = std::count(clique->begin(), clique->end(), u) &&
                  std::count(clique->begin(), clique->end(), v);
        if (in) picked_edges.push_back(j);
    }
    CHECK(witness_score(ri, *clique, picked_edges) == Score{3});

    // path with 3 edges has no triangle
    Graph p3 = Graph::from_family("path:3");
    ReducedInstance no =
        reduce_clique_edges_as_votes(p3, 3, ScoringRule::Minisum, EdgeVoteVariant::Incident);
    CHECK_FALSE(reduced_decision(no));
}

TEST_CASE("clique-edge-complement: regular graphs only, net refused") {
    Graph c5 = Graph::from_family("cycle:5");
    ReducedInstance ri = reduce_clique_edges_as_votes(c5, 3, ScoringRule::Minisum,
                                                      EdgeVoteVariant::Complement);
    CHECK(ri.query.m_star == 2); // vertices minus k
    CHECK(ri.query.target == Score{3});
    CHECK_FALSE(reduced_decision(ri)); // no triangle in C5

    Graph k4 = Graph::from_family("complete:4");
    ReducedInstance yes = reduce_clique_edges_as_votes(k4, 3, ScoringRule::Disapproval,
                                                       EdgeVoteVariant::Complement);
    CHECK(yes.query.target == Score{0});
    CHECK(reduced_decision(yes));

    // forward witness: committee = vertices outside the clique, clique-edge
    // votes kept; disapproval 0 and minisum (k-2)*C(k,2)
    {
        auto clique = find_clique(k4, 3);
        REQUIRE(clique.has_value());
        std::vector<int> committee;
        for (int u = 0; u < k4.vertex_count; ++u)
            if (!std::count(clique->begin(), clique->end(), u)) committee.push_back(u);
        std::vector<int> kept_edges;
        for (int j = 0; j < k4.edge_count(); ++j) {
            auto [u, v] = k4.edges[j];
            if (std::count(clique->begin(), clique->end(), u) &&
                std::count(clique->begin(), clique->end(), v))
                kept_edges.push_back(j);
        }
        CHECK(witness_score(yes, committee, kept_edges) == Score{0});
        ReducedInstance mini = reduce_clique_edges_as_votes(
            k4, 3, ScoringRule::Minisum, EdgeVoteVariant::Complement);
        CHECK(witness_score(mini, committee, kept_edges) == *mini.query.target);
    }

    CHECK_THROWS_AS(reduce_clique_edges_as_votes(Graph::from_family("path:3"), 3,
                                                 ScoringRule::Minisum,
                                                 EdgeVoteVariant::Complement),
                    QueryError);
    // net is unsound for this construction (see C5 free-yes) and refused
    CHECK_THROWS_AS(reduce_clique_edges_as_votes(c5, 3, ScoringRule::NetDisapproval,
                                                 EdgeVoteVariant::Complement),
                    QueryError);
}

TEST_CASE("clique-vertex variants on K4") {
    Graph k4 = Graph::from_family("complete:4");

    ReducedInstance non_inc = reduce_clique_vertices_as_votes(
        k4, 3, ScoringRule::Minisum, VertexVoteVariant::NonIncident);
    CHECK(non_inc.election.m == 6);
    CHECK(non_inc.election.n() == 4);
    CHECK(non_inc.query.m_star == 3);
    CHECK(non_inc.query.n_bar == 3);
    // t = (n-k)(m - C(k,2) - d) = 1 * (6 - 3 - 3)
    CHECK(non_inc.query.target == Score{0});
    CHECK(reduced_decision(non_inc));

    ReducedInstance inc = reduce_clique_vertices_as_votes(
        k4, 3, ScoringRule::Minisum, VertexVoteVariant::Incident);
    CHECK(inc.query.m_star == 3); // 6 edges - C(3,2)
    CHECK(inc.query.target == Score{0});
    for (int c : approval_counts(inc.election)) CHECK(c == 2);
    CHECK(reduced_decision(inc));

    // forward witness: clique edges (or their complement) as committee,
    // non-clique vertex votes kept; scores exactly (n-k)(m-C(k,2)-d)
    auto clique = find_clique(k4, 3);
    REQUIRE(clique.has_value());
    std::vector<int> clique_edges, other_edges;
    for (int j = 0; j < k4.edge_count(); ++j) {
        auto [u, v] = k4.edges[j];
        bool in = std::count(clique->begin(), clique->end(), u) &&
                  std::count(clique->begin(), clique->end(), v);
        (in ? clique_edges : other_edges).push_back(j);
    }
    std::vector<int> keep;
    for (int u = 0; u < k4.vertex_count; ++u)
        if (!std::count(clique->begin(), clique->end(), u)) keep.push_back(u);
    CHECK(witness_score(non_inc, clique_edges, keep) == *non_inc.query.target);
    CHECK(witness_score(inc, other_edges, keep) == *inc.query.target);

    // net is unsound for both vertex-vote variants and refused
    for (VertexVoteVariant variant :
         {VertexVoteVariant::NonIncident, VertexVoteVariant::Incident})
        CHECK_THROWS_AS(reduce_clique_vertices_as_votes(k4, 3,
                                                        ScoringRule::NetDisapproval,
                                                        variant),
                        QueryError);
    CHECK_THROWS_AS(reduce_clique_vertices_as_votes(Graph::from_family("path:3"), 2,
                                                    ScoringRule::Minisum,
                                                    VertexVoteVariant::Incident),
                    QueryError);
}

TEST_CASE("clique-vertex round trips on cycles") {
    for (const char* spec : {"cycle:4", "cycle:5", "cycle:6"}) {
        Graph g = Graph::from_family(spec);
        for (int k = 2; k < g.vertex_count; ++k) {
            bool expected = has_clique(g, k);
            for (VertexVoteVariant variant :
                 {VertexVoteVariant::NonIncident, VertexVoteVariant::Incident}) {
                for (ScoringRule rule :
                     {ScoringRule::Minisum, ScoringRule::Disapproval}) {
                    ReducedInstance ri;
                    try {
                        ri = reduce_clique_vertices_as_votes(g, k, rule, variant);
                    } catch (const QueryError&) {
                        continue; // parameter degeneracy for this (graph, k)
                    }
                    CAPTURE(spec);
                    CAPTURE(k);
                    CAPTURE(rule_name(rule));
                    CHECK(reduced_decision(ri) == expected);
                }
            }
        }
    }
}

TEST_CASE("clique-net-dummy: K4 yes, C4 no") {
    Graph k4 = Graph::from_family("complete:4");
    ReducedInstance ri = reduce_clique_net_dummy(k4, 3);
    CHECK(ri.election.m == 9);            // 6 edges + 3 dummies
    CHECK(ri.election.n() == 14);         // 4 vertex votes + 10 dummy votes
    CHECK(ri.query.m_star == 6);
    CHECK(ri.query.n_bar == 3);
    CHECK(ri.query.target == Score{0});
    CHECK(ri.dummy_candidates == std::vector<int>{6, 7, 8});
    CHECK(static_cast<int>(ri.dummy_votes.size()) == 10);
    CHECK(reduced_decision(ri));

    // forward witness from the clique scores exactly 0
    auto clique = find_clique(k4, 3);
    REQUIRE(clique.has_value());
    std::vector<int> committee = ri.dummy_candidates;
    for (int j = 0; j < k4.edge_count(); ++j) {
        auto [u, v] = k4.edges[j];
        if (std::count(clique->begin(), clique->end(), u) &&
            std::count(clique->begin(), clique->end(), v))
            committee.push_back(j);
    }
    std::sort(committee.begin(), committee.end());
    std::vector<int> keep;
    for (int i = 0; i < ri.election.n(); ++i) {
        bool outlier = i < k4.vertex_count &&
                       std::count(clique->begin(), clique->end(), i);
        if (!outlier) keep.push_back(i);
    }
    CHECK(witness_score(ri, committee, keep) == Score{0});

    ReducedInstance no = reduce_clique_net_dummy(Graph::from_family("cycle:4"), 3);
    CHECK_FALSE(reduced_decision(no));

    CHECK_THROWS_AS(reduce_clique_net_dummy(k4, 1), QueryError);
    CHECK_THROWS_AS(reduce_clique_net_dummy(k4, 4), QueryError);
}

TEST_CASE("biclique: complete bipartite yes, matching no") {
    Graph k22 = Graph::from_family("complete_bipartite:2:2");
    ReducedInstance ri = reduce_biclique(k22, 2);
    CHECK(ri.election.m == 2);
    CHECK(ri.election.n() == 2);
    CHECK(ri.query.m_star == 2);
    CHECK(ri.query.n_bar == 0);
    CHECK(ri.query.target == Score{0});
    CHECK(reduced_decision(ri));

    // forward witness: (A, B) sides as non-outliers and committee, score 0
    auto ab = find_biclique(k22, 2);
    REQUIRE(ab.has_value());
    CHECK(witness_score(ri, ab->second, ab->first) == Score{0});

    Graph matching = Graph::build(4, {{0, 2}, {1, 3}}, 2);
    ReducedInstance no = reduce_biclique(matching, 2);
    CHECK_FALSE(reduced_decision(no));

    CHECK_THROWS_AS(reduce_biclique(Graph::from_family("cycle:4"), 2), QueryError);
    CHECK_THROWS_AS(reduce_biclique(k22, 3), QueryError);
}

TEST_CASE("biclique round trips on random bipartite graphs") {
    SplitMix64 rng(1234);
    for (int trial = 0; trial < 25; ++trial) {
        int left = 2 + static_cast<int>(rng.below(4));
        int right = 2 + static_cast<int>(rng.below(4));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < left; ++u)
            for (int v = 0; v < right; ++v)
                if (rng.below(2)) edges.emplace_back(u, left + v);
        Graph g = Graph::build(left + right, std::move(edges), left);
        for (int k = 1; k <= std::min(left, right); ++k) {
            ReducedInstance ri = reduce_biclique(g, k);
            CAPTURE(trial);
            CAPTURE(k);
            CHECK(reduced_decision(ri) == has_biclique(g, k));
        }
    }
}

TEST_CASE("complement transform: pointwise, involution, optimum-preserving") {
    // m=4, X={0,1}, S={1,2}: |X\S| = 1 equals |S'\X^c| on the image
    Bitset x = Bitset::from_indices(4, {0, 1});
    Bitset s = Bitset::from_indices(4, {1, 2});
    CHECK(per_vote_score(ScoringRule::Disapproval, x, s) ==
          per_vote_score(ScoringRule::DisapprovalPrime, x.complement(), s.complement()));

    SplitMix64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        Election e = random_election_sized(rng, 6, 6);
        OutlierQuery q = random_query(rng, e, ScoringRule::Disapproval);

        auto [image, iq] = complement_transform(e, q);
        CHECK(iq.rule == ScoringRule::DisapprovalPrime);
        CHECK(iq.m_star == e.m - q.m_star);
        CHECK(iq.n_bar == q.n_bar);

        auto [back, bq] = complement_transform(image, iq);
        CHECK(bq.rule == q.rule);
        CHECK(bq.m_star == q.m_star);
        for (int i = 0; i < e.n(); ++i) CHECK(back.votes[i] == e.votes[i]);

        CHECK(brute_force_oracle(e, q).solution.score ==
              brute_force_oracle(image, iq).solution.score);
    }

    OutlierQuery bad{ScoringRule::Minisum, 1, 0, std::nullopt};
    Election e2;
    e2.m = 2;
    e2.votes = {Bitset(2)};
    CHECK_THROWS_AS(complement_transform(e2, bad), QueryError);
}
