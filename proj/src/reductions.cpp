#include "ocsel/reductions.hpp"

#include <algorithm>
#include <string>

#include "ocsel/combinatorics.hpp"

namespace ocsel {

namespace {

Score choose2(int k) { return static_cast<Score>(k) * (k - 1) / 2; }

void require_k_range(int k, int lo, int hi, const std::string& who) {
    if (k < lo || k > hi)
        throw QueryError(who + ": k must lie in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "], got " + std::to_string(k));
}

void reject_negative_target(Score t, const std::string& who) {
    if (t < 0)
        throw QueryError(who + ": target " + std::to_string(t) +
                         " is negative and unsatisfiable for a nonnegative rule");
}

} // namespace

ReducedInstance reduce_vc3(const Graph& g, int k, ScoringRule rule) {
    if (g.regular_degree() != 3)
        throw QueryError("reduce_vc3 requires a 3-regular graph");
    if (rule == ScoringRule::DisapprovalPrime)
        throw QueryError("reduce_vc3: disapproval-prime is reached via the "
                         "complement transform, not directly");
    const int n = g.vertex_count;
    require_k_range(k, 3, n - 1, "reduce_vc3");

    Election e;
    e.m = n;
    e.votes.assign(n, Bitset(n));
    for (auto [u, v] : g.edges) {
        e.votes[u].set(v);
        e.votes[v].set(u);
    }

    Score t = rule == ScoringRule::NetDisapproval
                  ? static_cast<Score>(n - k) * (k - 6)
                  : static_cast<Score>(n - k) * (k - 3);

    ReducedInstance out;
    out.election = std::move(e);
    out.query = OutlierQuery{rule, k, k, t};
    out.reduction = "vc3";
    out.source = g;
    out.k = k;
    return out;
}

ReducedInstance reduce_clique_edges_as_votes(const Graph& g, int k, ScoringRule rule,
                                             EdgeVoteVariant variant) {
    const int nv = g.vertex_count;
    const int ne = g.edge_count();
    const char* name = variant == EdgeVoteVariant::Complement ? "clique-edge-complement"
                                                              : "clique-edge-incident";
    if (variant == EdgeVoteVariant::Complement && !g.regular_degree())
        throw QueryError(std::string(name) + " requires a regular graph");
    require_k_range(k, 2, nv, name);
    if (choose2(k) > ne)
        throw QueryError(std::string(name) + ": C(k,2)=" +
                         std::to_string(choose2(k)) + " non-outliers exceed the " +
                         std::to_string(ne) + " edge votes");

    Score t;
    if (variant == EdgeVoteVariant::Complement) {
        if (rule == ScoringRule::Minisum)
            t = (k - 2) * choose2(k);
        else if (rule == ScoringRule::Disapproval)
            t = 0;
        else
            // no sound net target exists for this gadget: taking every
            // edge-vote as a non-outlier is free negative mass (a 5-cycle
            // with k=3 reaches -4 with no triangle), so nothing forces a
            // clique
            throw QueryError(std::string(name) + " supports minisum and disapproval only");
    } else {
        if (rule == ScoringRule::Minisum || rule == ScoringRule::Disapproval)
            t = (k - 2) * choose2(k);
        else if (rule == ScoringRule::NetDisapproval)
            t = (k - 4) * choose2(k);
        else
            throw QueryError(std::string(name) + ": disapproval-prime is reached via "
                                                 "the complement transform");
    }

    Election e;
    e.m = nv;
    e.votes.assign(ne, Bitset(nv));
    for (int i = 0; i < ne; ++i) {
        auto [u, v] = g.edges[i];
        if (variant == EdgeVoteVariant::Incident) {
            e.votes[i].set(u);
            e.votes[i].set(v);
        } else {
            for (int w = 0; w < nv; ++w)
                if (w != u && w != v) e.votes[i].set(w);
        }
    }

    const int m_star = variant == EdgeVoteVariant::Complement ? nv - k : k;
    const int n_bar = ne - static_cast<int>(choose2(k));

    ReducedInstance out;
    out.election = std::move(e);
    out.query = OutlierQuery{rule, m_star, n_bar, t};
    out.reduction = name;
    out.source = g;
    out.k = k;
    return out;
}

ReducedInstance reduce_clique_vertices_as_votes(const Graph& g, int k, ScoringRule rule,
                                                VertexVoteVariant variant) {
    const int nv = g.vertex_count;
    const int ne = g.edge_count();
    const char* name = variant == VertexVoteVariant::NonIncident
                           ? "clique-vertex-nonincident"
                           : "clique-vertex-incident";
    std::optional<int> d = g.regular_degree();
    if (!d) throw QueryError(std::string(name) + " requires a regular graph");
    require_k_range(k, 2, nv - 1, name);
    if (choose2(k) > ne)
        throw QueryError(std::string(name) + ": C(k,2)=" + std::to_string(choose2(k)) +
                         " exceeds the " + std::to_string(ne) + " edge candidates");

    Score t;
    if (rule == ScoringRule::Minisum)
        t = static_cast<Score>(nv - k) * (ne - choose2(k) - *d);
    else if (rule == ScoringRule::Disapproval)
        t = variant == VertexVoteVariant::NonIncident
                ? 0
                : static_cast<Score>(nv - k) * (ne - choose2(k) - *d);
    else if (rule == ScoringRule::NetDisapproval)
        // dummy candidates approved by every vote cannot patch this gadget
        // for net scoring: with no dummy votes to pin them into the
        // committee, a perfect-matching committee on a 6-cycle already
        // reaches -8 with no triangle. reduce_clique_net_dummy covers net.
        throw QueryError(std::string(name) + " supports minisum and disapproval only");
    else
        throw QueryError(std::string(name) + ": disapproval-prime is reached via the "
                                             "complement transform");
    reject_negative_target(t, name);

    Election e;
    e.m = ne;
    e.votes.assign(nv, Bitset(ne));
    for (int j = 0; j < ne; ++j) {
        auto [u, v] = g.edges[j];
        if (variant == VertexVoteVariant::Incident) {
            e.votes[u].set(j);
            e.votes[v].set(j);
        } else {
            for (int i = 0; i < nv; ++i)
                if (i != u && i != v) e.votes[i].set(j);
        }
    }

    const int m_star = variant == VertexVoteVariant::NonIncident
                           ? static_cast<int>(choose2(k))
                           : ne - static_cast<int>(choose2(k));

    ReducedInstance out;
    out.election = std::move(e);
    out.query = OutlierQuery{rule, m_star, k, t};
    out.reduction = name;
    out.source = g;
    out.k = k;
    return out;
}

ReducedInstance reduce_clique_net_dummy(const Graph& g, int k) {
    const int nv = g.vertex_count;
    const int ne = g.edge_count();
    require_k_range(k, 2, nv - 1, "clique-net-dummy");
    const int dummies = static_cast<int>(choose2(k));
    if (dummies > ne)
        throw QueryError("clique-net-dummy: committee of 2*C(k,2) does not fit " +
                         std::to_string(ne) + " edge candidates plus dummies");

    const int m_total = ne + dummies;
    const int dummy_vote_count = nv + 2 * k;

    Election e;
    e.m = m_total;
    e.votes.assign(nv + dummy_vote_count, Bitset(m_total));
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < ne; ++j) {
            auto [u, v] = g.edges[j];
            if (u != i && v != i) e.votes[i].set(j);
        }
    for (int j = 0; j < dummy_vote_count; ++j)
        for (int c = ne; c < m_total; ++c) e.votes[nv + j].set(c);

    ReducedInstance out;
    out.election = std::move(e);
    out.query = OutlierQuery{ScoringRule::NetDisapproval, 2 * dummies, k, Score{0}};
    out.reduction = "clique-net-dummy";
    out.source = g;
    out.k = k;
    for (int c = ne; c < m_total; ++c) out.dummy_candidates.push_back(c);
    for (int j = 0; j < dummy_vote_count; ++j) out.dummy_votes.push_back(nv + j);
    return out;
}

ReducedInstance reduce_biclique(const Graph& g, int k) {
    if (!g.left_size)
        throw QueryError("reduce_biclique requires a declared bipartition");
    const int left = *g.left_size;
    const int right = g.vertex_count - left;
    require_k_range(k, 1, std::min(left, right), "reduce_biclique");

    Election e;
    e.m = right;
    e.votes.assign(left, Bitset(right));
    for (auto [u, v] : g.edges) e.votes[u].set(v - left);

    ReducedInstance out;
    out.election = std::move(e);
    out.query = OutlierQuery{ScoringRule::Disapproval, k, left - k, Score{0}};
    out.reduction = "biclique";
    out.source = g;
    out.k = k;
    return out;
}

std::pair<Election, OutlierQuery> complement_transform(const Election& e,
                                                       const OutlierQuery& q) {
    e.validate();
    q.validate(e);
    if (q.rule != ScoringRule::Disapproval && q.rule != ScoringRule::DisapprovalPrime)
        throw QueryError("complement_transform applies to the two disapproval rules");

    Election image;
    image.m = e.m;
    image.votes.reserve(e.votes.size());
    for (const Bitset& v : e.votes) image.votes.push_back(v.complement());

    OutlierQuery iq = q;
    iq.m_star = e.m - q.m_star;
    iq.rule = q.rule == ScoringRule::Disapproval ? ScoringRule::DisapprovalPrime
                                                 : ScoringRule::Disapproval;
    return {std::move(image), iq};
}

} // namespace ocsel
