#include "ocsel/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ocsel/combinatorics.hpp"

namespace ocsel {

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(vertex_count, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::optional<int> Graph::regular_degree() const {
    std::vector<int> deg = degrees();
    if (deg.empty()) return std::nullopt;
    for (int d : deg)
        if (d != deg[0]) return std::nullopt;
    return deg[0];
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

Graph Graph::build(int vertex_count, std::vector<std::pair<int, int>> raw_edges,
                   std::optional<int> left_size) {
    if (vertex_count < 1) throw InputError("graph needs at least one vertex");
    for (auto& [u, v] : raw_edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(raw_edges.begin(), raw_edges.end());
    if (std::adjacent_find(raw_edges.begin(), raw_edges.end()) != raw_edges.end())
        throw InputError("duplicate edge");

    if (left_size) {
        if (*left_size < 0 || *left_size > vertex_count)
            throw InputError("bipartition size out of range");
        for (auto [u, v] : raw_edges)
            if (!(u < *left_size && v >= *left_size))
                throw InputError("edge does not cross the declared bipartition");
    }

    Graph g;
    g.vertex_count = vertex_count;
    g.edges = std::move(raw_edges);
    g.left_size = left_size;
    return g;
}

Graph Graph::parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int vertex_count = -1;
    std::optional<int> left;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        auto fail = [&](const std::string& why) {
            throw InputError("graph line " + std::to_string(lineno) + ": " + why);
        };
        if (tag == "p") {
            if (vertex_count >= 0) fail("duplicate 'p' line");
            if (!(ls >> vertex_count) || vertex_count < 1) fail("bad vertex count");
        } else if (tag == "b") {
            int l;
            if (!(ls >> l)) fail("bad bipartition size");
            left = l;
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) fail("bad edge");
            edges.emplace_back(u, v);
        } else {
            fail("unknown tag '" + tag + "'");
        }
    }
    if (vertex_count < 0) throw InputError("graph file missing 'p <vertex_count>' line");
    return build(vertex_count, std::move(edges), left);
}

std::string Graph::to_text() const {
    std::ostringstream out;
    out << "p " << vertex_count << "\n";
    if (left_size) out << "b " << *left_size << "\n";
    for (auto [u, v] : edges) out << "e " << u << " " << v << "\n";
    return out.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_pos_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size() || v < 1) throw InputError("");
        return static_cast<int>(v);
    } catch (...) {
        throw InputError("bad " + what + " in family spec: '" + s + "'");
    }
}

// pairing model with rejection; deterministic for a fixed seed
Graph random_regular(int n, int d, std::uint64_t seed) {
    if (d >= n || (static_cast<long long>(n) * d) % 2 != 0)
        throw InputError("no " + std::to_string(d) + "-regular simple graph on " +
                         std::to_string(n) + " vertices");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * d);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.below(i)]);

        std::vector<std::pair<int, int>> edges;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            if (u > v) std::swap(u, v);
            edges.emplace_back(u, v);
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return Graph::build(n, std::move(edges));
    }
    throw InputError("random_regular: gave up pairing after 10000 attempts");
}

} // namespace

Graph Graph::from_family(const std::string& spec) {
    std::vector<std::string> parts = split(spec, ':');
    const std::string& kind = parts[0];

    if (kind == "complete" && parts.size() == 2) {
        int k = parse_pos_int(parts[1], "size");
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
        return build(k, std::move(edges));
    }
    if (kind == "cycle" && parts.size() == 2) {
        int k = parse_pos_int(parts[1], "size");
        if (k < 3) throw InputError("cycle needs at least 3 vertices");
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < k; ++u) edges.emplace_back(u, (u + 1) % k);
        return build(k, std::move(edges));
    }
    if (kind == "path" && parts.size() == 2) {
        // path:k is the path with k edges (k+1 vertices)
        int k = parse_pos_int(parts[1], "length");
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < k; ++u) edges.emplace_back(u, u + 1);
        return build(k + 1, std::move(edges));
    }
    if (kind == "complete_bipartite" && parts.size() == 3) {
        int a = parse_pos_int(parts[1], "left size");
        int b = parse_pos_int(parts[2], "right size");
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
        return build(a + b, std::move(edges), a);
    }
    if (kind == "random_regular" && parts.size() == 4) {
        int n = parse_pos_int(parts[1], "size");
        int d = parse_pos_int(parts[2], "degree");
        int seed = parse_pos_int(parts[3], "seed");
        return random_regular(n, d, static_cast<std::uint64_t>(seed));
    }
    throw InputError("unknown graph family spec: '" + spec + "'");
}

Graph Graph::load(const std::string& path_or_family) {
    static const char* prefixes[] = {"complete", "cycle", "path", "complete_bipartite",
                                     "random_regular"};
    std::string head = path_or_family.substr(0, path_or_family.find(':'));
    for (const char* p : prefixes)
        if (head == p) return from_family(path_or_family);

    std::ifstream in(path_or_family);
    if (!in) throw InputError("cannot open graph file '" + path_or_family + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

namespace {

void check_oracle_size(const Graph& g) {
    if (g.vertex_count > kGraphOracleMaxVertices)
        throw CapError("graph oracle refuses " + std::to_string(g.vertex_count) +
                       " vertices (cap " + std::to_string(kGraphOracleMaxVertices) + ")");
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.vertex_count, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    return adj;
}

} // namespace

bool has_clique(const Graph& g, int k) {
    check_oracle_size(g);
    if (k <= 1) return k <= g.vertex_count;
    if (k > g.vertex_count) return false;

    std::vector<std::uint32_t> adj = adjacency_masks(g);
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    bool more = true;
    while (more) {
        std::uint32_t mask = 0;
        for (int v : comb) mask |= std::uint32_t{1} << v;
        bool clique = true;
        for (int v : comb) {
            if ((adj[v] & mask) != (mask & ~(std::uint32_t{1} << v))) {
                clique = false;
                break;
            }
        }
        if (clique) return true;
        more = next_combination(comb, g.vertex_count);
    }
    return false;
}

int min_vertex_cover_size(const Graph& g) {
    check_oracle_size(g);
    int best = g.vertex_count;
    const std::uint32_t limit = std::uint32_t{1} << g.vertex_count;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best) continue;
        bool covers = true;
        for (auto [u, v] : g.edges) {
            if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
                covers = false;
                break;
            }
        }
        if (covers) best = size;
    }
    return best;
}

bool has_biclique(const Graph& g, int k) {
    check_oracle_size(g);
    if (!g.left_size) throw QueryError("has_biclique needs a declared bipartition");
    const int left = *g.left_size;
    const int right = g.vertex_count - left;
    if (k <= 0) return true;
    if (k > left || k > right) return false;

    std::vector<std::uint32_t> nbr(left, 0); // right-neighbourhoods of left vertices
    for (auto [u, v] : g.edges) nbr[u] |= std::uint32_t{1} << (v - left);

    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    bool more = true;
    while (more) {
        std::uint32_t common = ~std::uint32_t{0};
        for (int u : comb) common &= nbr[u];
        if (__builtin_popcount(common) >= k) return true;
        more = next_combination(comb, left);
    }
    return false;
}

} // namespace ocsel
