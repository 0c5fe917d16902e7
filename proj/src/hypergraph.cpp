#include "supertrees/hypergraph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace supertrees {

Hypergraph::Hypergraph(int k, int n, std::vector<Edge> edges)
    : k_(k), n_(n), edges_(std::move(edges)) {
    if (k_ < 2)
        throw Error(ErrorCode::BadParams, "edge size must be at least 2, got " + std::to_string(k_));
    if (n_ < 1)
        throw Error(ErrorCode::BadParams, "vertex count must be positive, got " + std::to_string(n_));

    for (auto& e : edges_) {
        if (static_cast<int>(e.size()) != k_)
            throw Error(ErrorCode::NonUniformEdge,
                        "edge has " + std::to_string(e.size()) + " vertices, expected " +
                            std::to_string(k_));
        std::sort(e.begin(), e.end());
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n_)
                throw Error(ErrorCode::VertexOutOfRange,
                            "vertex " + std::to_string(e[i]) + " not in [0, " + std::to_string(n_) +
                                ")");
            if (i > 0 && e[i] == e[i - 1])
                throw Error(ErrorCode::NonUniformEdge,
                            "repeated vertex " + std::to_string(e[i]) + " within an edge");
        }
    }

    std::set<Edge> seen;
    for (const auto& e : edges_) {
        if (!seen.insert(e).second)
            throw Error(ErrorCode::DuplicateEdge, "edge set contains a repeated edge");
    }

    incidence_.assign(static_cast<size_t>(n_), {});
    for (int j = 0; j < m(); ++j)
        for (int v : edges_[static_cast<size_t>(j)])
            incidence_[static_cast<size_t>(v)].push_back(j);
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> d(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v)
        d[static_cast<size_t>(v)] = degree(v);
    return d;
}

int Hypergraph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

bool Hypergraph::is_connected() const {
    if (n_ == 1)
        return true;
    std::vector<int> dist = distances_from(*this, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> distances_from(const Hypergraph& g, int source) {
    std::vector<int> dist(static_cast<size_t>(g.n()), -1);
    std::vector<char> edge_done(static_cast<size_t>(g.m()), 0);
    std::queue<int> q;
    dist[static_cast<size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int j : g.incident_edges(v)) {
            if (edge_done[static_cast<size_t>(j)])
                continue;
            edge_done[static_cast<size_t>(j)] = 1;
            for (int w : g.edge(j)) {
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    q.push(w);
                }
            }
        }
    }
    return dist;
}

Supertree::Supertree(Hypergraph g) : graph_(std::move(g)) {
    if (!graph_.is_connected())
        throw Error(ErrorCode::Disconnected, "hypergraph is not connected");
    // Connected k-uniform hypergraphs satisfy n <= m(k-1)+1, with equality
    // exactly for the acyclic ones.
    long long expected = static_cast<long long>(graph_.m()) * (graph_.k() - 1) + 1;
    if (graph_.n() != expected)
        throw Error(ErrorCode::HasCycle, "connected with n=" + std::to_string(graph_.n()) +
                                             " but acyclicity requires n=" +
                                             std::to_string(expected));
    // Implied by the two checks above; asserted defensively.
    const auto& edges = graph_.edges();
    for (size_t a = 0; a < edges.size(); ++a)
        for (size_t b = a + 1; b < edges.size(); ++b) {
            Edge common;
            std::set_intersection(edges[a].begin(), edges[a].end(), edges[b].begin(),
                                  edges[b].end(), std::back_inserter(common));
            if (common.size() > 1)
                throw Error(ErrorCode::IntersectionTooLarge,
                            "two edges share " + std::to_string(common.size()) + " vertices");
        }
}

int diameter(const Supertree& t) {
    const Hypergraph& g = t.graph();
    if (g.m() == 0)
        return 0;
    std::vector<int> d0 = distances_from(g, 0);
    int u = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    std::vector<int> d1 = distances_from(g, u);
    return *std::max_element(d1.begin(), d1.end());
}

std::pair<int, int> pendent_counts(const Supertree& t) {
    const Hypergraph& g = t.graph();
    int q = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 1)
            ++q;
    int p = 0;
    for (int j = 0; j < g.m(); ++j)
        if (is_pendent_edge(g, j))
            ++p;
    return {p, q};
}

bool is_pendent_edge(const Hypergraph& g, int edge_index) {
    int leaves = 0;
    for (int v : g.edge(edge_index))
        if (g.degree(v) == 1)
            ++leaves;
    return leaves == g.k() - 1;
}

bool is_power_hypertree(const Supertree& t) {
    const Hypergraph& g = t.graph();
    for (int j = 0; j < g.m(); ++j) {
        int leaves = 0;
        for (int v : g.edge(j))
            if (g.degree(v) == 1)
                ++leaves;
        if (leaves < g.k() - 2)
            return false;
    }
    return true;
}

Hypergraph relabel(const Hypergraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n())
        throw Error(ErrorCode::DimensionMismatch,
                    "permutation length " + std::to_string(perm.size()) + " but n=" +
                        std::to_string(g.n()));
    std::vector<char> hit(perm.size(), 0);
    for (int p : perm) {
        if (p < 0 || p >= g.n() || hit[static_cast<size_t>(p)])
            throw Error(ErrorCode::BadParams, "not a permutation of 0..n-1");
        hit[static_cast<size_t>(p)] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(g.m()));
    for (const auto& e : g.edges()) {
        Edge f;
        f.reserve(e.size());
        for (int v : e)
            f.push_back(perm[static_cast<size_t>(v)]);
        edges.push_back(std::move(f));
    }
    return Hypergraph(g.k(), g.n(), std::move(edges));
}

} // namespace supertrees
