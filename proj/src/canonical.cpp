#include "supertrees/canonical.hpp"

#include <algorithm>
#include <map>

namespace supertrees {

namespace {

// The incidence tree of a supertree: one node per edge, one node per vertex
// of degree >= 2 (degree-1 vertices are interchangeable within their edge,
// so they are folded into a per-edge count). This tree, with labels, holds
// exactly the information of the supertree up to isomorphism.
struct IncidenceTree {
    std::vector<std::string> label;        // node label used by the AHU code
    std::vector<std::vector<int>> adj;
    int size() const { return static_cast<int>(label.size()); }
};

IncidenceTree build_incidence_tree(const Hypergraph& g, int marked_vertex) {
    IncidenceTree t;
    int m = g.m();
    std::vector<int> vertex_node(static_cast<size_t>(g.n()), -1);
    t.label.resize(static_cast<size_t>(m));
    t.adj.resize(static_cast<size_t>(m));
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) >= 2) {
            vertex_node[static_cast<size_t>(v)] = t.size();
            t.label.push_back(v == marked_vertex ? "V" : "v");
            t.adj.emplace_back();
        }
    }
    for (int j = 0; j < m; ++j) {
        int leaves = 0;
        bool marked_leaf = false;
        for (int v : g.edge(j)) {
            int node = vertex_node[static_cast<size_t>(v)];
            if (node < 0) {
                ++leaves;
                if (v == marked_vertex)
                    marked_leaf = true;
            } else {
                t.adj[static_cast<size_t>(j)].push_back(node);
                t.adj[static_cast<size_t>(node)].push_back(j);
            }
        }
        t.label[static_cast<size_t>(j)] = "e" + std::to_string(leaves) + (marked_leaf ? "M" : "");
    }
    return t;
}

// Leaf-peeling centers; one or two nodes.
std::vector<int> tree_centers(const IncidenceTree& t) {
    int n = t.size();
    if (n == 1)
        return {0};
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<int> layer;
    for (int i = 0; i < n; ++i) {
        deg[static_cast<size_t>(i)] = static_cast<int>(t.adj[static_cast<size_t>(i)].size());
        if (deg[static_cast<size_t>(i)] == 1)
            layer.push_back(i);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int u : layer) {
            --remaining;
            for (int w : t.adj[static_cast<size_t>(u)])
                if (--deg[static_cast<size_t>(w)] == 1)
                    next.push_back(w);
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string ahu_code(const IncidenceTree& t, int node, int parent) {
    std::vector<std::string> parts;
    for (int w : t.adj[static_cast<size_t>(node)])
        if (w != parent)
            parts.push_back(ahu_code(t, w, node));
    std::sort(parts.begin(), parts.end());
    std::string out = t.label[static_cast<size_t>(node)];
    out += '(';
    for (const auto& p : parts)
        out += p;
    out += ')';
    return out;
}

std::string code_of(const Supertree& tree, int marked_vertex) {
    const Hypergraph& g = tree.graph();
    std::string prefix = "k" + std::to_string(g.k()) + "|";
    if (g.m() == 0)
        return prefix + "()";
    IncidenceTree t = build_incidence_tree(g, marked_vertex);
    std::string best;
    for (int c : tree_centers(t)) {
        std::string code = ahu_code(t, c, -1);
        if (best.empty() || code < best)
            best = std::move(code);
    }
    return prefix + best;
}

} // namespace

CanonicalCode canonical_code(const Supertree& t) { return {code_of(t, -1)}; }

CanonicalCode canonical_code(const Supertree& t, int marked_vertex) {
    if (marked_vertex < 0 || marked_vertex >= t.n())
        throw Error(ErrorCode::VertexOutOfRange,
                    "marked vertex " + std::to_string(marked_vertex) + " not in [0, " +
                        std::to_string(t.n()) + ")");
    return {code_of(t, marked_vertex)};
}

bool isomorphic(const Supertree& a, const Supertree& b) {
    return canonical_code(a) == canonical_code(b);
}

std::vector<std::vector<int>> vertex_orbits(const Supertree& t) {
    std::map<CanonicalCode, std::vector<int>> groups;
    for (int v = 0; v < t.n(); ++v)
        groups[canonical_code(t, v)].push_back(v);
    std::vector<std::vector<int>> orbits;
    orbits.reserve(groups.size());
    for (auto& [code, members] : groups)
        orbits.push_back(std::move(members));
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return orbits;
}

} // namespace supertrees
