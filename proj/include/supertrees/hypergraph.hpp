#ifndef SUPERTREES_HYPERGRAPH_HPP
#define SUPERTREES_HYPERGRAPH_HPP

#include <utility>
#include <vector>

#include "supertrees/error.hpp"

namespace supertrees {

using Edge = std::vector<int>; // strictly sorted set of k vertex ids

// k-uniform hypergraph on vertices 0..n-1. Immutable after construction;
// incidence lists are built once and shared read-only.
class Hypergraph {
public:
    // Validates uniformity, vertex range and edge distinctness.
    // Throws NonUniformEdge / VertexOutOfRange / DuplicateEdge / BadParams.
    Hypergraph(int k, int n, std::vector<Edge> edges);

    int k() const { return k_; }
    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int j) const { return edges_[static_cast<size_t>(j)]; }

    // Indices of edges containing vertex v.
    const std::vector<int>& incident_edges(int v) const {
        return incidence_[static_cast<size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(incidence_[static_cast<size_t>(v)].size()); }
    std::vector<int> degrees() const;
    int max_degree() const;

    bool is_connected() const;

    bool operator==(const Hypergraph& other) const {
        return k_ == other.k_ && n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int k_;
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;
};

// Connected, acyclic k-uniform hypergraph. Acyclicity is certified by the
// count identity n = m(k-1)+1 together with connectivity (the vertex-edge
// incidence graph is a tree exactly when both hold).
class Supertree {
public:
    // Throws Disconnected / HasCycle / IntersectionTooLarge.
    explicit Supertree(Hypergraph g);

    const Hypergraph& graph() const { return graph_; }
    int k() const { return graph_.k(); }
    int n() const { return graph_.n(); }
    int m() const { return graph_.m(); }
    const std::vector<Edge>& edges() const { return graph_.edges(); }
    int degree(int v) const { return graph_.degree(v); }

private:
    Hypergraph graph_;
};

inline Supertree validate_supertree(const Hypergraph& g) { return Supertree(g); }

// Edge counts along shortest alternating paths from source to every vertex.
std::vector<int> distances_from(const Hypergraph& g, int source);

// Max distance over all vertex pairs; 0 for the single-vertex tree.
int diameter(const Supertree& t);

// p = edges with exactly k-1 degree-1 vertices anchored at a degree>=2 vertex,
// q = degree-1 vertices. The single edge (m=1) counts as 0 pendent edges:
// there is no anchor of degree >= 2, so the pendent-path definition never
// fires. This is a convention; callers that treat the one-edge tree as
// pendent must special-case it themselves.
std::pair<int, int> pendent_counts(const Supertree& t);

bool is_pendent_edge(const Hypergraph& g, int edge_index);

// Every edge has at least k-2 degree-1 vertices, i.e. the supertree is the
// k-th power of an ordinary tree.
bool is_power_hypertree(const Supertree& t);

// Relabels vertices by perm (perm[old] = new). Tests use this for
// invariance properties.
Hypergraph relabel(const Hypergraph& g, const std::vector<int>& perm);

} // namespace supertrees

#endif // SUPERTREES_HYPERGRAPH_HPP
