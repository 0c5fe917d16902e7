#ifndef SUPERTREES_FAMILIES_HPP
#define SUPERTREES_FAMILIES_HPP

#include <utility>
#include <vector>

#include "supertrees/hypergraph.hpp"

namespace supertrees {

// Non-increasing positive degree sequence realizable by a k-uniform
// supertree. Construction sorts and validates: sum = m*k for integer m and
// length = m(k-1)+1; those two conditions are exactly realizability.
struct DegreeSequence {
    std::vector<int> degrees;
    int k;

    DegreeSequence(std::vector<int> degrees, int k);
    int m() const;
    int n() const { return static_cast<int>(degrees.size()); }
};

// Witness that vertex labels follow a breadth-first ordering from the root
// order[0]: order is the vertex permutation (position -> vertex), heights the
// per-vertex distance from the root.
struct BFSOrdering {
    std::vector<int> order;
    std::vector<int> heights;
};

struct BFSSupertree {
    Supertree tree;
    BFSOrdering ordering;
};

// Fixed labelings throughout (documented in README): loose_path spine vertex
// i(k-1) joins edges i-1 and i; hyperstar center is 0; attached edges take
// consecutive fresh labels in attachment order.

Supertree loose_path(int m, int k);
Supertree hyperstar(int m, int k);

// k-th power of an ordinary tree given by its 2-uniform edge list: each edge
// gains k-2 fresh vertices (appended after the original labels).
Supertree power_k(const std::vector<std::pair<int, int>>& tree_edges, int k);

// Loose path of d edges plus m-d pendent edges attached at one vertex:
//   s1: spine vertex floor(d/2)(k-1)           (3 <= d <= m)
//   s2: spine vertex (floor(d/2)-1)(k-1)       (4 <= d <= m)
//   s3: first interior vertex of the middle edge, floor(d/2)(k-1)+1
//       (d odd, 3 <= d <= m, k >= 3)
// s4: loose path of 3 edges, m-4 pendent edges at spine vertex k-1 and one
// at spine vertex 2(k-1) (m >= 5).
Supertree s1(int m, int d, int k);
Supertree s2(int m, int d, int k);
Supertree s3(int m, int d, int k);
Supertree s4(int m, int k);

// Hyperstar of p edges with a pendent path grown from the first tip of each
// star edge; the (n-1)/(k-1) - p extra edges split into paths whose lengths
// differ by at most one, longer paths on lower-labeled tips.
Supertree t1(int n, int p, int k);

// pi = (q+1+(n-1)/(k-1)-n, then n-q-1 twos, then q ones); the sequence of a
// supertree with q pendent vertices and all other non-maximum degrees 2.
DegreeSequence pendant_degree_sequence(int n, int q, int k);

// Greedy layered realization: the root takes degrees[0] edges; every later
// vertex is created once as a child and opens degrees[v]-1 further edges,
// each filled with the next k-1 fresh labels. The result is the unique
// (up to isomorphism) supertree with this degree sequence that admits a
// BFS-ordering, returned with the identity ordering as witness.
BFSSupertree bfs_supertree(const DegreeSequence& pi);

// Literal clause predicates for a BFS-ordering witness:
//   (a) position order never decreases height
//   (b) position order never increases degree
//   (c) parents appear in the same relative order as their children
//       (non-strict: equal parents are fine)
//   (d) within each edge, all vertices after the first are consecutive in
//       the global order
// heights_consistent confirms the witness heights are the true root
// distances; is_bfs_ordering is the conjunction of all five.
bool bfs_heights_consistent(const Supertree& t, const BFSOrdering& o);
bool bfs_clause_a(const Supertree& t, const BFSOrdering& o);
bool bfs_clause_b(const Supertree& t, const BFSOrdering& o);
bool bfs_clause_c(const Supertree& t, const BFSOrdering& o);
bool bfs_clause_d(const Supertree& t, const BFSOrdering& o);
bool is_bfs_ordering(const Supertree& t, const BFSOrdering& o);

} // namespace supertrees

#endif // SUPERTREES_FAMILIES_HPP
