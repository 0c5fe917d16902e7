#ifndef SUPERTREES_SURGERY_HPP
#define SUPERTREES_SURGERY_HPP

#include <utility>
#include <vector>

#include "supertrees/hypergraph.hpp"

namespace supertrees {

// Each move (edge index j, vertex v in edge j) replaces edge j by
// (edge \ {v}) + {u}. Requires u outside every moved edge, distinct edge
// indices, and a duplicate-free result.
Hypergraph move_edges(const Hypergraph& g, int u,
                      const std::vector<std::pair<int, int>>& moves);

// Moves every edge adjacent to edge e that avoids u from its shared vertex
// with e over to u. e must be non-pendent; u must lie in e. Supertrees stay
// supertrees under this operation.
Supertree edge_release(const Supertree& t, int e, int u);

// For a branch edge e (at least 3 non-pendent vertices), moves all edges
// except e away from every non-pendent vertex other than keep.first and
// keep.second, onto keep.first.
Supertree branch_collapse(const Supertree& t, int e, std::pair<int, int> keep);

// Replaces disjoint edges e, f by (e \ u1) + v1 and (f \ v1) + u1, where
// u1 is a proper nonempty subset of e and v1 of f, of equal size. The result
// can be disconnected; callers filter.
Hypergraph two_switch(const Hypergraph& g, int e, int f, const std::vector<int>& u1,
                      const std::vector<int>& v1);

// Recognizes two pendent paths of lengths exactly p and q (both >= 1)
// hanging at u, plus at least one further edge at u (the base), and moves
// the last edge of the q-path from its second-to-last spine vertex to the
// end of the p-path.
Hypergraph graft_step(const Hypergraph& g, int u, int p, int q);

} // namespace supertrees

#endif // SUPERTREES_SURGERY_HPP
