#ifndef SUPERTREES_ENUMERATE_HPP
#define SUPERTREES_ENUMERATE_HPP

#include <vector>

#include "supertrees/canonical.hpp"
#include "supertrees/families.hpp"
#include "supertrees/hypergraph.hpp"
#include "supertrees/spectral.hpp"

namespace supertrees {

// Class selector over enumerated supertrees.
struct SupertreeClass {
    enum class Kind { All, Diameter, PendentEdges, PendentVertices, Degrees };
    Kind kind = Kind::All;
    int value = 0;             // d, p or q for the scalar selectors
    std::vector<int> degrees;  // sorted non-increasing, for Kind::Degrees

    static SupertreeClass all() { return {}; }
    static SupertreeClass diameter(int d) { return {Kind::Diameter, d, {}}; }
    static SupertreeClass pendent_edges(int p) { return {Kind::PendentEdges, p, {}}; }
    static SupertreeClass pendent_vertices(int q) { return {Kind::PendentVertices, q, {}}; }
    static SupertreeClass degree_sequence(std::vector<int> degs);
};

// All pairwise non-isomorphic supertrees with m edges, sorted by canonical
// code. Grow-by-edge: attach a fresh pendent edge at one representative per
// vertex orbit, dedup by code (the pruning is only a speedup; dedup alone
// already guarantees correctness). Guard rail m(k-1) <= 40 unless
// allow_large.
std::vector<Supertree> enumerate_supertrees(int m, int k, bool allow_large = false);

std::vector<Supertree> filter_class(const std::vector<Supertree>& graphs,
                                    const SupertreeClass& cls);

struct RankedEntry {
    CanonicalCode code;
    double q_value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    int iterations = 0;
    // Entries whose brackets are not separated by more than 10x tolerance
    // share a group id; strict-inequality claims over members of one group
    // are undecidable at this tolerance.
    int tie_group = 0;
};

// Descending by q; deterministic (ties broken by code). Convergence
// failures propagate with the offending graph's code in the message.
std::vector<RankedEntry> rank_by_q(const std::vector<Supertree>& graphs,
                                   const SolverOptions& opts = {});

} // namespace supertrees

#endif // SUPERTREES_ENUMERATE_HPP
