#ifndef SUPERTREES_CANONICAL_HPP
#define SUPERTREES_CANONICAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "supertrees/hypergraph.hpp"

namespace supertrees {

// Complete isomorphism invariant. Two supertrees get equal codes exactly
// when they are isomorphic (relabeling vertices never changes the code).
struct CanonicalCode {
    std::string value;
    auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const Supertree& t);

// Variant distinguishing a marked vertex: codes are equal exactly when some
// isomorphism carries one marked vertex onto the other. Used to detect
// vertex orbits.
CanonicalCode canonical_code(const Supertree& t, int marked_vertex);

bool isomorphic(const Supertree& a, const Supertree& b);

// Partition of 0..n-1 into automorphism orbits, each orbit sorted, the list
// sorted by first element. Growing a fresh edge at one representative per
// orbit covers all attachments up to isomorphism.
std::vector<std::vector<int>> vertex_orbits(const Supertree& t);

} // namespace supertrees

#endif // SUPERTREES_CANONICAL_HPP
