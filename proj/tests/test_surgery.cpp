#include "doctest.h"

#include "supertrees/canonical.hpp"
#include "supertrees/families.hpp"
#include "supertrees/spectral.hpp"
#include "supertrees/surgery.hpp"

using namespace supertrees;

namespace {
double q_of(const Hypergraph& g) { return spectral_radius(g).value; }
} // namespace

TEST_CASE("move_edges basics") {
    // Loose path, far edge pulled onto the first joint: the hyperstar.
    Supertree p = loose_path(3, 3); // {0,1,2} {2,3,4} {4,5,6}
    Hypergraph h = move_edges(p.graph(), 2, {{2, 4}});
    Supertree t = validate_supertree(h);
    CHECK(isomorphic(t, hyperstar(3, 3)));

    // Shifting the pendent edge of s1 to the other joint is a mirror image.
    Supertree a = s1(4, 3, 3); // spine {0,1,2} {2,3,4} {4,5,6}, plus {2,7,8}
    Hypergraph mirrored = move_edges(a.graph(), 4, {{3, 2}});
    CHECK(canonical_code(validate_supertree(mirrored)) == canonical_code(a));

    // Moving the far edge from its far end instead strands vertex 6.
    Hypergraph bad = move_edges(p.graph(), 2, {{2, 6}});
    CHECK_FALSE(bad.is_connected());

    try {
        move_edges(p.graph(), 4, {{2, 5}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UNotOutsideEdge);
    }
    try {
        move_edges(p.graph(), 0, {{2, 3}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::VNotInEdge);
    }
}

TEST_CASE("move_edges grows the radius when moving toward the heavy vertex") {
    // Two pendent edges pulled onto the center: hyperstar always wins.
    Supertree p = loose_path(4, 3); // joints 2,4,6
    auto r0 = spectral_radius(p.graph());
    int u = 4;
    Hypergraph h = move_edges(p.graph(), u, {{0, 2}, {3, 6}});
    Supertree t = validate_supertree(h);
    CHECK(isomorphic(t, hyperstar(4, 3)));
    auto r1 = spectral_radius(h);
    CHECK(r1.lower - r0.upper > 1e-9);
}

TEST_CASE("edge_release straightens one branch") {
    // Releasing the middle edge of a path pulls the far edge onto u=2,
    // leaving the hyperstar.
    Supertree p = loose_path(3, 3);
    Supertree g = edge_release(p, 1, 2);
    CHECK(isomorphic(g, hyperstar(3, 3)));
    CHECK(diameter(g) < diameter(p));
    CHECK(q_of(g.graph()) > q_of(p.graph()));

    try {
        edge_release(p, 0, 0); // pendent edge
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EdgeIsPendent);
    }
    try {
        edge_release(p, 1, 0); // u outside e
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UNotInEdge);
    }
}

TEST_CASE("branch_collapse moves the spare branches onto the kept pair") {
    // Edge {0,1,2} with a pendent edge on each vertex: a branch edge.
    Hypergraph g(3, 9, {{0, 1, 2}, {0, 3, 4}, {1, 5, 6}, {2, 7, 8}});
    Supertree t(g);
    Supertree c = branch_collapse(t, 0, {0, 1});
    // Vertex 2's edge moved to vertex 0.
    Hypergraph want(3, 9, {{0, 1, 2}, {0, 3, 4}, {1, 5, 6}, {0, 7, 8}});
    CHECK(isomorphic(c, validate_supertree(want)));

    try {
        branch_collapse(loose_path(3, 3), 1, {2, 4}); // only 2 heavy vertices
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotBranchEdge);
    }
}

TEST_CASE("two_switch swaps subsets between disjoint edges") {
    Supertree p = loose_path(3, 3); // {0,1,2} {2,3,4} {4,5,6}
    // Swapping a tip of the first edge with a tip of the last is a relabeling.
    Hypergraph h = two_switch(p.graph(), 0, 2, {0}, {5});
    CHECK(h.is_connected());
    CHECK(canonical_code(validate_supertree(h)) == canonical_code(p));

    try {
        two_switch(p.graph(), 0, 1, {0}, {3}); // edges share vertex 2
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EdgesNotDisjoint);
    }
    try {
        two_switch(p.graph(), 0, 2, {0, 1}, {5});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadSubsetSizes);
    }
    try {
        two_switch(p.graph(), 0, 2, {3}, {5}); // 3 not in edge 0
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadParams);
    }
}

TEST_CASE("graft_step merges two pendent paths and lowers the radius") {
    // Base edge at u=0 plus pendent paths of lengths 2 and 1.
    Hypergraph g(3, 9, {{0, 1, 2}, {0, 3, 4}, {4, 5, 6}, {0, 7, 8}});
    Supertree t(g);
    Hypergraph h = graft_step(g, 0, 2, 1);
    Supertree ht = validate_supertree(h);
    // The 1-path lands on the tail of the 2-path: base + 3-path.
    Hypergraph want(3, 9, {{0, 1, 2}, {0, 3, 4}, {4, 5, 6}, {6, 7, 8}});
    CHECK(isomorphic(ht, validate_supertree(want)));

    auto r0 = spectral_radius(g);
    auto r1 = spectral_radius(h);
    CHECK(r0.lower - r1.upper > 1e-9);

    try {
        graft_step(g, 1, 1, 1); // leaf vertex: no two paths to merge
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAGraftConfiguration);
    }
}
