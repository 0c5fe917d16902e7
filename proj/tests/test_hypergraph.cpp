#include "doctest.h"

#include <numeric>

#include "supertrees/families.hpp"
#include "supertrees/hypergraph.hpp"

using namespace supertrees;

TEST_CASE("hypergraph constructor validates input") {
    CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1}}), Error);
    try {
        Hypergraph(3, 4, {{0, 1}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUniformEdge);
    }
    try {
        Hypergraph(3, 3, {{0, 1, 3}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::VertexOutOfRange);
    }
    try {
        Hypergraph(3, 5, {{0, 1, 2}, {2, 1, 0}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateEdge);
    }
}

TEST_CASE("edges are stored sorted and incidence is consistent") {
    Hypergraph g(3, 5, {{2, 0, 1}, {4, 2, 3}});
    CHECK(g.edge(0) == Edge{0, 1, 2});
    CHECK(g.edge(1) == Edge{2, 3, 4});
    CHECK(g.degree(2) == 2);
    CHECK(g.incident_edges(2) == std::vector<int>{0, 1});
    CHECK(g.max_degree() == 2);
    auto ds = g.degrees();
    CHECK(std::accumulate(ds.begin(), ds.end(), 0) == g.m() * g.k());
}

TEST_CASE("supertree validation") {
    // Triangle plus an edge: connected component check fires first.
    try {
        Supertree(Hypergraph(2, 5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Disconnected);
    }
    // Triangle alone: connected but n != m(k-1)+1.
    try {
        Supertree(Hypergraph(2, 3, {{0, 1}, {1, 2}, {0, 2}}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HasCycle);
    }
    CHECK_NOTHROW(validate_supertree(Hypergraph(3, 5, {{0, 1, 2}, {2, 3, 4}})));
}

TEST_CASE("distances and diameter") {
    Supertree p = loose_path(4, 3);
    CHECK(diameter(p) == 4);
    // Spine vertices sit i edges from vertex 0; i(k-1) is the i-th joint.
    auto d = distances_from(p.graph(), 0);
    CHECK(d[0] == 0);
    CHECK(d[2] == 1);
    CHECK(d[4] == 2);
    CHECK(d[6] == 3);
    CHECK(d[8] == 4);

    CHECK(diameter(hyperstar(3, 3)) == 2);
    CHECK(diameter(hyperstar(1, 4)) == 1);
    CHECK(diameter(validate_supertree(Hypergraph(3, 1, {}))) == 0);
}

TEST_CASE("pendent counts on reference shapes") {
    // Loose path m=3, k=3: both end edges pendent, 5 degree-1 vertices.
    auto [p1, q1] = pendent_counts(loose_path(3, 3));
    CHECK(p1 == 2);
    CHECK(q1 == 5);

    // Hyperstar: every edge pendent, all leaves but the center.
    auto [p2, q2] = pendent_counts(hyperstar(4, 3));
    CHECK(p2 == 4);
    CHECK(q2 == 8);

    auto [p3, q3] = pendent_counts(s1(5, 3, 3));
    CHECK(p3 == 4);
    CHECK(q3 == 9);

    // Single edge: no anchor of degree >= 2, so zero pendent edges.
    auto [p4, q4] = pendent_counts(loose_path(1, 3));
    CHECK(p4 == 0);
    CHECK(q4 == 3);
}

TEST_CASE("pendent edge predicate") {
    Supertree p = loose_path(3, 3);
    CHECK(is_pendent_edge(p.graph(), 0));
    CHECK_FALSE(is_pendent_edge(p.graph(), 1));
    CHECK(is_pendent_edge(p.graph(), 2));
}

TEST_CASE("power hypertree predicate") {
    CHECK(is_power_hypertree(loose_path(4, 3)));
    CHECK(is_power_hypertree(hyperstar(3, 4)));
    CHECK(is_power_hypertree(s1(5, 3, 3)));
    // s3 hangs the extra edges at an interior vertex of the middle edge,
    // which leaves that edge with only k-3 degree-1 vertices.
    CHECK_FALSE(is_power_hypertree(s3(5, 3, 3)));
}

TEST_CASE("relabel permutes consistently") {
    Supertree t = s1(4, 3, 3);
    int n = t.n();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = (i * 5 + 3) % n;
    Hypergraph h = relabel(t.graph(), perm);
    CHECK(h.m() == t.m());
    for (int v = 0; v < n; ++v)
        CHECK(h.degree(perm[static_cast<size_t>(v)]) == t.degree(v));
    CHECK_NOTHROW(validate_supertree(h));
}
