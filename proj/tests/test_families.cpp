#include "doctest.h"

#include <algorithm>

#include "supertrees/canonical.hpp"
#include "supertrees/families.hpp"
#include "supertrees/hypergraph.hpp"

using namespace supertrees;

TEST_CASE("loose path and hyperstar shapes") {
    for (int k = 2; k <= 4; ++k) {
        Supertree p = loose_path(4, k);
        CHECK(p.n() == 4 * (k - 1) + 1);
        CHECK(diameter(p) == 4);
        CHECK(p.degree((k - 1)) == 2); // first joint

        Supertree h = hyperstar(4, k);
        CHECK(h.degree(0) == 4);
        CHECK(h.graph().max_degree() == 4);
        CHECK(diameter(h) == 2);
    }
    CHECK_THROWS_AS(loose_path(0, 3), Error);
    CHECK_THROWS_AS(hyperstar(2, 1), Error);
}

TEST_CASE("power of an ordinary tree") {
    // 3rd power of the path on 3 vertices is the loose path with m=2.
    Supertree p = power_k({{0, 1}, {1, 2}}, 3);
    CHECK(isomorphic(p, loose_path(2, 3)));
    CHECK(is_power_hypertree(p));
    Supertree st = power_k({{0, 1}, {0, 2}, {0, 3}}, 4);
    CHECK(isomorphic(st, hyperstar(3, 4)));
}

TEST_CASE("extremal families sit in the advertised classes") {
    for (int d = 3; d <= 5; ++d)
        for (int m = d; m <= d + 2; ++m) {
            Supertree a = s1(m, d, 3);
            CHECK(diameter(a) == d);
            CHECK(a.m() == m);
            if (d >= 4) {
                Supertree b = s2(m, d, 3);
                CHECK(diameter(b) == d);
            }
            if (d % 2 == 1) {
                Supertree c = s3(m, d, 3);
                CHECK(diameter(c) == d);
            }
        }
    for (int m = 5; m <= 7; ++m) {
        Supertree f = s4(m, 3);
        CHECK(diameter(f) == 3);
        CHECK(f.m() == m);
    }
    // Attachment positions of s1 and s2 differ by one joint.
    CHECK(canonical_code(s1(6, 4, 3)) != canonical_code(s2(6, 4, 3)));
    CHECK_THROWS_AS(s1(4, 2, 3), Error);
    CHECK_THROWS_AS(s2(5, 3, 3), Error);
    CHECK_THROWS_AS(s3(6, 4, 3), Error); // d must be odd
    CHECK_THROWS_AS(s4(4, 3), Error);
}

TEST_CASE("t1 interpolates between star and path") {
    // All edges in the star: no pendent paths left.
    CHECK(isomorphic(t1(9, 4, 3), hyperstar(4, 3)));
    // Two star edges: the paths make it a loose path again.
    CHECK(isomorphic(t1(9, 2, 3), loose_path(4, 3)));

    Supertree t = t1(13, 3, 3);
    CHECK(t.n() == 13);
    CHECK(t.degree(0) == 3);
    auto [p, q] = pendent_counts(t);
    CHECK(p == 3);
    CHECK_THROWS_AS(t1(9, 5, 3), Error); // p > m
}

TEST_CASE("pendant degree sequences realize and validate") {
    DegreeSequence pi = pendant_degree_sequence(9, 6, 3);
    CHECK(pi.n() == 9);
    CHECK(pi.m() == 4);
    int sum = 0;
    for (int d : pi.degrees) sum += d;
    CHECK(sum == pi.m() * pi.k);
    CHECK(std::is_sorted(pi.degrees.rbegin(), pi.degrees.rend()));

    CHECK_THROWS_AS(DegreeSequence({3, 1, 1, 1}, 3), Error); // wrong length/sum
    CHECK_THROWS_AS(pendant_degree_sequence(9, 1, 3), Error);
}

TEST_CASE("bfs realization matches its sequence and witness") {
    for (int q = 7; q <= 10; ++q) {
        DegreeSequence pi = pendant_degree_sequence(11, q, 3);
        BFSSupertree b = bfs_supertree(pi);
        CHECK(b.tree.n() == 11);

        std::vector<int> got;
        for (int v = 0; v < b.tree.n(); ++v) got.push_back(b.tree.degree(v));
        std::sort(got.rbegin(), got.rend());
        CHECK(got == pi.degrees);

        CHECK(bfs_heights_consistent(b.tree, b.ordering));
        CHECK(bfs_clause_a(b.tree, b.ordering));
        CHECK(bfs_clause_b(b.tree, b.ordering));
        CHECK(bfs_clause_c(b.tree, b.ordering));
        CHECK(bfs_clause_d(b.tree, b.ordering));
        CHECK(is_bfs_ordering(b.tree, b.ordering));
    }
}

TEST_CASE("bfs clauses reject a scrambled witness") {
    DegreeSequence pi({3, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1}, 3);
    BFSSupertree b = bfs_supertree(pi);
    BFSOrdering bad = b.ordering;
    // Swap the root with a deepest vertex: the height clause must fire.
    std::swap(bad.order.front(), bad.order.back());
    bool still_bfs = bfs_clause_a(b.tree, bad) && bfs_heights_consistent(b.tree, bad);
    CHECK_FALSE(still_bfs);
    CHECK_FALSE(is_bfs_ordering(b.tree, bad));
}
