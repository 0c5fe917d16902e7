#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "supertrees/canonical.hpp"
#include "supertrees/enumerate.hpp"
#include "supertrees/families.hpp"

using namespace supertrees;

TEST_CASE("ordinary-tree counts match the labeled-tree oracle") {
    for (int m = 1; m <= 6; ++m) {
        auto classes = enumerate_supertrees(m, 2);
        CHECK(static_cast<int>(classes.size()) == oracles::unlabeled_tree_count(m + 1));
    }
    // One more for good measure: the 23 trees on 8 vertices.
    CHECK(static_cast<int>(enumerate_supertrees(7, 2).size()) ==
          oracles::unlabeled_tree_count(8));
}

TEST_CASE("small 3-uniform classes") {
    CHECK(enumerate_supertrees(1, 3).size() == 1);
    CHECK(enumerate_supertrees(2, 3).size() == 1);

    auto three = enumerate_supertrees(3, 3);
    REQUIRE(three.size() == 2);
    // Exactly the loose path and the hyperstar.
    bool star0 = isomorphic(three[0], hyperstar(3, 3));
    CHECK(isomorphic(three[star0 ? 1 : 0], loose_path(3, 3)));
    CHECK(isomorphic(three[star0 ? 0 : 1], hyperstar(3, 3)));
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
    auto a = enumerate_supertrees(5, 3);
    auto b = enumerate_supertrees(5, 3);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
        CHECK(canonical_code(a[i]) == canonical_code(b[i]));
    for (size_t i = 1; i < a.size(); ++i)
        CHECK(canonical_code(a[i - 1]) < canonical_code(a[i]));
}

TEST_CASE("class filters") {
    auto all = enumerate_supertrees(4, 3);
    auto stars = filter_class(all, SupertreeClass::diameter(2));
    REQUIRE(stars.size() == 1);
    CHECK(isomorphic(stars[0], hyperstar(4, 3)));

    auto paths = filter_class(all, SupertreeClass::diameter(4));
    REQUIRE(paths.size() == 1);
    CHECK(isomorphic(paths[0], loose_path(4, 3)));

    for (const Supertree& t : filter_class(all, SupertreeClass::pendent_edges(3)))
        CHECK(pendent_counts(t).first == 3);
    for (const Supertree& t : filter_class(all, SupertreeClass::pendent_vertices(7)))
        CHECK(pendent_counts(t).second == 7);

    auto by_deg = filter_class(all, SupertreeClass::degree_sequence({3, 2, 1, 1, 1, 1, 1, 1, 1}));
    for (const Supertree& t : by_deg) {
        std::vector<int> ds = t.graph().degrees();
        std::sort(ds.rbegin(), ds.rend());
        CHECK(ds == std::vector<int>{3, 2, 1, 1, 1, 1, 1, 1, 1});
    }
    CHECK(!by_deg.empty());
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(enumerate_supertrees(21, 3), Error);
    try {
        enumerate_supertrees(21, 3);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("ranking is descending with separated tie groups") {
    auto ranked = rank_by_q(enumerate_supertrees(3, 3));
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].q_value > ranked[1].q_value);
    CHECK(ranked[0].tie_group == 0);
    CHECK(ranked[1].tie_group == 1);
    CHECK(ranked[0].lower - ranked[1].upper > 1e-9);
    // The hyperstar wins at m=3.
    CHECK(ranked[0].code == canonical_code(hyperstar(3, 3)));

    // A mirror pair ties: feed the same graph twice.
    std::vector<Supertree> twice = {loose_path(3, 3), loose_path(3, 3)};
    auto tied = rank_by_q(twice);
    CHECK(tied[0].tie_group == tied[1].tie_group);
}
