#include "doctest.h"

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "supertrees/canonical.hpp"
#include "supertrees/enumerate.hpp"
#include "supertrees/families.hpp"

using namespace supertrees;

TEST_CASE("codes are invariant under relabeling") {
    std::mt19937 rng(42);
    for (Supertree t : {loose_path(4, 3), s1(5, 3, 3), s4(5, 3), hyperstar(3, 4)}) {
        CanonicalCode base = canonical_code(t);
        int n = t.n();
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
        for (int rep = 0; rep < 25; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            Supertree r = validate_supertree(relabel(t.graph(), perm));
            CHECK(canonical_code(r) == base);
        }
    }
}

TEST_CASE("codes separate non-isomorphic trees") {
    CHECK(canonical_code(loose_path(3, 3)) != canonical_code(hyperstar(3, 3)));
    CHECK(canonical_code(s1(6, 4, 3)) != canonical_code(s2(6, 4, 3)));
    CHECK(isomorphic(loose_path(2, 3), hyperstar(2, 3)));
}

TEST_CASE("codes agree with brute-force isomorphism") {
    // Every pair of enumerated classes must be non-isomorphic by exhaustive
    // search, and shuffled relabelings must land back on the same code.
    std::mt19937 rng(7);
    for (int m = 2; m <= 4; ++m) {
        auto classes = enumerate_supertrees(m, 3);
        for (size_t i = 0; i < classes.size(); ++i)
            for (size_t j = i + 1; j < classes.size(); ++j) {
                CHECK_FALSE(oracles::brute_isomorphic(classes[i].graph(), classes[j].graph()));
                CHECK(canonical_code(classes[i]) != canonical_code(classes[j]));
            }
        for (const Supertree& t : classes) {
            std::vector<int> perm(static_cast<size_t>(t.n()));
            for (int v = 0; v < t.n(); ++v) perm[static_cast<size_t>(v)] = v;
            std::shuffle(perm.begin(), perm.end(), rng);
            Supertree r = validate_supertree(relabel(t.graph(), perm));
            CHECK(oracles::brute_isomorphic(t.graph(), r.graph()));
            CHECK(canonical_code(r) == canonical_code(t));
        }
    }
}

TEST_CASE("marked codes find vertex orbits") {
    // Hyperstar: the center is alone; all leaves form one orbit.
    Supertree h = hyperstar(3, 3);
    auto orbits = vertex_orbits(h);
    REQUIRE(orbits.size() == 2);
    size_t total = 0;
    for (const auto& o : orbits) total += o.size();
    CHECK(static_cast<int>(total) == h.n());
    bool center_alone = false;
    for (const auto& o : orbits)
        if (o.size() == 1 && o[0] == 0) center_alone = true;
    CHECK(center_alone);

    // Loose path m=3: two joints, four end tips, the middle interior vertex.
    auto o2 = vertex_orbits(loose_path(3, 3));
    CHECK(o2.size() == 3);

    CHECK(canonical_code(h, 0) != canonical_code(h, 1));
    CHECK(canonical_code(h, 1) == canonical_code(h, 4));
}
