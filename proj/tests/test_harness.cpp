#include "doctest.h"

#include <algorithm>

#include "supertrees/harness.hpp"

using namespace supertrees;

TEST_CASE("range grammar") {
    CHECK(resolve_range("4", no_diameter_context) == std::vector<int>{4});
    CHECK(resolve_range("3..5", no_diameter_context) == std::vector<int>{3, 4, 5});
    CHECK(resolve_range("d..d+2", 4) == std::vector<int>{4, 5, 6});
    CHECK(resolve_range("d+1..d+3", 3) == std::vector<int>{4, 5, 6});
    CHECK(resolve_range("d-1", 5) == std::vector<int>{4});
    CHECK(resolve_range("5..3", no_diameter_context).empty());

    CHECK_THROWS_AS(resolve_range("d+1", no_diameter_context), Error);
    CHECK_THROWS_AS(resolve_range("x..y", no_diameter_context), Error);
    CHECK_THROWS_AS(resolve_range("", no_diameter_context), Error);
}

TEST_CASE("grid parsing") {
    Grid g = Grid::parse("k=3,d=3..5,m=d+1..d+3,instances=200");
    CHECK(g.has("k"));
    CHECK(g.values("k", "9", no_diameter_context) == std::vector<int>{3});
    CHECK(g.values("d", "9", no_diameter_context) == std::vector<int>{3, 4, 5});
    CHECK(g.values("m", "9", 4) == std::vector<int>{5, 6, 7});
    CHECK(g.scalar("instances", 50) == 200);
    CHECK(g.scalar("missing", 50) == 50);
    CHECK_FALSE(g.has("missing"));
    CHECK(Grid::parse("").dims.empty());
    CHECK_THROWS_AS(Grid::parse("novalue"), Error);
}

TEST_CASE("claim registry and dispatch") {
    const auto& claims = known_claims();
    CHECK(claims.size() == 14);
    CHECK(std::find(claims.begin(), claims.end(), "thm3.3") != claims.end());
    try {
        verify("thm9.9", Grid{});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownClaim);
    }
}

TEST_CASE("a small exhaustive claim verifies") {
    Report r = verify("lem2.7", Grid::parse("k=3,m=2..4"));
    CHECK(r.verdict == Verdict::Pass);
    CHECK(!r.rows.empty());
    CHECK(r.claim_id == "lem2.7");
    CHECK(r.runtime_seconds >= 0.0);
    // Every row ends in a PASS status.
    for (const auto& row : r.rows) CHECK(row.back() == "PASS");
}

TEST_CASE("randomized claims honour instance counts and seeds") {
    Report a = verify("lem2.4", Grid::parse("k=3,m=3..4,instances=10"), {}, 5);
    CHECK(a.verdict == Verdict::Pass);
    CHECK(a.rows.size() == 10);
    Report b = verify("lem2.4", Grid::parse("k=3,m=3..4,instances=10"), {}, 5);
    CHECK(a.rows == b.rows); // same seed, same instances
    Report c = verify("lem2.4", Grid::parse("k=3,m=3..4,instances=10"), {}, 6);
    CHECK(a.rows != c.rows);
}

TEST_CASE("empty grids go inconclusive") {
    Report r = verify("thm3.3", Grid::parse("k=3,d=9..9,m=4..4"));
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.rows.empty());
    CHECK(r.notes.find("no cells") != std::string::npos);
}

TEST_CASE("conjecture scan emits a row per cell with gap columns") {
    Report r = conjecture_scan("4..4", "5..6", "3");
    CHECK(r.scan_wording);
    CHECK(r.rows.size() == 2);
    auto gap1 = std::find(r.columns.begin(), r.columns.end(), "gap_first");
    auto gap3 = std::find(r.columns.begin(), r.columns.end(), "gap_third");
    CHECK(gap1 != r.columns.end());
    CHECK(gap3 != r.columns.end());
    CHECK(r.verdict == Verdict::Pass);
}
