#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "supertrees/enumerate.hpp"
#include "supertrees/families.hpp"
#include "supertrees/spectral.hpp"

using namespace supertrees;

TEST_CASE("tensor application, hand-computed") {
    // Ordinary path 0-1-2: y_i = d_i x_i + sum of neighbours.
    Hypergraph p3(2, 3, {{0, 1}, {1, 2}});
    auto y = apply_Q(p3, {1.0, 2.0, 1.0});
    CHECK(y[0] == doctest::Approx(3.0));
    CHECK(y[1] == doctest::Approx(6.0));
    CHECK(y[2] == doctest::Approx(3.0));

    // Single 3-edge at the all-ones vector: degree term + product = 2.
    Hypergraph e3(3, 3, {{0, 1, 2}});
    auto z = apply_Q(e3, {1.0, 1.0, 1.0});
    for (double zi : z) CHECK(zi == doctest::Approx(2.0));
    auto a = apply_A(e3, {2.0, 3.0, 5.0});
    CHECK(a[0] == doctest::Approx(15.0));
    CHECK(a[1] == doctest::Approx(10.0));
    CHECK(a[2] == doctest::Approx(6.0));
}

TEST_CASE("exact small eigenvalues") {
    // Char. poly of Q(P3) is (1-x)x(x-3); of the star K_{1,3} it has top root 4.
    auto q = [](const Hypergraph& g) { return spectral_radius(g, Tensor::Q).value; };
    CHECK(q(Hypergraph(2, 3, {{0, 1}, {1, 2}})) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(q(Hypergraph(2, 4, {{0, 1}, {0, 2}, {0, 3}})) == doctest::Approx(4.0).epsilon(1e-9));
    for (int k = 2; k <= 6; ++k)
        CHECK(q(loose_path(1, k).graph()) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("symmetry-reduced eigenvalue equations, k=3") {
    // Hyperstar m=3: eliminating the leaf value leaves q^3-5q^2+7q-6 = 0.
    double expect_star = oracles::poly_root({-6.0, 7.0, -5.0, 1.0}, 3.0, 4.0);
    auto rs = spectral_radius(hyperstar(3, 3).graph());
    CHECK(rs.value == doctest::Approx(expect_star).epsilon(1e-9));

    // Loose path m=3: q = 2 + (q-1)^{-2} + (q-1)^{-1/2}, solved by bisection.
    double lo = 2.5, hi = 3.5;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        double f = mid - 2.0 - 1.0 / ((mid - 1.0) * (mid - 1.0)) - 1.0 / std::sqrt(mid - 1.0);
        (f < 0 ? lo : hi) = mid;
    }
    auto rp = spectral_radius(loose_path(3, 3).graph());
    CHECK(rp.value == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-9));
}

TEST_CASE("result invariants") {
    Supertree t = s1(5, 3, 3);
    SolverOptions opts;
    std::vector<std::pair<double, double>> log;
    opts.bracket_log = &log;
    auto r = spectral_radius(t.graph(), Tensor::Q, opts);

    CHECK(r.lower <= r.value);
    CHECK(r.value <= r.upper);
    CHECK(r.upper - r.lower <= opts.tolerance);
    CHECK(r.residual <= 1e-8);

    // Every logged Collatz-Wielandt bracket encloses the final value and the
    // brackets tighten monotonically under the shift.
    REQUIRE(!log.empty());
    for (auto [lo, hi] : log) {
        CHECK(lo <= r.value + 1e-12);
        CHECK(hi >= r.value - 1e-12);
    }
    for (size_t i = 1; i < log.size(); ++i) {
        CHECK(log[i].first >= log[i - 1].first - 1e-12);
        CHECK(log[i].second <= log[i - 1].second + 1e-12);
    }

    // Rayleigh quotient at the returned eigenvector reproduces the value.
    CHECK(rayleigh(t.graph(), r.eigenvector) == doctest::Approx(r.value).epsilon(1e-8));

    // Adjacency radius is dominated by the signless Laplacian radius.
    auto ra = spectral_radius(t.graph(), Tensor::A, opts);
    CHECK(ra.value < r.value);
}

TEST_CASE("matrix oracle agrees for ordinary trees") {
    for (int m = 1; m <= 5; ++m)
        for (const Supertree& t : enumerate_supertrees(m, 2)) {
            double it = spectral_radius(t.graph()).value;
            double mx = matrix_oracle_q(t.graph());
            CHECK(it == doctest::Approx(mx).epsilon(1e-8));
        }
}

TEST_CASE("rayleigh oracle is a valid lower bound") {
    for (const Supertree& t : enumerate_supertrees(4, 3)) {
        auto r = spectral_radius(t.graph());
        CHECK(oracle_rayleigh_max(t.graph()) <= r.upper + 1e-6);
    }
}

TEST_CASE("average-degree lower bound") {
    for (const Supertree& t : {loose_path(4, 3), hyperstar(5, 4), s2(6, 4, 3)}) {
        auto r = spectral_radius(t.graph());
        double bound = 2.0 * t.k() * t.m() / t.n();
        CHECK(r.value >= bound - 1e-9);
    }
}

TEST_CASE("solver edge cases") {
    SolverOptions tight;
    tight.max_iterations = 3;
    CHECK_THROWS_AS(spectral_radius(loose_path(5, 3).graph(), Tensor::Q, tight),
                    ConvergenceError);
    try {
        spectral_radius(loose_path(5, 3).graph(), Tensor::Q, tight);
    } catch (const ConvergenceError& e) {
        CHECK(e.iterations() == 3);
        CHECK(e.lower() <= e.upper());
    }

    // A custom shift changes the path, not the answer.
    SolverOptions shifted;
    shifted.shift = 7.5;
    double a = spectral_radius(loose_path(3, 3).graph()).value;
    double b = spectral_radius(loose_path(3, 3).graph(), Tensor::Q, shifted).value;
    CHECK(a == doctest::Approx(b).epsilon(1e-9));

    CHECK_THROWS_AS(spectral_radius(Hypergraph(2, 4, {{0, 1}, {2, 3}})), Error);
}
