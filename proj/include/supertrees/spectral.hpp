#ifndef SUPERTREES_SPECTRAL_HPP
#define SUPERTREES_SPECTRAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "supertrees/hypergraph.hpp"

namespace supertrees {

enum class Tensor { Q, A };

struct SolverOptions {
    double tolerance = 1e-10;
    int max_iterations = 200000;
    // Diagonal shift applied during iteration; unset means 1 + max degree,
    // which makes the shifted map primitive.
    std::optional<double> shift;
    // When set, every iteration's Collatz-Wielandt bracket is appended here
    // (tests sample these for soundness).
    std::vector<std::pair<double, double>>* bracket_log = nullptr;
};

struct SpectralResult {
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    std::vector<double> eigenvector; // k-norm normalized, strictly positive
    double residual = 0.0;           // max_i |(T x^{k-1})_i - value * x_i^{k-1}|
    int iterations = 0;
};

// y_i = d_i x_i^{k-1} + sum over edges e containing i of prod_{j in e, j != i} x_j.
std::vector<double> apply_Q(const Hypergraph& g, const std::vector<double>& x);

// Same without the degree term.
std::vector<double> apply_A(const Hypergraph& g, const std::vector<double>& x);

// x^T (T x^{k-1}) computed edge-wise:
//   Q: sum over edges of (sum_{i in e} x_i^k + k * prod_{i in e} x_i)
//   A: only the k * product terms.
double rayleigh(const Hypergraph& g, const std::vector<double>& x, Tensor tensor = Tensor::Q);

// Shifted power iteration with Collatz-Wielandt brackets. Every iteration's
// bracket encloses the true spectral radius; stops when its width is at most
// opts.tolerance. Throws Disconnected, or ConvergenceError carrying the last
// bracket when max_iterations is hit.
SpectralResult spectral_radius(const Hypergraph& g, Tensor tensor = Tensor::Q,
                               const SolverOptions& opts = {});

// Independent lower-bound oracle: multiplicative-update maximization of the
// Rayleigh quotient over the simplex {x >= 0, sum x_i^k = 1} from several
// deterministic pseudo-random starts; returns the best value seen. Always a
// valid lower bound on q(G).
double oracle_rayleigh_max(const Hypergraph& g, int restarts = 8, int steps = 200);

// Largest eigenvalue of the dense n x n matrix D + A for 2-uniform graphs,
// via cyclic Jacobi rotations. Cross-check for the iterative solver.
double matrix_oracle_q(const Hypergraph& g);

} // namespace supertrees

#endif // SUPERTREES_SPECTRAL_HPP
