#include "supertrees/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace supertrees {

namespace {

void check_length(const Hypergraph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.n())
        throw Error(ErrorCode::DimensionMismatch, "vector length " + std::to_string(x.size()) +
                                                      " but n=" + std::to_string(g.n()));
}

// Adds, for every edge and every vertex i in it, the product of the other
// k-1 entries. Prefix/suffix products avoid dividing by possibly-zero x_j.
void add_edge_products(const Hypergraph& g, const std::vector<double>& x,
                       std::vector<double>& y) {
    int k = g.k();
    std::vector<double> prefix(static_cast<size_t>(k) + 1);
    std::vector<double> suffix(static_cast<size_t>(k) + 1);
    for (const auto& e : g.edges()) {
        prefix[0] = 1.0;
        for (int t = 0; t < k; ++t)
            prefix[static_cast<size_t>(t) + 1] =
                prefix[static_cast<size_t>(t)] * x[static_cast<size_t>(e[static_cast<size_t>(t)])];
        suffix[static_cast<size_t>(k)] = 1.0;
        for (int t = k - 1; t >= 0; --t)
            suffix[static_cast<size_t>(t)] =
                suffix[static_cast<size_t>(t) + 1] * x[static_cast<size_t>(e[static_cast<size_t>(t)])];
        for (int t = 0; t < k; ++t)
            y[static_cast<size_t>(e[static_cast<size_t>(t)])] +=
                prefix[static_cast<size_t>(t)] * suffix[static_cast<size_t>(t) + 1];
    }
}

void normalize_k(std::vector<double>& x, int k) {
    double s = 0.0;
    for (double v : x)
        s += std::pow(v, k);
    double scale = std::pow(s, 1.0 / k);
    for (double& v : x)
        v /= scale;
}

std::vector<double> apply_tensor(const Hypergraph& g, const std::vector<double>& x,
                                 Tensor tensor) {
    return tensor == Tensor::Q ? apply_Q(g, x) : apply_A(g, x);
}

} // namespace

std::vector<double> apply_Q(const Hypergraph& g, const std::vector<double>& x) {
    check_length(g, x);
    std::vector<double> y(x.size());
    for (int v = 0; v < g.n(); ++v)
        y[static_cast<size_t>(v)] =
            g.degree(v) * std::pow(x[static_cast<size_t>(v)], g.k() - 1);
    add_edge_products(g, x, y);
    return y;
}

std::vector<double> apply_A(const Hypergraph& g, const std::vector<double>& x) {
    check_length(g, x);
    std::vector<double> y(x.size(), 0.0);
    add_edge_products(g, x, y);
    return y;
}

double rayleigh(const Hypergraph& g, const std::vector<double>& x, Tensor tensor) {
    check_length(g, x);
    int k = g.k();
    double total = 0.0;
    for (const auto& e : g.edges()) {
        double prod = 1.0;
        double powers = 0.0;
        for (int v : e) {
            prod *= x[static_cast<size_t>(v)];
            powers += std::pow(x[static_cast<size_t>(v)], k);
        }
        total += k * prod;
        if (tensor == Tensor::Q)
            total += powers;
    }
    return total;
}

SpectralResult spectral_radius(const Hypergraph& g, Tensor tensor, const SolverOptions& opts) {
    if (!g.is_connected())
        throw Error(ErrorCode::Disconnected, "spectral radius needs a connected graph");
    if (opts.tolerance <= 0.0)
        throw Error(ErrorCode::BadParams, "tolerance must be positive");
    if (opts.max_iterations < 1)
        throw Error(ErrorCode::BadParams, "max_iterations must be at least 1");

    int n = g.n();
    int k = g.k();
    double shift = opts.shift.value_or(1.0 + g.max_degree());

    std::vector<double> x(static_cast<size_t>(n), 1.0);
    normalize_k(x, k);

    std::vector<double> xpow(static_cast<size_t>(n));
    double lower = 0.0, upper = std::numeric_limits<double>::infinity();
    for (int it = 1; it <= opts.max_iterations; ++it) {
        std::vector<double> t = apply_tensor(g, x, tensor);
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            xpow[static_cast<size_t>(i)] = std::pow(x[static_cast<size_t>(i)], k - 1);
            double ratio = t[static_cast<size_t>(i)] / xpow[static_cast<size_t>(i)];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        lower = lo;
        upper = hi;
        if (opts.bracket_log)
            opts.bracket_log->emplace_back(lower, upper);
        if (upper - lower <= opts.tolerance) {
            SpectralResult r;
            r.value = 0.5 * (lower + upper);
            r.lower = lower;
            r.upper = upper;
            r.eigenvector = x;
            r.iterations = it;
            double res = 0.0;
            for (int i = 0; i < n; ++i)
                res = std::max(res, std::abs(t[static_cast<size_t>(i)] -
                                             r.value * xpow[static_cast<size_t>(i)]));
            r.residual = res;
            return r;
        }
        for (int i = 0; i < n; ++i) {
            double y = t[static_cast<size_t>(i)] + shift * xpow[static_cast<size_t>(i)];
            x[static_cast<size_t>(i)] = std::pow(y, 1.0 / (k - 1));
        }
        normalize_k(x, k);
    }
    throw ConvergenceError("no convergence after " + std::to_string(opts.max_iterations) +
                               " iterations; bracket [" + std::to_string(lower) + ", " +
                               std::to_string(upper) + "]",
                           lower, upper, opts.max_iterations);
}

double oracle_rayleigh_max(const Hypergraph& g, int restarts, int steps) {
    if (!g.is_connected())
        throw Error(ErrorCode::Disconnected, "oracle needs a connected graph");
    if (g.m() == 0) return 0.0;
    int n = g.n();
    int k = g.k();
    double best = 0.0;
    for (int r = 0; r < std::max(restarts, 1); ++r) {
        std::vector<double> x(static_cast<size_t>(n), 1.0);
        if (r > 0) {
            std::mt19937 rng(1000003u + static_cast<unsigned>(r));
            std::uniform_real_distribution<double> dist(0.1, 1.0);
            for (double& v : x)
                v = dist(rng);
        }
        normalize_k(x, k);
        for (int s = 0; s < steps; ++s) {
            std::vector<double> t = apply_Q(g, x);
            double val = 0.0;
            for (int i = 0; i < n; ++i)
                val += x[static_cast<size_t>(i)] * t[static_cast<size_t>(i)];
            best = std::max(best, val);
            for (int i = 0; i < n; ++i)
                x[static_cast<size_t>(i)] =
                    std::pow(t[static_cast<size_t>(i)], 1.0 / (k - 1));
            normalize_k(x, k);
        }
        best = std::max(best, rayleigh(g, x, Tensor::Q));
    }
    return best;
}

double matrix_oracle_q(const Hypergraph& g) {
    if (g.k() != 2)
        throw Error(ErrorCode::NotTwoUniform,
                    "matrix oracle only applies to 2-uniform graphs, got k=" +
                        std::to_string(g.k()));
    int n = g.n();
    std::vector<std::vector<double>> a(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int v = 0; v < n; ++v)
        a[static_cast<size_t>(v)][static_cast<size_t>(v)] = g.degree(v);
    for (const auto& e : g.edges()) {
        a[static_cast<size_t>(e[0])][static_cast<size_t>(e[1])] += 1.0;
        a[static_cast<size_t>(e[1])][static_cast<size_t>(e[0])] += 1.0;
    }

    // Cyclic Jacobi sweeps; n stays small so this is plenty.
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                off += a[static_cast<size_t>(p)][static_cast<size_t>(q)] *
                       a[static_cast<size_t>(p)][static_cast<size_t>(q)];
        if (off < 1e-24)
            break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a[static_cast<size_t>(p)][static_cast<size_t>(q)];
                if (std::abs(apq) < 1e-300)
                    continue;
                double app = a[static_cast<size_t>(p)][static_cast<size_t>(p)];
                double aqq = a[static_cast<size_t>(q)][static_cast<size_t>(q)];
                double theta = 0.5 * std::atan2(2.0 * apq, aqq - app);
                double c = std::cos(theta), s = std::sin(theta);
                for (int i = 0; i < n; ++i) {
                    double aip = a[static_cast<size_t>(i)][static_cast<size_t>(p)];
                    double aiq = a[static_cast<size_t>(i)][static_cast<size_t>(q)];
                    a[static_cast<size_t>(i)][static_cast<size_t>(p)] = c * aip - s * aiq;
                    a[static_cast<size_t>(i)][static_cast<size_t>(q)] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = a[static_cast<size_t>(p)][static_cast<size_t>(i)];
                    double aqi = a[static_cast<size_t>(q)][static_cast<size_t>(i)];
                    a[static_cast<size_t>(p)][static_cast<size_t>(i)] = c * api - s * aqi;
                    a[static_cast<size_t>(q)][static_cast<size_t>(i)] = s * api + c * aqi;
                }
            }
    }
    double best = a[0][0];
    for (int i = 1; i < n; ++i)
        best = std::max(best, a[static_cast<size_t>(i)][static_cast<size_t>(i)]);
    return best;
}

} // namespace supertrees
