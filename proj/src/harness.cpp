#include "supertrees/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "supertrees/canonical.hpp"
#include "supertrees/enumerate.hpp"
#include "supertrees/error.hpp"
#include "supertrees/families.hpp"
#include "supertrees/surgery.hpp"

namespace supertrees {

namespace {

constexpr int kNoDiameter = no_diameter_context;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

int parse_int_strict(const std::string& s) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size())
            throw Error(ErrorCode::BadParams, "bad integer '" + s + "'");
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorCode::BadParams, "bad integer '" + s + "'");
    }
}

int resolve_endpoint(const std::string& raw, int d_context) {
    std::string t = trim(raw);
    if (t.empty())
        throw Error(ErrorCode::BadParams, "empty range endpoint");
    if (t[0] == 'd') {
        if (d_context == kNoDiameter)
            throw Error(ErrorCode::BadParams,
                        "endpoint '" + t + "' needs a diameter in scope");
        if (t.size() == 1) return d_context;
        char op = t[1];
        int off = parse_int_strict(trim(t.substr(2)));
        if (op == '+') return d_context + off;
        if (op == '-') return d_context - off;
        throw Error(ErrorCode::BadParams, "bad range endpoint '" + t + "'");
    }
    return parse_int_strict(t);
}

std::string fmt(double v) {
    std::ostringstream o;
    o << std::setprecision(12) << v;
    return o.str();
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

const char* status_name(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

void add_note(Report& r, const std::string& note) {
    if (!r.notes.empty()) r.notes += "; ";
    r.notes += note;
}

SpectralResult solve(const Hypergraph& g, const SolverOptions& base) {
    SolverOptions o = base;
    o.bracket_log = nullptr;
    return spectral_radius(g, Tensor::Q, o);
}

int pick(std::mt19937_64& rng, int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

Supertree random_supertree(int m, int k, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    int next = 0;
    for (int j = 0; j < m; ++j) {
        Edge e;
        if (j == 0) {
            for (int i = 0; i < k; ++i) e.push_back(next++);
        } else {
            e.push_back(pick(rng, next));
            for (int i = 1; i < k; ++i) e.push_back(next++);
        }
        edges.push_back(std::move(e));
    }
    return Supertree(Hypergraph(k, next, std::move(edges)));
}

std::string code_of(const Supertree& t) { return canonical_code(t).value; }

std::string effective_dims(const Grid& grid,
                           std::initializer_list<std::pair<const char*, const char*>> defs) {
    std::string out;
    for (const auto& [name, def] : defs) {
        std::string v = grid.has(name) ? grid.dims.at(name) : std::string(def);
        if (!out.empty()) out += ',';
        out += std::string(name) + "=" + v;
    }
    return out;
}

int argmax_entry(const std::vector<double>& x) {
    return static_cast<int>(std::max_element(x.begin(), x.end()) - x.begin());
}

int find_code(const std::vector<RankedEntry>& ranked, const std::string& code) {
    for (std::size_t i = 0; i < ranked.size(); ++i)
        if (ranked[i].code.value == code) return static_cast<int>(i);
    return -1;
}

int group_size(const std::vector<RankedEntry>& ranked, int g) {
    int c = 0;
    for (const auto& e : ranked)
        if (e.tie_group == g) ++c;
    return c;
}

struct TopCheck {
    Verdict verdict = Verdict::Fail;
    double separation = 0.0; // certified gap below the leading tie group
};

// PASS iff expected is alone in the leading tie group; FAIL if some graph is
// certified strictly above it; otherwise the top is tied and undecidable.
TopCheck unique_top(const std::vector<RankedEntry>& ranked, const std::string& expected) {
    TopCheck out;
    int ei = find_code(ranked, expected);
    if (ei < 0 || ranked[static_cast<size_t>(ei)].tie_group != 0) return out;
    int g0 = group_size(ranked, 0);
    out.separation = std::numeric_limits<double>::infinity();
    if (static_cast<int>(ranked.size()) > g0)
        out.separation = ranked[static_cast<size_t>(g0 - 1)].lower -
                         ranked[static_cast<size_t>(g0)].upper;
    out.verdict = g0 == 1 ? Verdict::Pass : Verdict::Inconclusive;
    return out;
}

// Enumerations reused across grid cells that share (m, k).
class EnumCache {
public:
    const std::vector<Supertree>& get(int m, int k) {
        auto key = std::make_pair(m, k);
        auto it = store_.find(key);
        if (it == store_.end())
            it = store_.emplace(key, enumerate_supertrees(m, k)).first;
        return it->second;
    }

private:
    std::map<std::pair<int, int>, std::vector<Supertree>> store_;
};

std::map<std::vector<int>, std::vector<Supertree>>
by_degree_multiset(const std::vector<Supertree>& all) {
    std::map<std::vector<int>, std::vector<Supertree>> groups;
    for (const auto& t : all) {
        auto degs = t.graph().degrees();
        std::sort(degs.begin(), degs.end(), std::greater<>());
        groups[degs].push_back(t);
    }
    return groups;
}

// ---- randomized lemma checks ------------------------------------------------

void run_lem2_4(const Grid& grid, const SolverOptions& opts, std::uint64_t seed, Report& r) {
    auto ks = grid.values("k", "3..4", kNoDiameter);
    auto ms = grid.values("m", "3..6", kNoDiameter);
    int instances = grid.scalar("instances", 200);
    r.grid = effective_dims(grid, {{"k", "3..4"}, {"m", "3..6"}, {"instances", "200"}});
    r.columns = {"k", "m", "graph", "u", "moved", "hyp_margin", "q_g", "q_h", "margin", "status"};
    if (ks.empty() || ms.empty()) return;

    std::mt19937_64 rng(seed);
    int made = 0;
    long attempts = 0;
    const long cap = 400L * instances;
    while (made < instances && attempts < cap) {
        ++attempts;
        int k = ks[static_cast<size_t>(pick(rng, static_cast<int>(ks.size())))];
        int m = ms[static_cast<size_t>(pick(rng, static_cast<int>(ms.size())))];
        if (k < 2 || m < 2) continue;
        Supertree t = random_supertree(m, k, rng);
        SpectralResult rt;
        try {
            rt = solve(t.graph(), opts);
        } catch (const ConvergenceError&) {
            continue;
        }
        const auto& x = rt.eigenvector;
        int u = argmax_entry(x);
        std::vector<int> cands;
        for (int j = 0; j < m; ++j)
            if (!std::binary_search(t.edges()[static_cast<size_t>(j)].begin(),
                                    t.edges()[static_cast<size_t>(j)].end(), u))
                cands.push_back(j);
        if (cands.empty()) continue;
        std::shuffle(cands.begin(), cands.end(), rng);
        int moved = 1 + pick(rng, std::min<int>(3, static_cast<int>(cands.size())));
        // v_i must be the vertex of e_i on the path toward u, or the move
        // orphans v_i's subtree and G' is disconnected (excluded by the claim).
        auto dist = distances_from(t.graph(), u);
        std::vector<std::pair<int, int>> moves;
        double hyp = std::numeric_limits<double>::infinity();
        for (int i = 0; i < moved; ++i) {
            int j = cands[static_cast<size_t>(i)];
            int v = t.edges()[static_cast<size_t>(j)][0];
            for (int w : t.edges()[static_cast<size_t>(j)])
                if (dist[static_cast<size_t>(w)] < dist[static_cast<size_t>(v)]) v = w;
            moves.emplace_back(j, v);
            hyp = std::min(hyp, x[static_cast<size_t>(u)] - x[static_cast<size_t>(v)]);
        }
        if (hyp <= 10.0 * rt.residual) continue; // hypothesis not certified
        Hypergraph h = t.graph();
        try {
            h = move_edges(t.graph(), u, moves);
        } catch (const Error&) {
            continue;
        }
        if (!h.is_connected()) continue;

        ++made;
        Verdict v = Verdict::Inconclusive;
        double margin = 0.0, qh = 0.0;
        try {
            SpectralResult rh = solve(h, opts);
            qh = rh.value;
            margin = rh.lower - rt.upper;
            double reversal = rt.lower - rh.upper;
            if (margin > 10.0 * opts.tolerance)
                v = Verdict::Pass;
            else if (reversal > 10.0 * opts.tolerance)
                v = Verdict::Fail;
        } catch (const ConvergenceError&) {
        }
        r.rows.push_back({std::to_string(k), std::to_string(m), code_of(t), std::to_string(u),
                          std::to_string(moved), fmt(hyp), fmt(rt.value), fmt(qh), fmt(margin),
                          status_name(v)});
        r.verdict = worst(r.verdict, v);
    }
    if (made < instances) {
        add_note(r, "generated " + std::to_string(made) + "/" + std::to_string(instances) +
                        " instances");
        r.verdict = worst(r.verdict, Verdict::Inconclusive);
    }
}

void run_lem2_8(const Grid& grid, const SolverOptions& opts, std::uint64_t seed, Report& r) {
    auto ks = grid.values("k", "3..4", kNoDiameter);
    auto ms = grid.values("m", "4..6", kNoDiameter);
    int instances = grid.scalar("instances", 200);
    r.grid = effective_dims(grid, {{"k", "3..4"}, {"m", "4..6"}, {"instances", "200"}});
    r.columns = {"k", "m", "graph", "edge", "keep", "q_g", "q_best", "margin",
                 "d_g", "d_h", "status"};
    if (ks.empty() || ms.empty()) return;

    std::mt19937_64 rng(seed);
    int made = 0;
    long attempts = 0;
    const long cap = 400L * instances;
    while (made < instances && attempts < cap) {
        ++attempts;
        int k = ks[static_cast<size_t>(pick(rng, static_cast<int>(ks.size())))];
        int m = ms[static_cast<size_t>(pick(rng, static_cast<int>(ms.size())))];
        if (k < 3 || m < 4) continue; // a branch edge needs 3 heavy vertices
        Supertree t = random_supertree(m, k, rng);
        std::vector<std::pair<int, std::vector<int>>> branches;
        for (int j = 0; j < m; ++j) {
            std::vector<int> heavy;
            for (int v : t.edges()[static_cast<size_t>(j)])
                if (t.degree(v) >= 2) heavy.push_back(v);
            if (static_cast<int>(heavy.size()) >= 3) branches.emplace_back(j, heavy);
        }
        if (branches.empty()) continue;
        auto [e, heavy] = branches[static_cast<size_t>(pick(rng, static_cast<int>(branches.size())))];
        std::shuffle(heavy.begin(), heavy.end(), rng);
        int v1 = heavy[0], v2 = heavy[1];

        ++made;
        Verdict v = Verdict::Inconclusive;
        double margin = 0.0, qg = 0.0, qbest = 0.0;
        int dg = diameter(t), dh = 0, keep = v1;
        try {
            Supertree ga = branch_collapse(t, e, {v1, v2});
            Supertree gb = branch_collapse(t, e, {v2, v1});
            SpectralResult rt = solve(t.graph(), opts);
            SpectralResult ra = solve(ga.graph(), opts);
            SpectralResult rb = solve(gb.graph(), opts);
            bool use_a = ra.value >= rb.value;
            const Supertree& best = use_a ? ga : gb;
            const SpectralResult& rbest = use_a ? ra : rb;
            keep = use_a ? v1 : v2;
            qg = rt.value;
            qbest = rbest.value;
            dh = diameter(best);
            margin = rbest.lower - rt.upper;
            double reversal = rt.lower - rbest.upper;
            if (dh > dg)
                v = Verdict::Fail;
            else if (margin > 10.0 * opts.tolerance)
                v = Verdict::Pass;
            else if (reversal > 10.0 * opts.tolerance)
                v = Verdict::Fail;
        } catch (const ConvergenceError&) {
        }
        r.rows.push_back({std::to_string(k), std::to_string(m), code_of(t), std::to_string(e),
                          std::to_string(keep), fmt(qg), fmt(qbest), fmt(margin),
                          std::to_string(dg), std::to_string(dh), status_name(v)});
        r.verdict = worst(r.verdict, v);
    }
    if (made < instances) {
        add_note(r, "generated " + std::to_string(made) + "/" + std::to_string(instances) +
                        " instances");
        r.verdict = worst(r.verdict, Verdict::Inconclusive);
    }
}

void run_lem2_9(const Grid& grid, const SolverOptions& opts, std::uint64_t seed, Report& r) {
    auto ks = grid.values("k", "3..4", kNoDiameter);
    auto ms = grid.values("m", "3..6", kNoDiameter);
    int instances = grid.scalar("instances", 200);
    r.grid = effective_dims(grid, {{"k", "3..4"}, {"m", "3..6"}, {"instances", "200"}});
    r.columns = {"k", "m", "graph", "e", "f", "r", "hyp1", "hyp2", "predicted",
                 "q_g", "q_h", "margin", "status"};
    if (ks.empty() || ms.empty()) return;

    const double cert = 1e-8; // product hypotheses certified beyond entry error
    std::mt19937_64 rng(seed);
    int made = 0;
    long attempts = 0;
    const long cap = 400L * instances;
    while (made < instances && attempts < cap) {
        ++attempts;
        int k = ks[static_cast<size_t>(pick(rng, static_cast<int>(ks.size())))];
        int m = ms[static_cast<size_t>(pick(rng, static_cast<int>(ms.size())))];
        if (k < 2 || m < 3) continue;
        Supertree t = random_supertree(m, k, rng);
        SpectralResult rt;
        try {
            rt = solve(t.graph(), opts);
        } catch (const ConvergenceError&) {
            continue;
        }
        const auto& x = rt.eigenvector;

        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                const Edge& a = t.edges()[static_cast<size_t>(i)];
                const Edge& b = t.edges()[static_cast<size_t>(j)];
                Edge common;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(common));
                if (common.empty()) pairs.emplace_back(i, j);
            }
        if (pairs.empty()) continue;
        auto [ei, fi] = pairs[static_cast<size_t>(pick(rng, static_cast<int>(pairs.size())))];
        const Edge& ea = t.edges()[static_cast<size_t>(ei)];
        const Edge& eb = t.edges()[static_cast<size_t>(fi)];

        // Gateways: the vertex of each edge on the path toward the other.  The
        // switch keeps the tree connected iff both gateways stay put or both
        // are exchanged, so enumerate subset pairs honouring that parity and
        // keep the ones whose product hypotheses certify.
        auto dw = distances_from(t.graph(), eb[0]);
        int ga = *std::min_element(ea.begin(), ea.end(), [&dw](int p, int q) {
            return dw[static_cast<size_t>(p)] < dw[static_cast<size_t>(q)];
        });
        auto da = distances_from(t.graph(), ga);
        int gb = *std::min_element(eb.begin(), eb.end(), [&da](int p, int q) {
            return da[static_cast<size_t>(p)] < da[static_cast<size_t>(q)];
        });

        auto masked = [](const Edge& e, unsigned mask, bool in) {
            std::vector<int> out;
            for (size_t i = 0; i < e.size(); ++i)
                if (((mask >> i) & 1u) == static_cast<unsigned>(in)) out.push_back(e[i]);
            return out;
        };
        auto product_of = [&x](const std::vector<int>& vs) {
            double p = 1.0;
            for (int v : vs) p *= x[static_cast<size_t>(v)];
            return p;
        };

        struct Cand {
            unsigned ma, mb;
            double h1, h2;
        };
        std::vector<Cand> cands2;
        unsigned full = (1u << k) - 1u;
        for (unsigned ma = 1; ma < full; ++ma)
            for (unsigned mb = 1; mb < full; ++mb) {
                if (std::popcount(ma) != std::popcount(mb)) continue;
                bool a_out = false, b_out = false;
                for (size_t i = 0; i < ea.size(); ++i)
                    if (ea[i] == ga) a_out = (ma >> i) & 1u;
                for (size_t i = 0; i < eb.size(); ++i)
                    if (eb[i] == gb) b_out = (mb >> i) & 1u;
                if (a_out != b_out) continue;
                double h1 = product_of(masked(ea, ma, false)) - product_of(masked(eb, mb, false));
                double h2 = product_of(masked(eb, mb, true)) - product_of(masked(ea, ma, true));
                if (h1 > cert && h2 > cert) cands2.push_back({ma, mb, h1, h2});
            }
        if (cands2.empty()) continue;
        const Cand& c = cands2[static_cast<size_t>(pick(rng, static_cast<int>(cands2.size())))];
        std::vector<int> u1 = masked(ea, c.ma, true), vv1 = masked(eb, c.mb, true);
        int a = ei, b = fi;
        int rsize = k - static_cast<int>(u1.size());
        double hyp1 = c.h1, hyp2 = c.h2;

        Hypergraph h = t.graph();
        try {
            h = two_switch(t.graph(), a, b, u1, vv1);
        } catch (const Error&) {
            continue;
        }
        if (!h.is_connected()) continue;

        ++made;
        double predicted = k * hyp1 * hyp2;
        Verdict v = Verdict::Inconclusive;
        double margin = 0.0, qh = 0.0;
        try {
            SpectralResult rh = solve(h, opts);
            qh = rh.value;
            margin = rh.lower - rt.upper;
            double reversal = rt.lower - rh.upper;
            if (margin > 10.0 * opts.tolerance)
                v = Verdict::Pass;
            else if (reversal > 10.0 * opts.tolerance)
                v = Verdict::Fail;
            else if (predicted <= 1e-6)
                v = Verdict::Pass; // near-equal case, brackets overlap: consistent
        } catch (const ConvergenceError&) {
        }
        r.rows.push_back({std::to_string(k), std::to_string(m), code_of(t), std::to_string(a),
                          std::to_string(b), std::to_string(rsize), fmt(hyp1), fmt(hyp2),
                          fmt(predicted), fmt(rt.value), fmt(qh), fmt(margin), status_name(v)});
        r.verdict = worst(r.verdict, v);
    }
    if (made < instances) {
        add_note(r, "generated " + std::to_string(made) + "/" + std::to_string(instances) +
                        " instances");
        r.verdict = worst(r.verdict, Verdict::Inconclusive);
    }
}

void run_lem2_10(const Grid& grid, const SolverOptions& opts, std::uint64_t seed, Report& r) {
    auto ks = grid.values("k", "3..4", kNoDiameter);
    auto ms = grid.values("m", "3..6", kNoDiameter);
    int instances = grid.scalar("instances", 200);
    r.grid = effective_dims(grid, {{"k", "3..4"}, {"m", "3..6"}, {"instances", "200"}});
    r.columns = {"k", "m", "base", "u", "p", "q", "q_g", "q_h", "margin", "status"};
    if (ks.empty() || ms.empty()) return;

    std::mt19937_64 rng(seed);
    int made = 0;
    long attempts = 0;
    const long cap = 400L * instances;
    while (made < instances && attempts < cap) {
        ++attempts;
        int k = ks[static_cast<size_t>(pick(rng, static_cast<int>(ks.size())))];
        int m = ms[static_cast<size_t>(pick(rng, static_cast<int>(ms.size())))];
        if (k < 2 || m < 3) continue;
        int qmax = (m - 1) / 2; // p >= q and a nonempty base
        int q = 1 + pick(rng, qmax);
        int pmax = m - q - 1;
        int p = q + pick(rng, pmax - q + 1);
        int base_m = m - p - q;

        Supertree base = random_supertree(base_m, k, rng);
        int u = pick(rng, base.n());
        std::vector<Edge> edges = base.edges();
        int next = base.n();
        auto attach_path = [&](int len) {
            int anchor = u;
            for (int i = 0; i < len; ++i) {
                Edge e{anchor};
                for (int tdx = 0; tdx < k - 1; ++tdx) e.push_back(next + tdx);
                anchor = next + k - 2;
                next += k - 1;
                edges.push_back(std::move(e));
            }
        };
        attach_path(p);
        attach_path(q);
        Hypergraph g(k, next, edges);

        Hypergraph g2 = g;
        try {
            g2 = graft_step(g, u, p, q);
        } catch (const Error&) {
            continue;
        }

        ++made;
        Verdict v = Verdict::Inconclusive;
        double margin = 0.0, qg = 0.0, qh = 0.0;
        try {
            SpectralResult rg = solve(g, opts);
            SpectralResult r2 = solve(g2, opts);
            qg = rg.value;
            qh = r2.value;
            margin = rg.lower - r2.upper; // strict decrease claimed
            double reversal = r2.lower - rg.upper;
            if (margin > 10.0 * opts.tolerance)
                v = Verdict::Pass;
            else if (reversal > 10.0 * opts.tolerance)
                v = Verdict::Fail;
        } catch (const ConvergenceError&) {
        }
        r.rows.push_back({std::to_string(k), std::to_string(m), std::to_string(base_m),
                          std::to_string(u), std::to_string(p), std::to_string(q), fmt(qg),
                          fmt(qh), fmt(margin), status_name(v)});
        r.verdict = worst(r.verdict, v);
    }
    if (made < instances) {
        add_note(r, "generated " + std::to_string(made) + "/" + std::to_string(instances) +
                        " instances");
        r.verdict = worst(r.verdict, Verdict::Inconclusive);
    }
}

// ---- exhaustive release checks ---------------------------------------------

void run_release(const Grid& grid, const SolverOptions& opts, Report& r, bool spectral) {
    auto ks = grid.values("k", "3..4", kNoDiameter);
    auto ms = grid.values("m", "2..6", kNoDiameter);
    r.grid = effective_dims(grid, {{"k", "3..4"}, {"m", "2..6"}});
    if (spectral)
        r.columns = {"k", "m", "graph", "edge", "u", "q_g", "q_h", "margin", "status"};
    else
        r.columns = {"k", "m", "graph", "edge", "u", "d_g", "d_h", "status"};

    EnumCache cache;
    for (int k : ks)
        for (int m : ms) {
            if (k < 2 || m < 2) continue;
            for (const auto& t : cache.get(m, k)) {
                std::string code = code_of(t);
                bool solved = false;
                SpectralResult rt;
                for (int e = 0; e < m; ++e) {
                    if (is_pendent_edge(t.graph(), e)) continue;
                    for (int u : t.edges()[static_cast<size_t>(e)]) {
                        Supertree h = edge_release(t, e, u);
                        if (!spectral) {
                            int dg = diameter(t), dh = diameter(h);
                            Verdict v = dh <= dg ? Verdict::Pass : Verdict::Fail;
                            r.rows.push_back({std::to_string(k), std::to_string(m), code,
                                              std::to_string(e), std::to_string(u),
                                              std::to_string(dg), std::to_string(dh),
                                              status_name(v)});
                            r.verdict = worst(r.verdict, v);
                            continue;
                        }
                        Verdict v = Verdict::Inconclusive;
                        double margin = 0.0, qh = 0.0;
                        try {
                            if (!solved) {
                                rt = solve(t.graph(), opts);
                                solved = true;
                            }
                            SpectralResult rh = solve(h.graph(), opts);
                            qh = rh.value;
                            margin = rh.lower - rt.upper;
                            double reversal = rt.lower - rh.upper;
                            if (margin > 10.0 * opts.tolerance)
                                v = Verdict::Pass;
                            else if (reversal > 10.0 * opts.tolerance)
                                v = Verdict::Fail;
                        } catch (const ConvergenceError&) {
                        }
                        r.rows.push_back({std::to_string(k), std::to_string(m), code,
                                          std::to_string(e), std::to_string(u), fmt(rt.value),
                                          fmt(qh), fmt(margin), status_name(v)});
                        r.verdict = worst(r.verdict, v);
                    }
                }
            }
        }
}

void run_lem2_6(const Grid& grid, const SolverOptions& opts, std::uint64_t, Report& r) {
    run_release(grid, opts, r, true);
}

void run_lem2_7(const Grid& grid, const SolverOptions& opts, std::uint64_t, Report& r) {
    run_release(grid, opts, r, false);
}

// ---- extremal family checks -------------------------------------------------

void run_diameter_max(const Grid& grid, const SolverOptions& opts, Report& r,
                      bool hypertrees_only) {
    auto ks = grid.values("k", "3..4", kNoDiameter);
    auto ds = grid.values("d", "3..5", kNoDiameter);
    r.grid = effective_dims(grid, {{"k", "3..4"}, {"d", "3..5"}, {"m", "d+1..d+3"}});
    r.columns = {"k", "d", "m", "class_size", "top", "expected", "separation", "status"};

    EnumCache cache;
    for (int k : ks)
        for (int d : ds) {
            auto ms = grid.values("m", "d+1..d+3", d);
            for (int m : ms) {
                if (k < 2 || d < 3 || m < d + 1) continue;
                std::vector<Supertree> cls =
                    filter_class(cache.get(m, k), SupertreeClass::diameter(d));
                if (hypertrees_only) {
                    std::vector<Supertree> sub;
                    for (const auto& t : cls)
                        if (is_power_hypertree(t)) sub.push_back(t);
                    cls = std::move(sub);
                }
                std::string expected = code_of(s1(m, d, k));
                Verdict v = Verdict::Fail;
                std::string top;
                double sep = 0.0;
                if (!cls.empty()) {
                    try {
                        auto ranked = rank_by_q(cls, opts);
                        top = ranked[0].code.value;
                        TopCheck tc = unique_top(ranked, expected);
                        v = tc.verdict;
                        sep = tc.separation;
                    } catch (const ConvergenceError&) {
                        v = Verdict::Inconclusive;
                    }
                }
                r.rows.push_back({std::to_string(k), std::to_string(d), std::to_string(m),
                                  std::to_string(cls.size()), top, expected, fmt(sep),
                                  status_name(v)});
                r.verdict = worst(r.verdict, v);
            }
        }
}

void run_thm3_1(const Grid& grid, const SolverOptions& opts, std::uint64_t, Report& r) {
    run_diameter_max(grid, opts, r, true);
}

void run_thm3_3(const Grid& grid, const SolverOptions& opts, std::uint64_t, Report& r) {
    run_diameter_max(grid, opts, r, false);
}

void run_thm3_4(const Grid& grid, const SolverOptions& opts, std::uint64_t, Report& r) {
    auto ks = grid.values("k", "3", kNoDiameter);
    auto ms = grid.values("m", "4..7", kNoDiameter);
    r.grid = effective_dims(grid, {{"k", "3"}, {"m", "4..7"}});
    r.columns = {"k", "m", "class_size", "first", "second", "expected_first",
                 "expected_second", "status"};

    EnumCache cache;
    for (int k : ks)
        for (int m : ms) {
            if (k < 3 || m < 4) continue;
            std::vector<Supertree> cls = filter_class(cache.get(m, k), SupertreeClass::diameter(3));
            std::string e1 = code_of(s1(m, 3, k));
            std::string esecond = m == 4 ? code_of(s3(4, 3, k)) : code_of(s4(m, k));
            Verdict v = Verdict::Fail;
            std::string first, second;
            try {
                auto ranked = rank_by_q(cls, opts);
                if (!ranked.empty()) first = ranked[0].code.value;
                if (ranked.size() > 1) second = ranked[1].code.value;
                if (m == 4) {
                    // the class itself is claimed to be exactly {s1, s3}
                    std::set<std::string> got, want{e1, esecond};
                    for (const auto& e : ranked) got.insert(e.code.value);
                    if (got != want) {
                        v = Verdict::Fail;
                    } else if (ranked[0].tie_group == ranked[1].tie_group) {
                        v = Verdict::Inconclusive;
                    } else {
                        v = first == e1 ? Verdict::Pass : Verdict::Fail;
                    }
                } else {
                    int i1 = find_code(ranked, e1);
                    int i4 = find_code(ranked, esecond);
                    if (i1 < 0 || i4 < 0)
                        v = Verdict::Fail;
                    else if (ranked[static_cast<size_t>(i1)].tie_group >= 1)
                        v = Verdict::Fail;
                    else if (group_size(ranked, 0) > 1)
                        v = Verdict::Inconclusive;
                    else if (ranked[static_cast<size_t>(i4)].tie_group >= 2)
                        v = Verdict::Fail;
                    else if (group_size(ranked, 1) == 1)
                        v = Verdict::Pass;
                    else
                        v = Verdict::Inconclusive;
                }
            } catch (const ConvergenceError&) {
                v = Verdict::Inconclusive;
            }
            r.rows.push_back({std::to_string(k), std::to_string(m), std::to_string(cls.size()),
                              first, second, e1, esecond, status_name(v)});
            r.verdict = worst(r.verdict, v);
        }
}

void run_thm4_2(const Grid& grid, const SolverOptions& opts, std::uint64_t, Report& r) {
    auto ks = grid.values("k", "3", kNoDiameter);
    auto ms = grid.values("m", "2..6", kNoDiameter);
    r.grid = effective_dims(grid, {{"k", "3"}, {"m", "2..6"}, {"p", "2..m"}});
    r.columns = {"k", "n", "p", "class_size", "top", "expected", "separation", "status"};

    EnumCache cache;
    for (int k : ks)
        for (int m : ms) {
            if (k < 2 || m < 2) continue;
            int n = m * (k - 1) + 1;
            std::vector<int> ps;
            if (grid.has("p"))
                ps = grid.values("p", "", kNoDiameter);
            else
                for (int p = 2; p <= m; ++p) ps.push_back(p);
            const auto& all = cache.get(m, k);
            for (int p : ps) {
                if (p < 2 || p > m) continue;
                std::vector<Supertree> cls = filter_class(all, SupertreeClass::pendent_edges(p));
                std::string expected = code_of(t1(n, p, k));
                Verdict v = Verdict::Fail;
                std::string top;
                double sep = 0.0;
                if (!cls.empty()) {
                    try {
                        auto ranked = rank_by_q(cls, opts);
                        top = ranked[0].code.value;
                        TopCheck tc = unique_top(ranked, expected);
                        v = tc.verdict;
                        sep = tc.separation;
                    } catch (const ConvergenceError&) {
                        v = Verdict::Inconclusive;
                    }
                }
                r.rows.push_back({std::to_string(k), std::to_string(n), std::to_string(p),
                                  std::to_string(cls.size()), top, expected, fmt(sep),
                                  status_name(v)});
                r.verdict = worst(r.verdict, v);
            }
        }
}

// Degree/eigenvector monotonicity at the argmax of each degree class.
void run_degree_monotone(const Grid& grid, const SolverOptions& opts, Report& r,
                         bool forward) {
    auto ks = grid.values("k", "3", kNoDiameter);
    auto ms = grid.values("m", "2..5", kNoDiameter);
    r.grid = effective_dims(grid, {{"k", "3"}, {"m", "2..5"}});
    r.columns = {"k", "m", "pi", "argmax", "pairs", "unresolved", "min_margin", "status"};

    EnumCache cache;
    for (int k : ks)
        for (int m : ms) {
            if (k < 2 || m < 1) continue;
            auto groups = by_degree_multiset(cache.get(m, k));
            for (const auto& [pi, cls] : groups) {
                Verdict v = Verdict::Pass;
                std::string top;
                int pairs = 0, unresolved = 0;
                double min_margin = std::numeric_limits<double>::infinity();
                try {
                    auto ranked = rank_by_q(cls, opts);
                    top = ranked[0].code.value;
                    if (group_size(ranked, 0) > 1) {
                        v = Verdict::Inconclusive; // argmax not identified
                    } else {
                        const Supertree* best = nullptr;
                        for (const auto& t : cls)
                            if (code_of(t) == top) best = &t;
                        if (!best)
                            throw Error(ErrorCode::BadParams, "ranked code missing from class");
                        SpectralResult rb = solve(best->graph(), opts);
                        const auto& x = rb.eigenvector;
                        double thr = 10.0 * rb.residual + 1e-14;
                        for (int a = 0; a < best->n(); ++a)
                            for (int b = 0; b < best->n(); ++b) {
                                if (forward) {
                                    // d_u > d_v must force x_u > x_v
                                    if (best->degree(a) <= best->degree(b)) continue;
                                    ++pairs;
                                    double sep = x[static_cast<size_t>(a)] -
                                                 x[static_cast<size_t>(b)];
                                    min_margin = std::min(min_margin, sep);
                                    if (sep < -thr)
                                        v = worst(v, Verdict::Fail);
                                    else if (sep <= thr) {
                                        ++unresolved;
                                        v = worst(v, Verdict::Inconclusive);
                                    }
                                } else {
                                    // certified x_u > x_v must force d_u >= d_v
                                    if (a == b) continue;
                                    double sep = x[static_cast<size_t>(a)] -
                                                 x[static_cast<size_t>(b)];
                                    if (sep > thr) {
                                        ++pairs;
                                        min_margin = std::min(min_margin, sep);
                                        if (best->degree(a) < best->degree(b))
                                            v = worst(v, Verdict::Fail);
                                    } else if (std::abs(sep) <= thr &&
                                               best->degree(a) > best->degree(b)) {
                                        // order of x undecidable but degrees differ
                                        ++unresolved;
                                        v = worst(v, Verdict::Inconclusive);
                                    }
                                }
                            }
                    }
                } catch (const ConvergenceError&) {
                    v = Verdict::Inconclusive;
                }
                if (!std::isfinite(min_margin)) min_margin = 0.0;
                r.rows.push_back({std::to_string(k), std::to_string(m), join_ints(pi), top,
                                  std::to_string(pairs), std::to_string(unresolved),
                                  fmt(min_margin), status_name(v)});
                r.verdict = worst(r.verdict, v);
            }
        }
}

void run_lem4_4(const Grid& grid, const SolverOptions& opts, std::uint64_t, Report& r) {
    run_degree_monotone(grid, opts, r, true);
}

void run_lem4_5(const Grid& grid, const SolverOptions& opts, std::uint64_t, Report& r) {
    run_degree_monotone(grid, opts, r, false);
}

void run_thm4_8(const Grid& grid, const SolverOptions& opts, std::uint64_t, Report& r) {
    auto ks = grid.values("k", "3", kNoDiameter);
    auto ms = grid.values("m", "2..5", kNoDiameter);
    r.grid = effective_dims(grid, {{"k", "3"}, {"m", "2..5"}});
    r.columns = {"k", "m", "pi", "class_size", "top", "expected", "separation", "status"};

    EnumCache cache;
    for (int k : ks)
        for (int m : ms) {
            if (k < 2 || m < 1) continue;
            auto groups = by_degree_multiset(cache.get(m, k));
            for (const auto& [pi, cls] : groups) {
                std::string expected = code_of(bfs_supertree(DegreeSequence(pi, k)).tree);
                Verdict v = Verdict::Fail;
                std::string top;
                double sep = 0.0;
                try {
                    auto ranked = rank_by_q(cls, opts);
                    top = ranked[0].code.value;
                    TopCheck tc = unique_top(ranked, expected);
                    v = tc.verdict;
                    sep = tc.separation;
                } catch (const ConvergenceError&) {
                    v = Verdict::Inconclusive;
                }
                r.rows.push_back({std::to_string(k), std::to_string(m), join_ints(pi),
                                  std::to_string(cls.size()), top, expected, fmt(sep),
                                  status_name(v)});
                r.verdict = worst(r.verdict, v);
            }
        }
}

void run_thm4_10(const Grid& grid, const SolverOptions& opts, std::uint64_t, Report& r) {
    auto ks = grid.values("k", "3", kNoDiameter);
    auto ms = grid.values("m", "2..5", kNoDiameter);
    r.grid = effective_dims(grid, {{"k", "3"}, {"m", "2..5"}, {"q", "n-m+1..n-1"}});
    r.columns = {"k", "n", "q", "class_size", "top", "expected", "pi_match", "separation",
                 "status"};

    EnumCache cache;
    for (int k : ks)
        for (int m : ms) {
            if (k < 2 || m < 2) continue;
            int n = m * (k - 1) + 1;
            std::vector<int> qs;
            if (grid.has("q"))
                qs = grid.values("q", "", kNoDiameter);
            else
                for (int q = n - m + 1; q <= n - 1; ++q) qs.push_back(q);
            const auto& all = cache.get(m, k);
            for (int q : qs) {
                if (q < n - m + 1 || q > n - 1) continue;
                DegreeSequence pi = pendant_degree_sequence(n, q, k);
                std::string expected = code_of(bfs_supertree(pi).tree);
                std::vector<Supertree> cls =
                    filter_class(all, SupertreeClass::pendent_vertices(q));
                Verdict v = Verdict::Fail;
                std::string top, pi_match = "-";
                double sep = 0.0;
                if (!cls.empty()) {
                    try {
                        auto ranked = rank_by_q(cls, opts);
                        top = ranked[0].code.value;
                        TopCheck tc = unique_top(ranked, expected);
                        v = tc.verdict;
                        sep = tc.separation;
                        if (v == Verdict::Pass) pi_match = "yes";
                    } catch (const ConvergenceError&) {
                        v = Verdict::Inconclusive;
                    }
                }
                r.rows.push_back({std::to_string(k), std::to_string(n), std::to_string(q),
                                  std::to_string(cls.size()), top, expected, pi_match,
                                  fmt(sep), status_name(v)});
                r.verdict = worst(r.verdict, v);
            }
        }
}

using ClaimFn = void (*)(const Grid&, const SolverOptions&, std::uint64_t, Report&);

const std::vector<std::pair<std::string, ClaimFn>>& claim_table() {
    static const std::vector<std::pair<std::string, ClaimFn>> table = {
        {"lem2.4", run_lem2_4},   {"lem2.6", run_lem2_6}, {"lem2.7", run_lem2_7},
        {"lem2.8", run_lem2_8},   {"lem2.9", run_lem2_9}, {"lem2.10", run_lem2_10},
        {"thm3.1", run_thm3_1},   {"thm3.3", run_thm3_3}, {"thm3.4", run_thm3_4},
        {"thm4.2", run_thm4_2},   {"lem4.4", run_lem4_4}, {"lem4.5", run_lem4_5},
        {"thm4.8", run_thm4_8},   {"thm4.10", run_thm4_10},
    };
    return table;
}

} // namespace

std::vector<int> resolve_range(const std::string& text, int d_context) {
    std::string t = trim(text);
    auto pos = t.find("..");
    int lo, hi;
    if (pos == std::string::npos) {
        lo = hi = resolve_endpoint(t, d_context);
    } else {
        lo = resolve_endpoint(t.substr(0, pos), d_context);
        hi = resolve_endpoint(t.substr(pos + 2), d_context);
    }
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

Grid Grid::parse(const std::string& text) {
    Grid g;
    g.raw = trim(text);
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::BadParams, "grid dimension '" + tok + "' must be name=range");
        std::string name = trim(tok.substr(0, eq));
        std::string value = trim(tok.substr(eq + 1));
        if (name.empty() || value.empty())
            throw Error(ErrorCode::BadParams, "grid dimension '" + tok + "' must be name=range");
        g.dims[name] = value;
    }
    return g;
}

std::vector<int> Grid::values(const std::string& name, const std::string& fallback,
                              int d_context) const {
    auto it = dims.find(name);
    const std::string& text = it != dims.end() ? it->second : fallback;
    if (text.empty()) return {};
    return resolve_range(text, d_context);
}

int Grid::scalar(const std::string& name, int fallback) const {
    auto it = dims.find(name);
    if (it == dims.end()) return fallback;
    auto v = resolve_range(it->second, kNoDiameter);
    if (v.size() != 1)
        throw Error(ErrorCode::BadParams, "dimension '" + name + "' must be a single value");
    return v[0];
}

const std::vector<std::string>& known_claims() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : claim_table()) out.push_back(id);
        return out;
    }();
    return ids;
}

Report verify(const std::string& claim_id, const Grid& grid, const SolverOptions& opts,
              std::uint64_t seed) {
    ClaimFn fn = nullptr;
    for (const auto& [id, f] : claim_table())
        if (id == claim_id) fn = f;
    if (!fn) {
        std::string known;
        for (const auto& id : known_claims()) known += (known.empty() ? "" : " ") + id;
        throw Error(ErrorCode::UnknownClaim,
                    "unknown claim '" + claim_id + "'; known: " + known);
    }

    SolverOptions o = opts;
    o.bracket_log = nullptr;
    Report r;
    r.claim_id = claim_id;
    r.tolerance = o.tolerance;
    r.max_iterations = o.max_iterations;
    r.seed = seed;
    r.verdict = Verdict::Pass;

    auto t0 = std::chrono::steady_clock::now();
    fn(grid, o, seed, r);
    auto t1 = std::chrono::steady_clock::now();
    r.runtime_seconds = std::chrono::duration<double>(t1 - t0).count();

    if (r.rows.empty()) {
        add_note(r, "no cells in range");
        r.verdict = worst(r.verdict, Verdict::Inconclusive);
    }
    return r;
}

Report conjecture_scan(const std::string& d_range, const std::string& m_range,
                       const std::string& k_range, const SolverOptions& opts) {
    SolverOptions o = opts;
    o.bracket_log = nullptr;
    Report r;
    r.claim_id = "conjecture-scan";
    r.scan_wording = true;
    r.grid = "d=" + d_range + ",m=" + m_range + ",k=" + k_range;
    r.tolerance = o.tolerance;
    r.max_iterations = o.max_iterations;
    r.seed = 0;
    r.verdict = Verdict::Pass;
    r.columns = {"k", "d", "m", "class_size", "first", "second", "expected_second",
                 "gap_first", "gap_third", "status"};

    auto t0 = std::chrono::steady_clock::now();
    EnumCache cache;
    for (int k : resolve_range(k_range, kNoDiameter))
        for (int d : resolve_range(d_range, kNoDiameter))
            for (int m : resolve_range(m_range, d)) {
                if (k < 2 || d < 4 || m < d + 1) continue;
                std::vector<Supertree> cls =
                    filter_class(cache.get(m, k), SupertreeClass::diameter(d));
                std::string expected = code_of(s2(m, d, k));
                Verdict v = Verdict::Fail;
                std::string first, second;
                double gap_first = 0.0, gap_third = 0.0;
                try {
                    auto ranked = rank_by_q(cls, o);
                    if (!ranked.empty()) first = ranked[0].code.value;
                    if (ranked.size() > 1) second = ranked[1].code.value;
                    int i2 = find_code(ranked, expected);
                    if (i2 < 0) {
                        v = Verdict::Fail;
                    } else {
                        int g2 = ranked[static_cast<size_t>(i2)].tie_group;
                        if (g2 == 0)
                            v = group_size(ranked, 0) == 1 ? Verdict::Fail
                                                           : Verdict::Inconclusive;
                        else if (g2 == 1)
                            v = (group_size(ranked, 0) == 1 && group_size(ranked, 1) == 1)
                                    ? Verdict::Pass
                                    : Verdict::Inconclusive;
                        else
                            v = Verdict::Fail;
                        if (i2 >= 1)
                            gap_first = ranked[static_cast<size_t>(i2 - 1)].lower -
                                        ranked[static_cast<size_t>(i2)].upper;
                        if (i2 + 1 < static_cast<int>(ranked.size()))
                            gap_third = ranked[static_cast<size_t>(i2)].lower -
                                        ranked[static_cast<size_t>(i2 + 1)].upper;
                        else
                            gap_third = std::numeric_limits<double>::infinity();
                    }
                } catch (const ConvergenceError&) {
                    v = Verdict::Inconclusive;
                }
                r.rows.push_back({std::to_string(k), std::to_string(d), std::to_string(m),
                                  std::to_string(cls.size()), first, second, expected,
                                  fmt(gap_first), fmt(gap_third), status_name(v)});
                r.verdict = worst(r.verdict, v);
            }
    auto t1 = std::chrono::steady_clock::now();
    r.runtime_seconds = std::chrono::duration<double>(t1 - t0).count();

    if (r.rows.empty()) {
        add_note(r, "no cells in range");
        r.verdict = Verdict::Inconclusive;
    }
    return r;
}

} // namespace supertrees
