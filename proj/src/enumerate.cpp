#include "supertrees/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace supertrees {

SupertreeClass SupertreeClass::degree_sequence(std::vector<int> degs) {
    std::sort(degs.begin(), degs.end(), std::greater<int>());
    return {Kind::Degrees, 0, std::move(degs)};
}

std::vector<Supertree> enumerate_supertrees(int m, int k, bool allow_large) {
    if (m < 1 || k < 2)
        throw Error(ErrorCode::BadParams, "need m >= 1 and k >= 2");
    if (!allow_large && m * (k - 1) > 40)
        throw Error(ErrorCode::TooLarge, "m(k-1) = " + std::to_string(m * (k - 1)) +
                                             " exceeds the guard rail of 40");

    std::map<std::string, Supertree> level;
    {
        Supertree seed = loose_path(1, k);
        level.emplace(canonical_code(seed).value, std::move(seed));
    }
    for (int step = 2; step <= m; ++step) {
        std::map<std::string, Supertree> next;
        for (const auto& [code, t] : level) {
            for (const auto& orbit : vertex_orbits(t)) {
                int anchor = orbit.front();
                std::vector<Edge> edges = t.edges();
                Edge fresh = {anchor};
                for (int j = 0; j < k - 1; ++j)
                    fresh.push_back(t.n() + j);
                edges.push_back(std::move(fresh));
                Supertree grown{Hypergraph(k, t.n() + k - 1, std::move(edges))};
                std::string c = canonical_code(grown).value;
                next.emplace(std::move(c), std::move(grown));
            }
        }
        level = std::move(next);
    }

    std::vector<Supertree> out;
    out.reserve(level.size());
    for (auto& [code, t] : level)
        out.push_back(std::move(t));
    return out;
}

std::vector<Supertree> filter_class(const std::vector<Supertree>& graphs,
                                    const SupertreeClass& cls) {
    std::vector<Supertree> out;
    for (const auto& t : graphs) {
        bool keep = false;
        switch (cls.kind) {
        case SupertreeClass::Kind::All:
            keep = true;
            break;
        case SupertreeClass::Kind::Diameter:
            keep = diameter(t) == cls.value;
            break;
        case SupertreeClass::Kind::PendentEdges:
            keep = pendent_counts(t).first == cls.value;
            break;
        case SupertreeClass::Kind::PendentVertices:
            keep = pendent_counts(t).second == cls.value;
            break;
        case SupertreeClass::Kind::Degrees: {
            std::vector<int> d = t.graph().degrees();
            std::sort(d.begin(), d.end(), std::greater<int>());
            keep = d == cls.degrees;
            break;
        }
        }
        if (keep)
            out.push_back(t);
    }
    return out;
}

std::vector<RankedEntry> rank_by_q(const std::vector<Supertree>& graphs,
                                   const SolverOptions& opts) {
    std::vector<RankedEntry> out;
    out.reserve(graphs.size());
    for (const auto& t : graphs) {
        CanonicalCode code = canonical_code(t);
        try {
            SpectralResult r = spectral_radius(t.graph(), Tensor::Q, opts);
            out.push_back({std::move(code), r.value, r.lower, r.upper, r.iterations, 0});
        } catch (const ConvergenceError& e) {
            throw ConvergenceError(std::string(e.what()) + " [graph " + code.value + "]",
                                   e.lower(), e.upper(), e.iterations());
        }
    }
    std::sort(out.begin(), out.end(), [](const RankedEntry& a, const RankedEntry& b) {
        if (a.q_value != b.q_value)
            return a.q_value > b.q_value;
        return a.code < b.code;
    });
    double gap = 10.0 * opts.tolerance;
    int group = 0;
    for (size_t i = 0; i < out.size(); ++i) {
        if (i > 0 && out[i - 1].lower - out[i].upper <= gap)
            out[i].tie_group = out[i - 1].tie_group;
        else
            out[i].tie_group = group;
        group = out[i].tie_group + 1;
    }
    return out;
}

} // namespace supertrees
