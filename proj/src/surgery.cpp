#include "supertrees/surgery.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace supertrees {

namespace {

bool contains(const Edge& e, int v) { return std::binary_search(e.begin(), e.end(), v); }

Edge swap_vertex(const Edge& e, int out, int in) {
    Edge r;
    r.reserve(e.size());
    for (int w : e)
        if (w != out)
            r.push_back(w);
    r.push_back(in);
    std::sort(r.begin(), r.end());
    return r;
}

void check_no_duplicates(const std::vector<Edge>& edges) {
    std::set<Edge> seen;
    for (const auto& e : edges)
        if (!seen.insert(e).second)
            throw Error(ErrorCode::ResultHasDuplicateEdge,
                        "operation would collapse two edges into one");
}

// Length of the pendent path hanging at u through its incident edge
// `first`, or -1 when the walk hits anything that is not a pendent path
// (a vertex of degree >= 3 or an edge with two continuations).
// Fills spine/edges with the walk when non-null.
int pendent_path_length(const Hypergraph& g, int u, int first, std::vector<int>* spine,
                        std::vector<int>* path_edges) {
    int cur = u;
    int edge = first;
    int len = 0;
    if (spine)
        spine->assign(1, u);
    if (path_edges)
        path_edges->clear();
    while (true) {
        if (++len > g.m())
            return -1; // cycle guard; cannot happen on supertrees
        int next = -1;
        for (int w : g.edge(edge)) {
            if (w == cur)
                continue;
            if (g.degree(w) >= 2) {
                if (next >= 0)
                    return -1;
                next = w;
            }
        }
        if (path_edges)
            path_edges->push_back(edge);
        if (next < 0)
            return len; // terminal edge: everything else is degree 1
        if (g.degree(next) != 2)
            return -1;
        if (spine)
            spine->push_back(next);
        int cont = -1;
        for (int j : g.incident_edges(next))
            if (j != edge)
                cont = j;
        cur = next;
        edge = cont;
    }
}

} // namespace

Hypergraph move_edges(const Hypergraph& g, int u,
                      const std::vector<std::pair<int, int>>& moves) {
    if (u < 0 || u >= g.n())
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(u));
    std::set<int> moved;
    std::vector<Edge> edges = g.edges();
    for (auto [j, v] : moves) {
        if (j < 0 || j >= g.m())
            throw Error(ErrorCode::BadParams, "edge index " + std::to_string(j) + " out of range");
        if (!moved.insert(j).second)
            throw Error(ErrorCode::BadParams,
                        "edge " + std::to_string(j) + " moved more than once");
        const Edge& e = g.edge(j);
        if (contains(e, u))
            throw Error(ErrorCode::UNotOutsideEdge,
                        "target vertex " + std::to_string(u) + " already lies in edge " +
                            std::to_string(j));
        if (!contains(e, v))
            throw Error(ErrorCode::VNotInEdge, "vertex " + std::to_string(v) +
                                                   " is not in edge " + std::to_string(j));
        edges[static_cast<size_t>(j)] = swap_vertex(e, v, u);
    }
    check_no_duplicates(edges);
    return Hypergraph(g.k(), g.n(), std::move(edges));
}

Supertree edge_release(const Supertree& t, int e, int u) {
    const Hypergraph& g = t.graph();
    if (e < 0 || e >= g.m())
        throw Error(ErrorCode::BadParams, "edge index " + std::to_string(e) + " out of range");
    if (!contains(g.edge(e), u))
        throw Error(ErrorCode::UNotInEdge,
                    "vertex " + std::to_string(u) + " is not in edge " + std::to_string(e));
    if (is_pendent_edge(g, e))
        throw Error(ErrorCode::EdgeIsPendent, "edge " + std::to_string(e) + " is pendent");

    std::vector<std::pair<int, int>> moves;
    for (int w : g.edge(e)) {
        if (w == u)
            continue;
        for (int j : g.incident_edges(w)) {
            if (j == e || contains(g.edge(j), u))
                continue;
            moves.emplace_back(j, w);
        }
    }
    return Supertree(move_edges(g, u, moves));
}

Supertree branch_collapse(const Supertree& t, int e, std::pair<int, int> keep) {
    const Hypergraph& g = t.graph();
    if (e < 0 || e >= g.m())
        throw Error(ErrorCode::BadParams, "edge index " + std::to_string(e) + " out of range");
    std::vector<int> heavy;
    for (int v : g.edge(e))
        if (g.degree(v) >= 2)
            heavy.push_back(v);
    if (heavy.size() < 3)
        throw Error(ErrorCode::NotBranchEdge, "edge " + std::to_string(e) + " has " +
                                                  std::to_string(heavy.size()) +
                                                  " non-pendent vertices, need at least 3");
    auto [v1, v2] = keep;
    if (v1 == v2 || std::find(heavy.begin(), heavy.end(), v1) == heavy.end() ||
        std::find(heavy.begin(), heavy.end(), v2) == heavy.end())
        throw Error(ErrorCode::BadParams,
                    "kept vertices must be two distinct non-pendent vertices of the edge");

    std::vector<std::pair<int, int>> moves;
    for (int v : heavy) {
        if (v == v1 || v == v2)
            continue;
        for (int j : g.incident_edges(v))
            if (j != e)
                moves.emplace_back(j, v);
    }
    return Supertree(move_edges(g, v1, moves));
}

Hypergraph two_switch(const Hypergraph& g, int e, int f, const std::vector<int>& u1,
                      const std::vector<int>& v1) {
    if (e < 0 || e >= g.m() || f < 0 || f >= g.m() || e == f)
        throw Error(ErrorCode::BadParams, "need two distinct valid edge indices");
    const Edge& ee = g.edge(e);
    const Edge& ff = g.edge(f);
    Edge common;
    std::set_intersection(ee.begin(), ee.end(), ff.begin(), ff.end(),
                          std::back_inserter(common));
    if (!common.empty())
        throw Error(ErrorCode::EdgesNotDisjoint,
                    "edges " + std::to_string(e) + " and " + std::to_string(f) + " share " +
                        std::to_string(common.size()) + " vertices");
    if (u1.empty() || u1.size() != v1.size() || static_cast<int>(u1.size()) > g.k() - 1)
        throw Error(ErrorCode::BadSubsetSizes,
                    "subsets must have equal size r with 1 <= r <= k-1");
    std::set<int> us(u1.begin(), u1.end()), vs(v1.begin(), v1.end());
    if (us.size() != u1.size() || vs.size() != v1.size())
        throw Error(ErrorCode::BadSubsetSizes, "subsets must not repeat vertices");
    for (int v : us)
        if (!contains(ee, v))
            throw Error(ErrorCode::BadParams,
                        "vertex " + std::to_string(v) + " is not in edge " + std::to_string(e));
    for (int v : vs)
        if (!contains(ff, v))
            throw Error(ErrorCode::BadParams,
                        "vertex " + std::to_string(v) + " is not in edge " + std::to_string(f));

    std::vector<Edge> edges = g.edges();
    Edge enew, fnew;
    for (int w : ee)
        if (!us.count(w))
            enew.push_back(w);
    enew.insert(enew.end(), vs.begin(), vs.end());
    for (int w : ff)
        if (!vs.count(w))
            fnew.push_back(w);
    fnew.insert(fnew.end(), us.begin(), us.end());
    std::sort(enew.begin(), enew.end());
    std::sort(fnew.begin(), fnew.end());
    edges[static_cast<size_t>(e)] = std::move(enew);
    edges[static_cast<size_t>(f)] = std::move(fnew);
    check_no_duplicates(edges);
    return Hypergraph(g.k(), g.n(), std::move(edges));
}

Hypergraph graft_step(const Hypergraph& g, int u, int p, int q) {
    if (u < 0 || u >= g.n())
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(u));
    if (p < 1 || q < 1)
        throw Error(ErrorCode::NotAGraftConfiguration, "need path lengths p >= 1 and q >= 1");
    if (g.degree(u) < 3)
        throw Error(ErrorCode::NotAGraftConfiguration,
                    "vertex " + std::to_string(u) +
                        " needs two pendent paths plus a nonempty base");

    int p_edge = -1, q_edge = -1;
    for (int j : g.incident_edges(u)) {
        int len = pendent_path_length(g, u, j, nullptr, nullptr);
        if (len == p && p_edge < 0)
            p_edge = j;
        else if (len == q && q_edge < 0)
            q_edge = j;
    }
    if (p_edge < 0 || q_edge < 0)
        throw Error(ErrorCode::NotAGraftConfiguration,
                    "no pendent paths of lengths " + std::to_string(p) + " and " +
                        std::to_string(q) + " at vertex " + std::to_string(u));

    std::vector<int> q_spine, q_edges, p_edges;
    pendent_path_length(g, u, q_edge, &q_spine, &q_edges);
    pendent_path_length(g, u, p_edge, nullptr, &p_edges);
    // Spines carry u plus the internal degree-2 vertices; the path ends are
    // the degree-1 tips inside the terminal edges.
    int v_prev = q_spine.back();       // v_{q-1} (u itself when q = 1)
    int f_last = q_edges.back();       // f_q
    int u_end = -1;                    // u_p: any degree-1 vertex of the last p-edge
    for (int w : g.edge(p_edges.back()))
        if (g.degree(w) == 1) {
            u_end = w;
            break;
        }
    if (u_end < 0)
        throw Error(ErrorCode::NotAGraftConfiguration, "p-path has no free end");
    return move_edges(g, u_end, {{f_last, v_prev}});
}

} // namespace supertrees
