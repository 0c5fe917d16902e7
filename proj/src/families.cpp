#include "supertrees/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace supertrees {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok)
        throw Error(ErrorCode::BadParams, what);
}

std::vector<Edge> loose_path_edges(int m, int k) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        Edge e(static_cast<size_t>(k));
        std::iota(e.begin(), e.end(), i * (k - 1));
        edges.push_back(std::move(e));
    }
    return edges;
}

// Appends `count` pendent edges at `anchor`, consuming fresh labels from
// `next` onward.
void attach_pendent_edges(std::vector<Edge>& edges, int anchor, int count, int k, int& next) {
    for (int j = 0; j < count; ++j) {
        Edge e = {anchor};
        for (int t = 0; t < k - 1; ++t)
            e.push_back(next++);
        edges.push_back(std::move(e));
    }
}

Supertree path_with_attachments(int m, int d, int k, int anchor) {
    std::vector<Edge> edges = loose_path_edges(d, k);
    int next = d * (k - 1) + 1;
    attach_pendent_edges(edges, anchor, m - d, k, next);
    return Supertree(Hypergraph(k, m * (k - 1) + 1, std::move(edges)));
}

} // namespace

DegreeSequence::DegreeSequence(std::vector<int> degs, int kk) : degrees(std::move(degs)), k(kk) {
    if (k < 2)
        throw Error(ErrorCode::BadParams, "edge size must be at least 2, got " + std::to_string(k));
    if (degrees.empty())
        throw Error(ErrorCode::NotRealizable, "degree sequence is empty");
    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    if (degrees.back() < 1)
        throw Error(ErrorCode::NotRealizable, "degrees must be positive");
    long long sum = std::accumulate(degrees.begin(), degrees.end(), 0LL);
    if (sum % k != 0)
        throw Error(ErrorCode::NotRealizable,
                    "degree sum " + std::to_string(sum) + " is not a multiple of k=" +
                        std::to_string(k));
    long long edges = sum / k;
    long long expected = edges * (k - 1) + 1;
    if (expected != static_cast<long long>(degrees.size()))
        throw Error(ErrorCode::NotRealizable,
                    "sequence of length " + std::to_string(degrees.size()) + " with " +
                        std::to_string(edges) + " edges needs " + std::to_string(expected) +
                        " vertices");
}

int DegreeSequence::m() const {
    long long sum = std::accumulate(degrees.begin(), degrees.end(), 0LL);
    return static_cast<int>(sum / k);
}

Supertree loose_path(int m, int k) {
    require(m >= 1, "loose_path needs m >= 1");
    require(k >= 2, "loose_path needs k >= 2");
    return Supertree(Hypergraph(k, m * (k - 1) + 1, loose_path_edges(m, k)));
}

Supertree hyperstar(int m, int k) {
    require(m >= 1, "hyperstar needs m >= 1");
    require(k >= 2, "hyperstar needs k >= 2");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    int next = 1;
    attach_pendent_edges(edges, 0, m, k, next);
    return Supertree(Hypergraph(k, m * (k - 1) + 1, std::move(edges)));
}

Supertree power_k(const std::vector<std::pair<int, int>>& tree_edges, int k) {
    require(k >= 2, "power needs k >= 2");
    if (tree_edges.empty())
        throw Error(ErrorCode::InputNotATree, "need at least one edge");
    int n_tree = 0;
    for (auto [a, b] : tree_edges) {
        if (a < 0 || b < 0)
            throw Error(ErrorCode::InputNotATree, "negative vertex label");
        n_tree = std::max({n_tree, a + 1, b + 1});
    }
    std::vector<Edge> base;
    base.reserve(tree_edges.size());
    for (auto [a, b] : tree_edges)
        base.push_back({a, b});
    Hypergraph tree(2, n_tree, base);
    if (!tree.is_connected() || tree.m() != n_tree - 1)
        throw Error(ErrorCode::InputNotATree, "edge list is not a tree");

    int next = n_tree;
    std::vector<Edge> edges;
    edges.reserve(tree_edges.size());
    for (auto [a, b] : tree_edges) {
        Edge e = {a, b};
        for (int t = 0; t < k - 2; ++t)
            e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return Supertree(Hypergraph(k, next, std::move(edges)));
}

Supertree s1(int m, int d, int k) {
    require(k >= 2, "s1 needs k >= 2");
    require(d >= 3, "s1 needs d >= 3");
    require(d <= m, "s1 needs d <= m");
    return path_with_attachments(m, d, k, (d / 2) * (k - 1));
}

Supertree s2(int m, int d, int k) {
    require(k >= 2, "s2 needs k >= 2");
    require(d >= 4, "s2 needs d >= 4");
    require(d <= m, "s2 needs d <= m");
    return path_with_attachments(m, d, k, (d / 2 - 1) * (k - 1));
}

Supertree s3(int m, int d, int k) {
    require(k >= 3, "s3 needs k >= 3 (an interior attachment vertex)");
    require(d % 2 == 1, "s3 needs odd d");
    require(d >= 3, "s3 needs d >= 3");
    require(d <= m, "s3 needs d <= m");
    return path_with_attachments(m, d, k, (d / 2) * (k - 1) + 1);
}

Supertree s4(int m, int k) {
    require(k >= 2, "s4 needs k >= 2");
    require(m >= 5, "s4 needs m >= 5");
    std::vector<Edge> edges = loose_path_edges(3, k);
    int next = 3 * (k - 1) + 1;
    attach_pendent_edges(edges, k - 1, m - 4, k, next);
    attach_pendent_edges(edges, 2 * (k - 1), 1, k, next);
    return Supertree(Hypergraph(k, m * (k - 1) + 1, std::move(edges)));
}

Supertree t1(int n, int p, int k) {
    require(k >= 2, "t1 needs k >= 2");
    require(n >= k, "t1 needs n >= k");
    require((n - 1) % (k - 1) == 0, "t1 needs (n-1) divisible by (k-1)");
    int m = (n - 1) / (k - 1);
    require(p >= 1, "t1 needs p >= 1");
    require(p <= m, "t1 needs p <= (n-1)/(k-1)");

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    int next = 1;
    attach_pendent_edges(edges, 0, p, k, next);
    int extra = m - p;
    for (int i = 0; i < p; ++i) {
        int len = extra / p + (i < extra % p ? 1 : 0);
        int anchor = 1 + i * (k - 1); // first tip of star edge i
        for (int step = 0; step < len; ++step) {
            Edge e = {anchor};
            for (int t = 0; t < k - 1; ++t)
                e.push_back(next++);
            anchor = next - 1;
            edges.push_back(std::move(e));
        }
    }
    return Supertree(Hypergraph(k, n, std::move(edges)));
}

DegreeSequence pendant_degree_sequence(int n, int q, int k) {
    require(k >= 2, "need k >= 2");
    require(n >= k, "need n >= k");
    require((n - 1) % (k - 1) == 0, "need (n-1) divisible by (k-1)");
    int c = (n - 1) / (k - 1);
    require(q >= n - c + 1, "need q >= n - (n-1)/(k-1) + 1");
    require(q <= n - 1, "need q <= n - 1");
    std::vector<int> degrees;
    degrees.reserve(static_cast<size_t>(n));
    degrees.push_back(q + 1 + c - n);
    degrees.insert(degrees.end(), static_cast<size_t>(n - q - 1), 2);
    degrees.insert(degrees.end(), static_cast<size_t>(q), 1);
    return DegreeSequence(std::move(degrees), k);
}

BFSSupertree bfs_supertree(const DegreeSequence& pi) {
    const auto& d = pi.degrees;
    int k = pi.k;
    int n = pi.n();
    int m = pi.m();

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    std::vector<int> heights(static_cast<size_t>(n), 0);
    int next = 1;
    for (int v = 0; v < n; ++v) {
        if (v >= next) // would need a vertex that was never reached
            throw Error(ErrorCode::NotRealizable, "sequence is not realizable");
        int create = (v == 0) ? d[static_cast<size_t>(v)] : d[static_cast<size_t>(v)] - 1;
        for (int c = 0; c < create; ++c) {
            Edge e = {v};
            for (int t = 0; t < k - 1; ++t) {
                if (next >= n)
                    throw Error(ErrorCode::NotRealizable, "sequence is not realizable");
                heights[static_cast<size_t>(next)] = heights[static_cast<size_t>(v)] + 1;
                e.push_back(next++);
            }
            edges.push_back(std::move(e));
        }
    }
    if (next != n)
        throw Error(ErrorCode::NotRealizable, "sequence is not realizable");

    Supertree tree{Hypergraph(k, n, std::move(edges))};
    BFSOrdering ordering;
    ordering.order.resize(static_cast<size_t>(n));
    std::iota(ordering.order.begin(), ordering.order.end(), 0);
    ordering.heights = std::move(heights);
    return {std::move(tree), std::move(ordering)};
}

namespace {

bool valid_witness(const Supertree& t, const BFSOrdering& o) {
    int n = t.n();
    if (static_cast<int>(o.order.size()) != n || static_cast<int>(o.heights.size()) != n)
        return false;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : o.order) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

std::vector<int> positions(const BFSOrdering& o) {
    std::vector<int> pos(o.order.size());
    for (size_t i = 0; i < o.order.size(); ++i)
        pos[static_cast<size_t>(o.order[i])] = static_cast<int>(i);
    return pos;
}

// Unique neighbor one level closer to the root; -1 for the root itself.
int parent_of(const Supertree& t, const BFSOrdering& o, int v) {
    for (int j : t.graph().incident_edges(v))
        for (int w : t.graph().edge(j))
            if (o.heights[static_cast<size_t>(w)] == o.heights[static_cast<size_t>(v)] - 1)
                return w;
    return -1;
}

} // namespace

bool bfs_heights_consistent(const Supertree& t, const BFSOrdering& o) {
    if (!valid_witness(t, o))
        return false;
    return o.heights == distances_from(t.graph(), o.order[0]);
}

bool bfs_clause_a(const Supertree& t, const BFSOrdering& o) {
    if (!valid_witness(t, o))
        return false;
    for (size_t i = 1; i < o.order.size(); ++i)
        if (o.heights[static_cast<size_t>(o.order[i - 1])] >
            o.heights[static_cast<size_t>(o.order[i])])
            return false;
    return true;
}

bool bfs_clause_b(const Supertree& t, const BFSOrdering& o) {
    if (!valid_witness(t, o))
        return false;
    for (size_t i = 1; i < o.order.size(); ++i)
        if (t.degree(o.order[i - 1]) < t.degree(o.order[i]))
            return false;
    return true;
}

bool bfs_clause_c(const Supertree& t, const BFSOrdering& o) {
    if (!valid_witness(t, o))
        return false;
    std::vector<int> pos = positions(o);
    int last = -1;
    for (int v : o.order) {
        if (v == o.order[0])
            continue;
        int p = parent_of(t, o, v);
        if (p < 0)
            return false;
        if (pos[static_cast<size_t>(p)] < last)
            return false;
        last = pos[static_cast<size_t>(p)];
    }
    return true;
}

bool bfs_clause_d(const Supertree& t, const BFSOrdering& o) {
    if (!valid_witness(t, o))
        return false;
    std::vector<int> pos = positions(o);
    for (const auto& e : t.edges()) {
        std::vector<int> ps;
        ps.reserve(e.size());
        for (int v : e)
            ps.push_back(pos[static_cast<size_t>(v)]);
        std::sort(ps.begin(), ps.end());
        for (size_t i = 2; i < ps.size(); ++i)
            if (ps[i] != ps[i - 1] + 1)
                return false;
    }
    return true;
}

bool is_bfs_ordering(const Supertree& t, const BFSOrdering& o) {
    return bfs_heights_consistent(t, o) && bfs_clause_a(t, o) && bfs_clause_b(t, o) &&
           bfs_clause_c(t, o) && bfs_clause_d(t, o);
}

} // namespace supertrees
