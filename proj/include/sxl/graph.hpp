#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sxl/bitset.hpp"
#include "sxl/errors.hpp"

namespace sxl {

/// Immutable dense simple graph with one bitset row per vertex.
///
/// All mutating algebra (edge insertion, join, rotation, ...) returns a new
/// value, so graphs can be shared freely across threads. `Words` selects the
/// row width; `Graph` (one word, up to 64 vertices) is the type the rest of
/// the library traffics in, the wider instantiation exists for large join
/// constructions whose eigenvalues are still wanted.
template <unsigned Words>
class BasicGraph {
public:
    using Row = Bitset<Words>;
    static constexpr int max_vertices = Row::capacity;

    BasicGraph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int i, int j) const { return rows_[i].test(j); }
    int degree(int v) const { return rows_[v].count(); }
    const Row& neighbors(int v) const { return rows_[v]; }

    /// Mask of all vertices.
    Row vertex_mask() const { return Row::below(n_); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int i = 0; i < n_; ++i)
            rows_[i].for_each([&](int j) {
                if (j > i) out.emplace_back(i, j);
            });
        return out;
    }

    BasicGraph with_edge(int i, int j) const {
        BasicGraph g = *this;
        if (!g.rows_[i].test(j)) {
            g.rows_[i].set(j);
            g.rows_[j].set(i);
            ++g.m_;
        }
        return g;
    }

    BasicGraph without_edge(int i, int j) const {
        BasicGraph g = *this;
        if (g.rows_[i].test(j)) {
            g.rows_[i].reset(j);
            g.rows_[j].reset(i);
            --g.m_;
        }
        return g;
    }

    friend bool operator==(const BasicGraph& a, const BasicGraph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

    template <unsigned W>
    friend BasicGraph<W> build_graph(int, std::span<const std::pair<int, int>>);
    template <unsigned W>
    friend BasicGraph<W> join(const BasicGraph<W>&, const BasicGraph<W>&);
    template <unsigned W>
    friend BasicGraph<W> disjoint_union(const BasicGraph<W>&, const BasicGraph<W>&);
    template <unsigned W>
    friend BasicGraph<W> induced_subgraph(const BasicGraph<W>&, const Bitset<W>&);

private:
    explicit BasicGraph(int n) : n_(n), m_(0), rows_(static_cast<size_t>(n)) {}

    int n_ = 0;
    int m_ = 0;
    std::vector<Row> rows_;
};

using Graph = BasicGraph<1>;
using WideGraph = BasicGraph<2>;

/// Builds a graph from an explicit edge list. Duplicate edges collapse.
/// Throws VertexLimitExceeded for n over the row capacity, InvalidEdge for
/// loops or out-of-range endpoints.
template <unsigned W = 1>
BasicGraph<W> build_graph(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0 || n > BasicGraph<W>::max_vertices)
        throw VertexLimitExceeded("vertex count " + std::to_string(n) + " exceeds limit " +
                                  std::to_string(BasicGraph<W>::max_vertices));
    BasicGraph<W> g(n);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw InvalidEdge("edge endpoint out of range: (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
        if (a == b)
            throw InvalidEdge("loop at vertex " + std::to_string(a));
        if (!g.rows_[a].test(b)) {
            g.rows_[a].set(b);
            g.rows_[b].set(a);
            ++g.m_;
        }
    }
    return g;
}

template <unsigned W = 1>
BasicGraph<W> build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return build_graph<W>(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

template <unsigned W = 1>
BasicGraph<W> complete_graph(int n) {
    if (n < 0) throw InvalidParameter("negative vertex count");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return build_graph<W>(n, es);
}

template <unsigned W = 1>
BasicGraph<W> empty_graph(int n) {
    if (n < 0) throw InvalidParameter("negative vertex count");
    return build_graph<W>(n, std::span<const std::pair<int, int>>{});
}

/// Join G v H: disjoint copies plus every cross edge.
template <unsigned W>
BasicGraph<W> join(const BasicGraph<W>& a, const BasicGraph<W>& b) {
    const int n = a.vertex_count() + b.vertex_count();
    if (n > BasicGraph<W>::max_vertices)
        throw VertexLimitExceeded("join would have " + std::to_string(n) + " vertices");
    BasicGraph<W> g(n);
    const int na = a.vertex_count();
    for (int i = 0; i < na; ++i)
        a.neighbors(i).for_each([&](int j) { g.rows_[i].set(j); });
    for (int i = 0; i < b.vertex_count(); ++i)
        b.neighbors(i).for_each([&](int j) { g.rows_[na + i].set(na + j); });
    for (int i = 0; i < na; ++i)
        for (int j = na; j < n; ++j) {
            g.rows_[i].set(j);
            g.rows_[j].set(i);
        }
    g.m_ = a.edge_count() + b.edge_count() + na * b.vertex_count();
    return g;
}

/// Vertex-disjoint union.
template <unsigned W>
BasicGraph<W> disjoint_union(const BasicGraph<W>& a, const BasicGraph<W>& b) {
    const int n = a.vertex_count() + b.vertex_count();
    if (n > BasicGraph<W>::max_vertices)
        throw VertexLimitExceeded("union would have " + std::to_string(n) + " vertices");
    BasicGraph<W> g(n);
    const int na = a.vertex_count();
    for (int i = 0; i < na; ++i)
        a.neighbors(i).for_each([&](int j) { g.rows_[i].set(j); });
    for (int i = 0; i < b.vertex_count(); ++i)
        b.neighbors(i).for_each([&](int j) { g.rows_[na + i].set(na + j); });
    g.m_ = a.edge_count() + b.edge_count();
    return g;
}

/// Subgraph induced by vertex set S, relabeled 0..|S|-1 in ascending
/// original-id order.
template <unsigned W>
BasicGraph<W> induced_subgraph(const BasicGraph<W>& g, const Bitset<W>& s) {
    std::vector<int> keep;
    s.for_each([&](int v) {
        if (v < g.vertex_count()) keep.push_back(v);
    });
    BasicGraph<W> h(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) {
                h.rows_[i].set(static_cast<int>(j));
                h.rows_[j].set(static_cast<int>(i));
                ++h.m_;
            }
    return h;
}

template <unsigned W>
BasicGraph<W> induced_subgraph(const BasicGraph<W>& g, std::span<const int> vertices) {
    Bitset<W> s;
    for (int v : vertices) s.set(v);
    return induced_subgraph(g, s);
}

/// Connected components as vertex masks, ordered by smallest contained id.
template <unsigned W>
std::vector<Bitset<W>> components(const BasicGraph<W>& g) {
    std::vector<Bitset<W>> out;
    Bitset<W> seen;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen.test(v)) continue;
        Bitset<W> comp;
        comp.set(v);
        // mask BFS: expand until the frontier dies
        Bitset<W> frontier = comp;
        while (frontier.any()) {
            Bitset<W> next;
            frontier.for_each([&](int u) { next = next | g.neighbors(u); });
            frontier = next.minus(comp);
            comp = comp | frontier;
        }
        seen = seen | comp;
        out.push_back(comp);
    }
    return out;
}

template <unsigned W>
bool is_connected(const BasicGraph<W>& g) {
    if (g.vertex_count() <= 1) return true;
    return components(g).size() == 1;
}

/// Decomposition around a vertex u: U = N(u), W = V \ N[u], the isolated
/// vertices U0 of G[U], and the connected components of G[U] (as masks over
/// the original vertex ids).
template <unsigned W>
struct BasicNeighborhoodPartition {
    int center = 0;
    Bitset<W> U;
    Bitset<W> W_set;
    Bitset<W> U0;
    std::vector<Bitset<W>> components_of_U;
};

using NeighborhoodPartition = BasicNeighborhoodPartition<1>;

template <unsigned W>
BasicNeighborhoodPartition<W> neighborhood_partition(const BasicGraph<W>& g, int u) {
    if (u < 0 || u >= g.vertex_count())
        throw InvalidParameter("vertex " + std::to_string(u) + " not in graph");
    BasicNeighborhoodPartition<W> p;
    p.center = u;
    p.U = g.neighbors(u);
    Bitset<W> closed = p.U;
    closed.set(u);
    p.W_set = g.vertex_mask().minus(closed);

    // components of G[U], tracked directly on the original ids
    Bitset<W> seen;
    std::vector<int> order;
    p.U.for_each([&](int v) { order.push_back(v); });
    for (int v : order) {
        if (seen.test(v)) continue;
        Bitset<W> comp;
        comp.set(v);
        Bitset<W> frontier = comp;
        while (frontier.any()) {
            Bitset<W> next;
            frontier.for_each([&](int x) { next = next | (g.neighbors(x) & p.U); });
            frontier = next.minus(comp);
            comp = comp | frontier;
        }
        seen = seen | comp;
        if (comp.count() == 1) p.U0 = p.U0 | comp;
        p.components_of_U.push_back(comp);
    }
    return p;
}

} // namespace sxl
