#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <thread>
#include <vector>

#include "sxl/canonical.hpp"
#include "sxl/graph.hpp"

namespace sxl {

/// Isomorph-free exhaustive enumeration of graphs with a given edge count and
/// no isolated vertices. Connectivity is required by default; max_vertices
/// defaults to m + 1 (every connected m-edge graph fits).
struct EnumSpec {
    int m = 1;
    bool require_connected = true;
    int max_vertices = 0; // 0: default m + 1

    int effective_max_vertices() const { return max_vertices > 0 ? max_vertices : m + 1; }
};

namespace detail {

// Canonical-augmentation generation: a child with m+1 edges is accepted from
// its parent P iff deleting the canonical edge of the child (the highest bit
// position of its canonical form, an Aut-invariant choice) and dropping
// isolated vertices gives back a graph isomorphic to P. Each isomorphism
// class therefore has exactly one accepted production, so the search tree
// visits every class exactly once with no global seen-set.
class Enumerator {
public:
    Enumerator(const EnumSpec& spec, const std::function<void(const Graph&)>& visit, int threads)
        : spec_(spec), visit_(visit), threads_(threads) {}

    long run() {
        if (spec_.m < 1) throw InvalidParameter("enumeration needs m >= 1");
        if (spec_.m > 14)
            throw SizeLimitExceeded("internal enumeration capped at m = 14; feed a graph6 "
                                    "stream for larger sizes");
        if (spec_.effective_max_vertices() > Graph::max_vertices)
            throw InvalidParameter("max_vertices exceeds the 64-vertex graph limit");
        const Graph k2 = build_graph(2, {{0, 1}});
        count_.store(0);
        if (threads_ <= 1 || spec_.m <= 4) {
            grow(k2, canonical_form(k2));
            return count_.load();
        }
        // parallel mode: collect a frontier sequentially, then farm out the
        // independent subtrees; the emitted set is identical, order is not
        const int frontier_level = 4;
        std::vector<std::pair<Graph, CanonicalForm>> frontier;
        collect_frontier(k2, canonical_form(k2), frontier_level, frontier);
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        const int nthreads = std::min<int>(threads_, static_cast<int>(frontier.size()));
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < frontier.size(); i = next.fetch_add(1))
                    grow(frontier[i].first, frontier[i].second);
            });
        for (auto& th : pool) th.join();
        return count_.load();
    }

private:
    const EnumSpec& spec_;
    const std::function<void(const Graph&)>& visit_;
    int threads_;
    std::atomic<long> count_{0};

    void emit(const Graph& g) {
        if (spec_.require_connected && !is_connected(g)) return;
        count_.fetch_add(1);
        visit_(g);
    }

    bool prune(const Graph& g) const {
        if (!spec_.require_connected) return false;
        // each added edge joins at most two components
        const long comps = static_cast<long>(components(g).size());
        return comps - 1 > spec_.m - g.edge_count();
    }

    void collect_frontier(const Graph& g, const CanonicalForm& cf, int level,
                          std::vector<std::pair<Graph, CanonicalForm>>& out) {
        if (g.edge_count() == level) {
            out.emplace_back(g, cf);
            return;
        }
        for_each_child(g, cf, [&](const Graph& child, const CanonicalForm& child_cf) {
            collect_frontier(child, child_cf, level, out);
        });
    }

    void grow(const Graph& g, const CanonicalForm& cf) {
        if (g.edge_count() == spec_.m) {
            emit(g);
            return;
        }
        for_each_child(g, cf, [&](const Graph& child, const CanonicalForm& child_cf) {
            grow(child, child_cf);
        });
    }

    template <class F>
    void for_each_child(const Graph& g, const CanonicalForm& parent_cf, F&& recurse) {
        if (prune(g)) return;
        const int n = g.vertex_count();
        const int maxv = spec_.effective_max_vertices();
        std::set<CanonicalForm> seen; // child classes of this parent only
        auto consider = [&](const Graph& child) {
            CanonicalForm cf = canonical_form(child);
            if (!seen.insert(cf).second) return;
            if (accepted(cf, parent_cf)) recurse(child, cf);
        };
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!g.adjacent(i, j)) consider(g.with_edge(i, j));
        if (n + 1 <= maxv) {
            Graph grown = disjoint_union(g, empty_graph<1>(1));
            for (int i = 0; i < n; ++i) consider(grown.with_edge(i, n));
        }
        if (n + 2 <= maxv)
            consider(disjoint_union(g, build_graph(2, {{0, 1}})));
    }

    static bool accepted(const CanonicalForm& child_cf, const CanonicalForm& parent_cf) {
        const Graph canon = from_canonical(child_cf);
        // the edge at the maximal upper-triangle bit position
        int ei = -1, ej = -1;
        for (int j = canon.vertex_count() - 1; j >= 1 && ej < 0; --j)
            for (int i = j - 1; i >= 0; --i)
                if (canon.adjacent(i, j)) {
                    ei = i;
                    ej = j;
                    break;
                }
        Graph reduced = canon.without_edge(ei, ej);
        Bitset<1> live;
        for (int v = 0; v < reduced.vertex_count(); ++v)
            if (reduced.degree(v) > 0) live.set(v);
        reduced = induced_subgraph(reduced, live);
        if (reduced.vertex_count() != parent_cf.bytes[0]) return false;
        return canonical_form(reduced) == parent_cf;
    }
};

} // namespace detail

/// Visits one representative per isomorphism class; returns the class count.
/// With threads > 1 the visit callback must be safe for concurrent calls; the
/// emitted set of classes is identical in both modes, the order only in
/// sequential mode.
inline long enumerate(const EnumSpec& spec, const std::function<void(const Graph&)>& visit,
                      int threads = 1) {
    return detail::Enumerator(spec, visit, threads).run();
}

} // namespace sxl
