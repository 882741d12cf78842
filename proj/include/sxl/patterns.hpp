#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sxl/families.hpp"
#include "sxl/graph.hpp"

namespace sxl {

/// A forbidden subgraph: either a named family member or an explicit graph.
/// Explicit patterns may not contain isolated vertices.
struct Pattern {
    std::optional<FamilySpec> family;
    Graph graph;
    std::string name;

    static Pattern from_family(const FamilySpec& spec) {
        Pattern p;
        p.family = spec;
        p.graph = make(spec);
        p.name = to_string(spec);
        return p;
    }

    static Pattern from_text(const std::string& text) {
        return from_family(parse_family_spec(text));
    }

    static Pattern from_graph(const Graph& g, std::string name = "explicit") {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0)
                throw InvalidPattern("explicit pattern has an isolated vertex");
        Pattern p;
        p.graph = g;
        p.name = std::move(name);
        return p;
    }
};

/// Injective embedding certificate: pattern vertex i maps to host vertex
/// mapping[i], every pattern edge to a host edge.
struct Witness {
    std::vector<int> mapping;
};

namespace detail {

inline bool witness_ok(const Graph& host, const Graph& pattern, const std::vector<int>& map) {
    if (map.size() != static_cast<size_t>(pattern.vertex_count())) return false;
    Bitset<1> used;
    for (int v : map) {
        if (v < 0 || v >= host.vertex_count() || used.test(v)) return false;
        used.set(v);
    }
    for (auto [a, b] : pattern.edges())
        if (!host.adjacent(map[a], map[b])) return false;
    return true;
}

inline void check_witness(const Graph& host, const Graph& pattern, const std::vector<int>& map) {
    if (!witness_ok(host, pattern, map))
        throw std::logic_error("internal error: detector produced an unsound witness");
}

// Pattern vertex order for backtracking: start at the highest degree, then
// always extend along pattern edges where possible (descending degree,
// smallest id on ties).
inline std::vector<int> matching_order(const Graph& p) {
    const int n = p.vertex_count();
    std::vector<int> order;
    Bitset<1> placed;
    while (static_cast<int>(order.size()) < n) {
        int pick = -1;
        bool pick_adjacent = false;
        for (int v = 0; v < n; ++v) {
            if (placed.test(v)) continue;
            const bool adj = p.neighbors(v).intersects(placed);
            if (pick < 0 || (adj && !pick_adjacent) ||
                (adj == pick_adjacent && p.degree(v) > p.degree(pick)))
                pick = v, pick_adjacent = adj;
        }
        order.push_back(pick);
        placed.set(pick);
    }
    return order;
}

inline bool embed(const Graph& host, const Graph& pat, const std::vector<int>& order,
                  size_t level, std::vector<int>& image, Bitset<1>& used) {
    if (level == order.size()) return true;
    const int u = order[level];
    Bitset<1> candidates;
    bool constrained = false;
    pat.neighbors(u).for_each([&](int w) {
        if (image[w] < 0) return;
        const auto& row = host.neighbors(image[w]);
        candidates = constrained ? (candidates & row) : row;
        constrained = true;
    });
    if (!constrained) candidates = host.vertex_mask();
    candidates = candidates.minus(used);
    bool found = false;
    candidates.for_each([&](int v) {
        if (found || host.degree(v) < pat.degree(u)) return;
        image[u] = v;
        used.set(v);
        if (embed(host, pat, order, level + 1, image, used)) {
            found = true;
            return;
        }
        used.reset(v);
        image[u] = -1;
    });
    return found;
}

inline std::optional<Witness> contains_generic(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    const auto order = matching_order(pattern);
    std::vector<int> image(static_cast<size_t>(pattern.vertex_count()), -1);
    Bitset<1> used;
    if (!embed(host, pattern, order, 0, image, used)) return std::nullopt;
    check_witness(host, pattern, image);
    return Witness{image};
}

// Simple path on `target` vertices, early exit; prunes a branch when the
// vertices reachable from its head cannot complete the path.
inline bool path_dfs(const Graph& g, std::vector<int>& path, Bitset<1>& visited, int target) {
    if (static_cast<int>(path.size()) == target) return true;
    const int head = path.back();
    bool found = false;
    g.neighbors(head).minus(visited).for_each([&](int w) {
        if (found) return;
        Bitset<1> reach;
        reach.set(w);
        Bitset<1> frontier = reach;
        while (frontier.any()) {
            Bitset<1> next;
            frontier.for_each([&](int x) { next = next | g.neighbors(x); });
            frontier = next.minus(reach).minus(visited);
            reach = reach | frontier;
        }
        if (static_cast<int>(path.size()) + reach.count() < target) return;
        visited.set(w);
        path.push_back(w);
        if (path_dfs(g, path, visited, target)) {
            found = true;
            return;
        }
        path.pop_back();
        visited.reset(w);
    });
    return found;
}

inline std::optional<std::vector<int>> find_path(const Graph& g, int target) {
    if (target < 1) throw InvalidParameter("path target must be positive");
    if (target > g.vertex_count()) return std::nullopt;
    for (int start = 0; start < g.vertex_count(); ++start) {
        std::vector<int> path{start};
        Bitset<1> visited;
        visited.set(start);
        if (path_dfs(g, path, visited, target)) return path;
    }
    return std::nullopt;
}

// Exact maximum matching by include/exclude branching on the highest-degree
// live vertex; a greedy start plus the floor(live/2) bound keep dense inputs
// tame. `goal` >= 0 allows early exit once that size is reached.
struct MatchingSearch {
    const Graph& g;
    std::vector<std::pair<int, int>> best;
    int goal; // -1: exact maximum

    explicit MatchingSearch(const Graph& graph, int goal_size = -1) : g(graph), goal(goal_size) {}

    void run() {
        Bitset<1> alive = g.vertex_mask();
        std::vector<std::pair<int, int>> cur;
        // greedy lower bound
        Bitset<1> free = alive;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!free.test(v)) continue;
            const int u = (g.neighbors(v) & free).lowest();
            if (u >= 0) {
                best.emplace_back(v, u);
                free.reset(v);
                free.reset(u);
            }
        }
        if (done()) return;
        branch(alive, cur);
    }

    bool done() const { return goal >= 0 && static_cast<int>(best.size()) >= goal; }

    void branch(Bitset<1> alive, std::vector<std::pair<int, int>>& cur) {
        if (done()) return;
        int v = -1, vd = 0;
        int live_nonisolated = 0;
        alive.for_each([&](int u) {
            const int d = (g.neighbors(u) & alive).count();
            if (d > 0) ++live_nonisolated;
            if (d > vd) {
                v = u;
                vd = d;
            }
        });
        if (v < 0) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if (static_cast<int>(cur.size()) + live_nonisolated / 2 <= static_cast<int>(best.size()))
            return;
        Bitset<1> nbrs = g.neighbors(v) & alive;
        nbrs.for_each([&](int u) {
            if (done()) return;
            Bitset<1> next = alive;
            next.reset(v);
            next.reset(u);
            cur.emplace_back(std::min(u, v), std::max(u, v));
            if (cur.size() > best.size()) best = cur;
            branch(next, cur);
            cur.pop_back();
        });
        if (done()) return;
        Bitset<1> next = alive;
        next.reset(v);
        branch(next, cur);
    }
};

} // namespace detail

/// Size of a maximum matching (exact).
inline int max_matching_size(const Graph& g) {
    detail::MatchingSearch s(g);
    s.run();
    return static_cast<int>(s.best.size());
}

/// A maximum matching as an edge list.
inline std::vector<std::pair<int, int>> maximum_matching(const Graph& g) {
    detail::MatchingSearch s(g);
    s.run();
    return s.best;
}

/// Maximum number of vertices on a simple path. Exact DFS, host capped at 32
/// vertices (the detectors only ever need it on neighborhood graphs).
inline int longest_path_vertices(const Graph& g) {
    if (g.vertex_count() > 32)
        throw SizeLimitExceeded("longest path search capped at 32 vertices");
    int best = 0;
    for (int t = g.vertex_count(); t >= 1; --t) {
        if (detail::find_path(g, t)) {
            best = t;
            break;
        }
    }
    return best;
}

/// Fan detector: V_k sits at v iff G[N(v)] contains a path on k-1 vertices.
inline std::optional<Witness> has_fan(const Graph& g, int k) {
    if (k < 3) throw InvalidParameter("fan V_k needs k >= 3");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < k - 1) continue;
        std::vector<int> nbrs;
        g.neighbors(v).for_each([&](int u) { nbrs.push_back(u); });
        const Graph h = induced_subgraph(g, g.neighbors(v));
        auto path = detail::find_path(h, k - 1);
        if (!path) continue;
        std::vector<int> map;
        map.push_back(v); // apex is pattern vertex 0
        for (int u : *path) map.push_back(nbrs[static_cast<size_t>(u)]);
        detail::check_witness(g, make(FamilySpec{FamilySpec::Kind::fan, k}), map);
        return Witness{map};
    }
    return std::nullopt;
}

/// Friendship detector: F_k sits at v iff G[N(v)] has a matching of size k.
inline std::optional<Witness> has_friendship(const Graph& g, int k) {
    if (k < 1) throw InvalidParameter("friendship F_k needs k >= 1");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2 * k) continue;
        std::vector<int> nbrs;
        g.neighbors(v).for_each([&](int u) { nbrs.push_back(u); });
        const Graph h = induced_subgraph(g, g.neighbors(v));
        detail::MatchingSearch search(h, k);
        search.run();
        if (static_cast<int>(search.best.size()) < k) continue;
        std::vector<int> map;
        map.push_back(v); // hub is pattern vertex 0
        for (int i = 0; i < k; ++i) {
            map.push_back(nbrs[static_cast<size_t>(search.best[i].first)]);
            map.push_back(nbrs[static_cast<size_t>(search.best[i].second)]);
        }
        detail::check_witness(g, make(FamilySpec{FamilySpec::Kind::friendship, k}), map);
        return Witness{map};
    }
    return std::nullopt;
}

/// Book detector: B_k is present iff some edge uv has k common neighbors.
inline std::optional<Witness> has_book(const Graph& g, int k) {
    if (k < 1) throw InvalidParameter("book B_k needs k >= 1");
    for (int u = 0; u < g.vertex_count(); ++u) {
        bool found = false;
        std::vector<int> map;
        g.neighbors(u).for_each([&](int v) {
            if (found || v < u) return;
            const Bitset<1> common = g.neighbors(u) & g.neighbors(v);
            if (common.count() < k) return;
            map = {u, v};
            common.for_each([&](int w) {
                if (static_cast<int>(map.size()) < k + 2) map.push_back(w);
            });
            found = true;
        });
        if (found) {
            detail::check_witness(g, make(FamilySpec{FamilySpec::Kind::book, k}), map);
            return Witness{map};
        }
    }
    return std::nullopt;
}

/// Subgraph containment (not necessarily induced). Fan, friendship and book
/// patterns dispatch to their neighborhood detectors; in debug builds the
/// generic backtracker cross-checks them.
inline std::optional<Witness> contains(const Graph& host, const Pattern& p) {
    if (p.graph.edge_count() < 1) throw InvalidPattern("pattern must have at least one edge");
    std::optional<Witness> result;
    bool dispatched = false;
    if (p.family) {
        using K = FamilySpec::Kind;
        switch (p.family->kind) {
        case K::fan:
            result = has_fan(host, static_cast<int>(p.family->a));
            dispatched = true;
            break;
        case K::friendship:
            result = has_friendship(host, static_cast<int>(p.family->a));
            dispatched = true;
            break;
        case K::book:
            result = has_book(host, static_cast<int>(p.family->a));
            dispatched = true;
            break;
        default:
            break;
        }
    }
    if (!dispatched) result = detail::contains_generic(host, p.graph);
#ifndef NDEBUG
    else {
        const auto generic = detail::contains_generic(host, p.graph);
        if (generic.has_value() != result.has_value())
            throw std::logic_error("internal error: specialized detector disagrees with generic");
    }
#endif
    if (result) detail::check_witness(host, p.graph, result->mapping);
    return result;
}

inline bool is_free(const Graph& host, const Pattern& p) { return !contains(host, p); }

} // namespace sxl
