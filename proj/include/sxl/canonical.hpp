#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <vector>

#include "sxl/graph.hpp"

namespace sxl {

/// Labeling-invariant encoding: vertex count byte followed by the packed
/// upper-triangle bits (column-major, MSB first) of the canonically labeled
/// graph. Two graphs have equal forms iff they are isomorphic.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes <=> b.bytes;
    }
};

namespace detail {

// Canonical labeling search: equitable refinement, then branch by
// individualizing vertices of the first cell that is neither a singleton nor
// "uniform". A uniform cell (identical neighborhoods outside the cell,
// disjoint equal cliques inside) admits every clique-preserving permutation
// as a graph automorphism, so it is laid out without branching. The minimum
// leaf bit string over all branches is the canonical form.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    std::vector<std::uint8_t> run() {
        const size_t nbits = static_cast<size_t>(n_) * (n_ - 1) / 2;
        best_.assign((nbits + 7) / 8, 0);
        have_best_ = false;
        std::vector<std::vector<int>> cells;
        if (n_ > 0) {
            cells.emplace_back();
            for (int v = 0; v < n_; ++v) cells.back().push_back(v);
        }
        search(std::move(cells));
        return best_;
    }

private:
    const Graph& g_;
    int n_;
    std::vector<std::uint8_t> best_;
    bool have_best_ = false;

    void refine(std::vector<std::vector<int>>& cells) const {
        std::vector<int> color(static_cast<size_t>(n_), 0);
        bool changed = true;
        while (changed) {
            for (size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) color[static_cast<size_t>(v)] = static_cast<int>(c);
            changed = false;
            std::vector<std::vector<int>> next;
            next.reserve(cells.size());
            std::vector<int> sig;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                // split by sorted neighbor-color signature
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) {
                    sig.clear();
                    g_.neighbors(v).for_each(
                        [&](int u) { sig.push_back(color[static_cast<size_t>(u)]); });
                    std::sort(sig.begin(), sig.end());
                    keyed.emplace_back(sig, v);
                }
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                size_t i = 0;
                while (i < keyed.size()) {
                    size_t j = i;
                    while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
                    next.emplace_back();
                    for (size_t k = i; k < j; ++k) next.back().push_back(keyed[k].second);
                    std::sort(next.back().begin(), next.back().end());
                    if (j - i != cell.size()) changed = true;
                    i = j;
                }
            }
            cells = std::move(next);
        }
    }

    // Identical rows outside the cell and a disjoint union of equal cliques
    // inside: every clique-respecting permutation of the cell is an
    // automorphism fixing the rest of the graph.
    bool uniform_cell(const std::vector<int>& cell) const {
        Bitset<1> mask;
        for (int v : cell) mask.set(v);
        const Bitset<1> out0 = g_.neighbors(cell[0]).minus(mask);
        for (int v : cell)
            if (g_.neighbors(v).minus(mask) != out0) return false;
        const int d = (g_.neighbors(cell[0]) & mask).count();
        for (int v : cell) {
            Bitset<1> closed_v = g_.neighbors(v) & mask;
            if (closed_v.count() != d) return false;
            closed_v.set(v);
            bool ok = true;
            (g_.neighbors(v) & mask).for_each([&](int w) {
                Bitset<1> closed_w = g_.neighbors(w) & mask;
                closed_w.set(w);
                if (closed_w != closed_v) ok = false;
            });
            if (!ok) return false;
        }
        return true;
    }

    // Clique-contiguous layout; the leaf string does not depend on which one
    // we pick, so ascending id is fine.
    static void layout_uniform(const Graph& g, const std::vector<int>& cell,
                               std::vector<int>& out) {
        Bitset<1> mask, done;
        for (int v : cell) mask.set(v);
        for (int v : cell) {
            if (done.test(v)) continue;
            out.push_back(v);
            done.set(v);
            (g.neighbors(v) & mask).for_each([&](int w) {
                if (!done.test(w)) {
                    out.push_back(w);
                    done.set(w);
                }
            });
        }
    }

    void search(std::vector<std::vector<int>> cells) {
        refine(cells);
        int branch = -1;
        for (size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() < 2) continue;
            if (!uniform_cell(cells[c])) {
                branch = static_cast<int>(c);
                break;
            }
        }
        if (branch < 0) {
            leaf(cells);
            return;
        }
        for (int v : cells[static_cast<size_t>(branch)]) {
            std::vector<std::vector<int>> child;
            child.reserve(cells.size() + 1);
            for (size_t c = 0; c < cells.size(); ++c) {
                if (static_cast<int>(c) != branch) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                child.emplace_back();
                for (int u : cells[c])
                    if (u != v) child.back().push_back(u);
            }
            search(std::move(child));
        }
    }

    void leaf(const std::vector<std::vector<int>>& cells) {
        std::vector<int> order;
        order.reserve(static_cast<size_t>(n_));
        for (const auto& cell : cells) {
            if (cell.size() == 1)
                order.push_back(cell[0]);
            else
                layout_uniform(g_, cell, order);
        }
        std::vector<std::uint8_t> bits(best_.size(), 0);
        size_t pos = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i) {
                if (g_.adjacent(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]))
                    bits[pos >> 3] |= static_cast<std::uint8_t>(0x80u >> (pos & 7));
                ++pos;
            }
        if (!have_best_ || bits < best_) {
            best_ = std::move(bits);
            have_best_ = true;
        }
    }
};

} // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
    CanonicalForm f;
    f.bytes.push_back(static_cast<std::uint8_t>(g.vertex_count()));
    auto bits = detail::CanonicalSearch(g).run();
    f.bytes.insert(f.bytes.end(), bits.begin(), bits.end());
    return f;
}

/// Rebuilds the graph a canonical form encodes.
inline Graph from_canonical(const CanonicalForm& f) {
    const int n = f.bytes.empty() ? 0 : f.bytes[0];
    std::vector<std::pair<int, int>> es;
    size_t pos = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (f.bytes[1 + (pos >> 3)] & (0x80u >> (pos & 7))) es.emplace_back(i, j);
            ++pos;
        }
    return build_graph(n, es);
}

/// The canonically labeled copy of g.
inline Graph canonical_graph(const Graph& g) { return from_canonical(canonical_form(g)); }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace sxl
