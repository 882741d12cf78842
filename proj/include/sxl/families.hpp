#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "sxl/graph.hpp"

namespace sxl {

/// Parametric description of one named graph family (or a pinned fixture).
/// The text syntax understood by parse_family_spec covers K5, P4, C6, C5+,
/// K1,4, K{2,3}, K{2,2,2}, V5, F3, B4, W7, R{2,3}, E4, ext{k=3,m=33} and
/// fixture:G1 .. fixture:D12.
struct FamilySpec {
    enum class Kind {
        complete,
        empty,
        path,
        cycle,
        star,
        complete_bipartite,
        complete_multipartite,
        chorded_cycle,
        fan,        // V_k = K1 v P_{k-1}
        friendship, // F_k = K1 v kK2
        book,       // B_k = K2 v kK1
        wheel,      // W_k = K1 v C_{k-1}
        rst,        // R_{s,t} = K1 v (sK3 u tK1)
        kk_join_indep, // K_k v bK1
        extremal,   // K_k v ((m - C(k,2))/k) K1, given (k, m)
        fixture,
    };

    Kind kind = Kind::complete;
    long a = 0;              // primary parameter (n, k, s, ...)
    long b = 0;              // secondary parameter (t, b, m, ...)
    std::vector<long> parts; // complete_multipartite only
    std::string fixture_name;

    FamilySpec() = default;
    FamilySpec(Kind k, long a_ = 0, long b_ = 0) : kind(k), a(a_), b(b_) {}
};

namespace detail {

template <unsigned W>
BasicGraph<W> path_graph(int n) {
    if (n < 1) throw InvalidParameter("path needs at least one vertex");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return build_graph<W>(n, es);
}

template <unsigned W>
BasicGraph<W> cycle_graph(int n) {
    if (n < 3) throw InvalidParameter("cycle needs at least three vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return build_graph<W>(n, es);
}

} // namespace detail

template <unsigned W = 1>
BasicGraph<W> complete_multipartite(std::span<const long> parts) {
    long n = 0;
    for (long p : parts) {
        if (p < 1) throw InvalidParameter("multipartite part sizes must be positive");
        n += p;
    }
    if (n > BasicGraph<W>::max_vertices)
        throw VertexLimitExceeded("multipartite graph too large");
    std::vector<int> part_of;
    for (size_t k = 0; k < parts.size(); ++k)
        for (long i = 0; i < parts[k]; ++i) part_of.push_back(static_cast<int>(k));
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) es.emplace_back(i, j);
    return build_graph<W>(static_cast<int>(n), es);
}

/// K_k v bK1: clique vertices come first, independents after.
template <unsigned W = 1>
BasicGraph<W> clique_join_independent(int k, int b) {
    if (k < 1 || b < 0) throw InvalidParameter("K_k v bK1 needs k >= 1, b >= 0");
    return join(complete_graph<W>(k), empty_graph<W>(b));
}

/// The conjectured extremal graph K_k v ((m - C(k,2))/k) K1 for the given
/// edge count. DivisibilityError surfaces the implicit integrality condition
/// on m instead of rounding.
template <unsigned W = 1>
BasicGraph<W> extremal_construction(long k, long m) {
    if (k < 1) throw InvalidParameter("extremal construction needs k >= 1");
    const long clique_edges = k * (k - 1) / 2;
    if (m < clique_edges + k)
        throw InvalidParameter("edge count " + std::to_string(m) +
                               " too small for K_" + std::to_string(k) + " join construction");
    if ((m - clique_edges) % k != 0)
        throw DivisibilityError("no integral K_" + std::to_string(k) +
                                " v bK1 construction with m = " + std::to_string(m));
    const long b = (m - clique_edges) / k;
    if (k + b > BasicGraph<W>::max_vertices)
        throw VertexLimitExceeded("construction needs " + std::to_string(k + b) + " vertices");
    return clique_join_independent<W>(static_cast<int>(k), static_cast<int>(b));
}

namespace detail {

// Pinned fixtures. G1/G2 are the two sporadic extremal candidates at m = 11
// and m = 12 (lambda near 3.408 and 3.487; tests pin both). The D fixtures
// are the twelve dangling-vertex component shapes, instantiated with every
// elided leaf run at its minimum nonempty length.
inline Graph fixture_graph(const std::string& name) {
    auto dstar = [](int p, int q) {
        // edge {0,1}, p leaves on 0, q leaves on 1
        std::vector<std::pair<int, int>> es{{0, 1}};
        int v = 2;
        for (int i = 0; i < p; ++i) es.emplace_back(0, v++);
        for (int i = 0; i < q; ++i) es.emplace_back(1, v++);
        return build_graph(2 + p + q, es);
    };
    if (name == "G1")
        return build_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                               {3, 4}, {3, 5}, {6, 2}, {6, 4}, {6, 5}});
    if (name == "G2")
        return build_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                               {3, 4}, {3, 5}, {3, 6}, {7, 2}, {7, 4}, {7, 5}});
    if (name == "D1" || name == "D2") {
        // centers 0,1 (adjacent in D1), t=4 common neighbors, 3 leaves each
        std::vector<std::pair<int, int>> es;
        if (name == "D1") es.emplace_back(0, 1);
        for (int i = 2; i < 6; ++i) {
            es.emplace_back(0, i);
            es.emplace_back(1, i);
        }
        for (int i = 6; i < 9; ++i) es.emplace_back(0, i);
        for (int i = 9; i < 12; ++i) es.emplace_back(1, i);
        return build_graph(12, es);
    }
    if (name == "D3") {
        std::vector<std::pair<int, int>> es{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        for (int i = 4; i < 7; ++i) es.emplace_back(0, i);
        return build_graph(7, es);
    }
    if (name == "D4" || name == "D5") {
        // K4 minus an edge; D4 hangs the leaves on a degree-2 vertex of the
        // diamond, D5 on a degree-3 vertex
        std::vector<std::pair<int, int>> es = (name == "D4")
            ? std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}}
            : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 3}};
        for (int i = 4; i < 7; ++i) es.emplace_back(0, i);
        return build_graph(7, es);
    }
    if (name == "D6" || name == "D7") {
        // K2 v 2K1 (book page pair) resp. C4; 3 leaves on each of 0,1
        std::vector<std::pair<int, int>> es{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
        if (name == "D6") es.emplace_back(0, 1);
        for (int i = 4; i < 7; ++i) es.emplace_back(0, i);
        for (int i = 7; i < 10; ++i) es.emplace_back(1, i);
        return build_graph(10, es);
    }
    if (name == "D8") {
        // triangle {0,1,2}, 3 leaves on 0 and on 1
        std::vector<std::pair<int, int>> es{{0, 1}, {0, 2}, {1, 2}};
        for (int i = 3; i < 6; ++i) es.emplace_back(0, i);
        for (int i = 6; i < 9; ++i) es.emplace_back(1, i);
        return build_graph(9, es);
    }
    if (name == "D9") {
        // triangle {0,1,2}, pendant 3 on 0, 3 leaves on 3
        return build_graph(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {3, 5}, {3, 6}});
    }
    if (name == "D10") {
        // spider: center 2 adjacent to 0 and 1, 3 leaves on each of 0,1
        std::vector<std::pair<int, int>> es{{0, 2}, {1, 2}};
        for (int i = 3; i < 6; ++i) es.emplace_back(0, i);
        for (int i = 6; i < 9; ++i) es.emplace_back(1, i);
        return build_graph(9, es);
    }
    if (name == "D11") return dstar(3, 3);
    if (name == "D12") {
        // K_{2,4} on {0,1}x{2..5} plus 3 leaves on 0
        std::vector<std::pair<int, int>> es;
        for (int i = 2; i < 6; ++i) {
            es.emplace_back(0, i);
            es.emplace_back(1, i);
        }
        for (int i = 6; i < 9; ++i) es.emplace_back(0, i);
        return build_graph(9, es);
    }
    throw InvalidParameter("unknown fixture: " + name);
}

} // namespace detail

/// Materializes a FamilySpec.
inline Graph make(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    auto chk = [](bool ok, const char* msg) {
        if (!ok) throw InvalidParameter(msg);
    };
    switch (spec.kind) {
    case K::complete:
        chk(spec.a >= 0, "K_n needs n >= 0");
        return complete_graph<1>(static_cast<int>(spec.a));
    case K::empty:
        chk(spec.a >= 0, "E_n needs n >= 0");
        return empty_graph<1>(static_cast<int>(spec.a));
    case K::path:
        return detail::path_graph<1>(static_cast<int>(spec.a));
    case K::cycle:
        return detail::cycle_graph<1>(static_cast<int>(spec.a));
    case K::star:
        chk(spec.a >= 1, "star K_{1,s} needs s >= 1");
        return join(complete_graph<1>(1), empty_graph<1>(static_cast<int>(spec.a)));
    case K::complete_bipartite: {
        chk(spec.a >= 1 && spec.b >= 1, "K_{s,t} needs s,t >= 1");
        const long parts[] = {spec.a, spec.b};
        return complete_multipartite<1>(parts);
    }
    case K::complete_multipartite:
        chk(spec.parts.size() >= 2, "multipartite graph needs at least two parts");
        return complete_multipartite<1>(spec.parts);
    case K::chorded_cycle: {
        chk(spec.a >= 4, "C_k^+ needs k >= 4");
        return detail::cycle_graph<1>(static_cast<int>(spec.a)).with_edge(0, 2);
    }
    case K::fan:
        chk(spec.a >= 3, "fan V_k needs k >= 3");
        return join(complete_graph<1>(1), detail::path_graph<1>(static_cast<int>(spec.a) - 1));
    case K::friendship: {
        chk(spec.a >= 1, "friendship F_k needs k >= 1");
        Graph pairs = empty_graph<1>(static_cast<int>(2 * spec.a));
        for (long i = 0; i < spec.a; ++i)
            pairs = pairs.with_edge(static_cast<int>(2 * i), static_cast<int>(2 * i + 1));
        return join(complete_graph<1>(1), pairs);
    }
    case K::book:
        chk(spec.a >= 1, "book B_k needs k >= 1");
        return clique_join_independent<1>(2, static_cast<int>(spec.a));
    case K::wheel:
        chk(spec.a >= 4, "wheel W_k needs k >= 4");
        return join(complete_graph<1>(1), detail::cycle_graph<1>(static_cast<int>(spec.a) - 1));
    case K::rst: {
        chk(spec.a >= 1 && spec.b >= 0, "R_{s,t} needs s >= 1, t >= 0");
        Graph u = empty_graph<1>(0);
        for (long i = 0; i < spec.a; ++i) u = disjoint_union(u, complete_graph<1>(3));
        u = disjoint_union(u, empty_graph<1>(static_cast<int>(spec.b)));
        return join(complete_graph<1>(1), u);
    }
    case K::kk_join_indep:
        return clique_join_independent<1>(static_cast<int>(spec.a), static_cast<int>(spec.b));
    case K::extremal:
        return extremal_construction<1>(spec.a, spec.b);
    case K::fixture:
        return detail::fixture_graph(spec.fixture_name);
    }
    throw InvalidParameter("unhandled family kind");
}

namespace detail {

inline bool parse_long(const std::string& s, size_t& pos, long& out) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    out = std::stol(s.substr(start, pos - start));
    return true;
}

inline std::vector<long> parse_braced_list(const std::string& s, size_t& pos) {
    // expects '{' at pos, returns the comma-separated integers
    std::vector<long> vals;
    if (pos >= s.size() || s[pos] != '{') throw InvalidParameter("expected '{' in: " + s);
    ++pos;
    while (true) {
        long v;
        if (!parse_long(s, pos, v)) throw InvalidParameter("expected integer in: " + s);
        vals.push_back(v);
        if (pos < s.size() && s[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    if (pos >= s.size() || s[pos] != '}') throw InvalidParameter("expected '}' in: " + s);
    ++pos;
    return vals;
}

} // namespace detail

/// Parses the canonical family-spec text syntax.
inline FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec spec;
    using K = FamilySpec::Kind;
    if (text.empty()) throw InvalidParameter("empty family spec");

    if (text.rfind("fixture:", 0) == 0) {
        spec.kind = K::fixture;
        spec.fixture_name = text.substr(8);
        return spec;
    }
    if (text.rfind("ext{", 0) == 0) {
        // parse "ext{k=A,m=B}"
        size_t pos = 4;
        long k = -1, m = -1;
        while (pos < text.size() && text[pos] != '}') {
            char key = text[pos];
            if (pos + 1 >= text.size() || text[pos + 1] != '=')
                throw InvalidParameter("malformed ext spec: " + text);
            pos += 2;
            long v;
            if (!detail::parse_long(text, pos, v))
                throw InvalidParameter("malformed ext spec: " + text);
            if (key == 'k')
                k = v;
            else if (key == 'm')
                m = v;
            else
                throw InvalidParameter("unknown key in ext spec: " + text);
            if (pos < text.size() && text[pos] == ',') ++pos;
        }
        if (pos >= text.size() || text[pos] != '}' || pos + 1 != text.size() || k < 0 || m < 0)
            throw InvalidParameter("malformed ext spec: " + text);
        spec.kind = K::extremal;
        spec.a = k;
        spec.b = m;
        return spec;
    }

    const char head = text[0];
    size_t pos = 1;
    switch (head) {
    case 'K': {
        if (pos < text.size() && text[pos] == '{') {
            spec.parts = detail::parse_braced_list(text, pos);
            if (pos != text.size()) throw InvalidParameter("trailing characters in: " + text);
            if (spec.parts.size() == 2) {
                spec.kind = K::complete_bipartite;
                spec.a = spec.parts[0];
                spec.b = spec.parts[1];
            } else {
                spec.kind = K::complete_multipartite;
            }
            return spec;
        }
        long a;
        if (!detail::parse_long(text, pos, a)) throw InvalidParameter("malformed spec: " + text);
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            long b;
            if (!detail::parse_long(text, pos, b) || pos != text.size())
                throw InvalidParameter("malformed spec: " + text);
            spec.kind = K::complete_bipartite;
            spec.a = a;
            spec.b = b;
            return spec;
        }
        if (pos != text.size()) throw InvalidParameter("trailing characters in: " + text);
        spec.kind = K::complete;
        spec.a = a;
        return spec;
    }
    case 'R': {
        auto parts = detail::parse_braced_list(text, pos);
        if (parts.size() != 2 || pos != text.size())
            throw InvalidParameter("R spec needs {s,t}: " + text);
        spec.kind = K::rst;
        spec.a = parts[0];
        spec.b = parts[1];
        return spec;
    }
    case 'P':
    case 'C':
    case 'V':
    case 'F':
    case 'B':
    case 'W':
    case 'E': {
        long a;
        if (!detail::parse_long(text, pos, a)) throw InvalidParameter("malformed spec: " + text);
        bool chord = false;
        if (pos < text.size() && text[pos] == '+' && head == 'C') {
            chord = true;
            ++pos;
        }
        if (pos != text.size()) throw InvalidParameter("trailing characters in: " + text);
        spec.a = a;
        switch (head) {
        case 'P': spec.kind = K::path; break;
        case 'C': spec.kind = chord ? K::chorded_cycle : K::cycle; break;
        case 'V': spec.kind = K::fan; break;
        case 'F': spec.kind = K::friendship; break;
        case 'B': spec.kind = K::book; break;
        case 'W': spec.kind = K::wheel; break;
        case 'E': spec.kind = K::empty; break;
        }
        return spec;
    }
    default:
        throw InvalidParameter("unrecognized family spec: " + text);
    }
}

inline std::string to_string(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    switch (spec.kind) {
    case K::complete: return "K" + std::to_string(spec.a);
    case K::empty: return "E" + std::to_string(spec.a);
    case K::path: return "P" + std::to_string(spec.a);
    case K::cycle: return "C" + std::to_string(spec.a);
    case K::star: return "K1," + std::to_string(spec.a);
    case K::complete_bipartite:
        return "K" + std::to_string(spec.a) + "," + std::to_string(spec.b);
    case K::complete_multipartite: {
        std::string s = "K{";
        for (size_t i = 0; i < spec.parts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(spec.parts[i]);
        }
        return s + "}";
    }
    case K::chorded_cycle: return "C" + std::to_string(spec.a) + "+";
    case K::fan: return "V" + std::to_string(spec.a);
    case K::friendship: return "F" + std::to_string(spec.a);
    case K::book: return "B" + std::to_string(spec.a);
    case K::wheel: return "W" + std::to_string(spec.a);
    case K::rst: return "R{" + std::to_string(spec.a) + "," + std::to_string(spec.b) + "}";
    case K::kk_join_indep:
        return "ext{k=" + std::to_string(spec.a) + ",m=" +
               std::to_string(spec.a * (spec.a - 1) / 2 + spec.a * spec.b) + "}";
    case K::extremal:
        return "ext{k=" + std::to_string(spec.a) + ",m=" + std::to_string(spec.b) + "}";
    case K::fixture: return "fixture:" + spec.fixture_name;
    }
    return "?";
}

} // namespace sxl
