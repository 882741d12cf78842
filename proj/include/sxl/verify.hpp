#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sxl/enumerate.hpp"
#include "sxl/graph6.hpp"
#include "sxl/patterns.hpp"
#include "sxl/spectral.hpp"

namespace sxl {

// ---------------------------------------------------------------------------
// eigen identity audit

/// Residual of lambda^2 x_{u*} = |U| x_{u*} + sum_{u in U} d_U(u) x_u
///                              + sum_{w in W} d_U(w) x_w
/// at the extremal vertex u* (maximum Perron coordinate, smallest id on
/// ties). The identity is the u* row of A^2 x = lambda^2 x, so the residual
/// is bounded by the eigensolver tolerance.
inline double audit_eigen_identity(const Graph& g) {
    if (!is_connected(g)) throw InvalidParameter("eigen identity audit needs a connected graph");
    const SpectralResult r = spectral_radius(g);
    int ustar = 0;
    for (int v = 1; v < g.vertex_count(); ++v)
        if (r.perron[static_cast<size_t>(v)] > r.perron[static_cast<size_t>(ustar)]) ustar = v;
    const auto part = neighborhood_partition(g, ustar);
    double rhs = part.U.count() * r.perron[static_cast<size_t>(ustar)];
    auto du = [&](int v) { return (g.neighbors(v) & part.U).count(); };
    part.U.for_each([&](int u) { rhs += du(u) * r.perron[static_cast<size_t>(u)]; });
    part.W_set.for_each([&](int w) { rhs += du(w) * r.perron[static_cast<size_t>(w)]; });
    const double lhs = r.lambda * r.lambda * r.perron[static_cast<size_t>(ustar)];
    return std::abs(lhs - rhs);
}

// ---------------------------------------------------------------------------
// eta functionals

/// eta_c(H) = sum_{u in H} (d_H(u) - c) w_u - e(H) on a component graph H
/// with per-vertex weights.
inline double eta_functional(const Graph& h, std::span<const double> w, int c) {
    if (w.size() != static_cast<size_t>(h.vertex_count()))
        throw InvalidParameter("weight vector size mismatch");
    double s = 0.0;
    for (int v = 0; v < h.vertex_count(); ++v)
        s += (h.degree(v) - c) * w[static_cast<size_t>(v)];
    return s - h.edge_count();
}

inline double eta1(const Graph& h, std::span<const double> w) { return eta_functional(h, w, 1); }
inline double eta2(const Graph& h, std::span<const double> w) { return eta_functional(h, w, 2); }

struct EtaComponent {
    enum class Kind { triangle, star, other };
    Bitset<1> vertices; // original vertex ids
    double eta1 = 0.0;
    double eta2 = 0.0;
    Kind kind = Kind::other;
};

struct EtaReport {
    int center = 0;
    std::vector<EtaComponent> components;
};

/// Per-component eta values over the neighborhood of the extremal vertex.
/// Weights default to the Perron ratios x_u / x_{u*} (graph must then be
/// connected); supplied weights must lie in (0, 1] and the vertex of maximum
/// weight (smallest id on ties) plays the role of u*.
inline EtaReport compute_eta(const Graph& g,
                             const std::optional<std::vector<double>>& weights = std::nullopt) {
    std::vector<double> w;
    if (weights) {
        if (weights->size() != static_cast<size_t>(g.vertex_count()))
            throw InvalidParameter("weight vector size mismatch");
        for (double x : *weights)
            if (!(x > 0.0) || x > 1.0)
                throw InvalidWeights("weights must lie in (0, 1]");
        w = *weights;
    } else {
        if (!is_connected(g)) throw InvalidParameter("compute_eta needs a connected graph");
        const SpectralResult r = spectral_radius(g);
        double mx = 0.0;
        for (double x : r.perron) mx = std::max(mx, x);
        w.reserve(r.perron.size());
        for (double x : r.perron) w.push_back(x / mx);
    }
    int ustar = 0;
    for (int v = 1; v < g.vertex_count(); ++v)
        if (w[static_cast<size_t>(v)] > w[static_cast<size_t>(ustar)]) ustar = v;

    EtaReport report;
    report.center = ustar;
    const auto part = neighborhood_partition(g, ustar);
    for (const auto& comp : part.components_of_U) {
        if (comp.count() < 2) continue; // trivial component
        const Graph h = induced_subgraph(g, comp);
        std::vector<double> hw;
        comp.for_each([&](int v) { hw.push_back(w[static_cast<size_t>(v)]); });
        EtaComponent e;
        e.vertices = comp;
        e.eta1 = eta1(h, hw);
        e.eta2 = eta2(h, hw);
        const int hn = h.vertex_count(), hm = h.edge_count();
        int maxdeg = 0;
        for (int v = 0; v < hn; ++v) maxdeg = std::max(maxdeg, h.degree(v));
        if (hn == 3 && hm == 3)
            e.kind = EtaComponent::Kind::triangle;
        else if (hm == hn - 1 && maxdeg == hn - 1)
            e.kind = EtaComponent::Kind::star;
        else
            e.kind = EtaComponent::Kind::other;
        report.components.push_back(std::move(e));
    }
    return report;
}

// ---------------------------------------------------------------------------
// edge rotation

/// G' = G - {v_j v : v in S} + {v_i v : v in S}. Requires nonempty
/// S subset of N(v_j) \ N(v_i) with v_i not in S; preserves the edge count.
inline Graph rotate_edges(const Graph& g, int vi, int vj, const Bitset<1>& s) {
    if (vi < 0 || vj < 0 || vi >= g.vertex_count() || vj >= g.vertex_count() || vi == vj)
        throw InvalidRotation("rotation endpoints out of range");
    if (s.none()) throw InvalidRotation("rotation set is empty");
    if (s.test(vi)) throw InvalidRotation("rotation set contains v_i");
    if (!s.is_subset_of(g.neighbors(vj).minus(g.neighbors(vi))))
        throw InvalidRotation("rotation set must lie in N(v_j) \\ N(v_i)");
    Graph out = g;
    s.for_each([&](int v) { out = out.without_edge(vj, v).with_edge(vi, v); });
    return out;
}

// ---------------------------------------------------------------------------
// Erdos-Gallai bound

/// max{ C(2k+1, 2), C(k, 2) + (n - k) k } for (k+1)K_2-free graphs of order n.
inline long erdos_gallai_bound(long n, long k) {
    if (n < 1 || k < 0) throw InvalidParameter("erdos_gallai_bound needs n >= 1, k >= 0");
    const long a = (2 * k + 1) * (2 * k) / 2;
    const long b = k * (k - 1) / 2 + (n - k) * k;
    return std::max(a, b);
}

// ---------------------------------------------------------------------------
// scan

struct ScanSpec {
    Pattern forbid;
    BoundKind bound;
    int m_min = 1;
    int m_max = 1;
    std::optional<int> predict_k;
    bool report_only = false;
    int max_vertices = 0; // 0: enumeration default (m + 1)
};

struct ScanRow {
    int m = 0;
    long free_count = 0;
    bool has_max = false;
    double max_lambda = 0.0;
    double bound = 0.0;
    double margin = 0.0;
    std::vector<std::string> argmax; // graph6 of canonical labelings, byte-sorted
    bool violation = false;          // report-only rows: argmax exceeds the bound
    bool equality_achieved = false;
    bool extremal_matches_prediction = false;
    bool uniqueness = false;
    bool prediction_integral = false;
    bool prediction_free = false;
    double prediction_bound_gap = 0.0;
};

struct ScanReport {
    std::string forbid;
    std::string bound;
    int m_min = 0;
    int m_max = 0;
    std::optional<int> predict_k;
    bool report_only = false;
    std::vector<ScanRow> rows;
};

namespace detail {

struct ArgmaxAccumulator {
    double max_lambda = -1.0;
    std::vector<std::pair<double, CanonicalForm>> near;
    long free_count = 0;

    void add(double lambda, const Graph& g) {
        ++free_count;
        if (lambda > max_lambda) max_lambda = lambda;
        if (lambda >= max_lambda - 1e-8) {
            near.emplace_back(lambda, canonical_form(g));
            if (near.size() > 64) compact();
        }
    }
    void compact() {
        std::erase_if(near, [&](const auto& p) { return p.first < max_lambda - 1e-8; });
    }
};

} // namespace detail

/// Enumerates connected F-free graphs for each edge count, records the
/// spectral maximum and near-maximal classes (1e-8 window), and checks them
/// against the bound. Equality is certified by isomorphism with the predicted
/// extremal construction, never by closeness alone; without a prediction the
/// equality flag is the bare numeric window and callers apply their own
/// arbiter to the reported classes. In assert mode a bound violation, an
/// equality attained off the prediction, or a non-unique equality class
/// throws BoundViolation carrying a counterexample.
inline ScanReport scan(const ScanSpec& spec, int threads = 1) {
    if (spec.m_min < 1 || spec.m_max < spec.m_min)
        throw InvalidParameter("scan needs 1 <= m_min <= m_max");
    ScanReport report;
    report.forbid = spec.forbid.name;
    report.bound = to_string(spec.bound);
    report.m_min = spec.m_min;
    report.m_max = spec.m_max;
    report.predict_k = spec.predict_k;
    report.report_only = spec.report_only;

    for (int m = spec.m_min; m <= spec.m_max; ++m) {
        ScanRow row;
        row.m = m;
        row.bound = bound_value(spec.bound, m);

        detail::ArgmaxAccumulator acc;
        std::mutex mu;
        EnumSpec es{m, true, spec.max_vertices};
        enumerate(es, [&](const Graph& g) {
            if (contains(g, spec.forbid)) return;
            const double lambda = spectral_radius(g).lambda;
            std::lock_guard<std::mutex> lock(mu);
            acc.add(lambda, g);
        }, threads);
        acc.compact();

        row.free_count = acc.free_count;
        row.has_max = acc.free_count > 0;
        if (row.has_max) {
            row.max_lambda = acc.max_lambda;
            row.margin = row.bound - row.max_lambda;
            row.violation = row.max_lambda > row.bound + 1e-9;
            std::vector<CanonicalForm> forms;
            for (auto& [lambda, cf] : acc.near) forms.push_back(std::move(cf));
            std::sort(forms.begin(), forms.end());
            forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
            for (const auto& f : forms) row.argmax.push_back(write_graph6(from_canonical(f)));
            row.uniqueness = forms.size() == 1;

            if (!spec.report_only && row.max_lambda > row.bound + 1e-9)
                throw BoundViolation("lambda exceeds bound at m = " + std::to_string(m),
                                     row.argmax.back());

            std::optional<CanonicalForm> predicted;
            if (spec.predict_k) {
                const long k = *spec.predict_k;
                const long clique = k * (k - 1) / 2;
                if (m >= clique + k && (m - clique) % k == 0) {
                    const Graph x = extremal_construction<1>(k, m);
                    row.prediction_integral = true;
                    row.prediction_free = is_free(x, spec.forbid);
                    row.prediction_bound_gap = std::abs(spectral_radius(x).lambda - row.bound);
                    predicted = canonical_form(x);
                }
            }
            if (predicted) {
                const bool matches =
                    std::find(forms.begin(), forms.end(), *predicted) != forms.end();
                row.extremal_matches_prediction = matches;
                row.equality_achieved = row.margin <= 1e-8 && matches;
                if (!spec.report_only && row.margin <= 1e-8 && (!matches || forms.size() != 1)) {
                    std::string cx;
                    for (const auto& f : forms)
                        if (f != *predicted) {
                            cx = write_graph6(from_canonical(f));
                            break;
                        }
                    throw BoundViolation("equality class mismatch at m = " + std::to_string(m), cx);
                }
            } else {
                row.equality_achieved = !spec.predict_k && row.margin <= 1e-8;
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

// ---------------------------------------------------------------------------
// R_{s,t} lemma sweep

struct RstRow {
    int s = 0, t = 0;
    long m = 0;
    int n = 0;
    double lambda = 0.0;
    double bound = 0.0;
    double gap = 0.0;
    bool asserted = false; // rows outside the asserted domain are reported only
};

struct RstReport {
    std::vector<RstRow> rows;
    double min_gap = 0.0; // over asserted rows
    long asserted_count = 0;
};

/// Checks lambda(R_{s,t}) < (1 + sqrt(4m - 3)) / 2 for m = 6s + t. The
/// inequality is asserted on the domain the proofs invoke it on: s >= 1,
/// t >= 1 and m >= 8. Outside it the sweep reports instead of asserting:
/// R_{1,0} = K_4 has lambda = 3 above the m = 6 bound, and R_{1,1} (K_4 plus
/// a pendant) has lambda above the m = 7 bound 3, so the lemma's unstated
/// side condition really is the theorems' m >= 8 floor.
inline RstReport check_rst_lemma(int m_max, bool include_unasserted = true) {
    if (m_max < 8 || m_max > 300) throw InvalidParameter("rst sweep needs 8 <= m_max <= 300");
    RstReport report;
    report.min_gap = std::numeric_limits<double>::infinity();
    for (int s = 1; 6 * s <= m_max; ++s) {
        for (int t = 0;; ++t) {
            const long m = 6L * s + t;
            const int n = 1 + 3 * s + t;
            if (m > m_max || n > Graph::max_vertices) break;
            const bool in_domain = t >= 1 && m >= 8;
            if (!in_domain && !include_unasserted) continue;
            const Graph r = make(FamilySpec{FamilySpec::Kind::rst, s, t});
            RstRow row{s, t, m, n, spectral_radius(r).lambda, bound_value(BoundKind::zls(), m),
                       0.0, in_domain};
            row.gap = row.bound - row.lambda;
            if (row.asserted) {
                if (row.gap <= 1e-10)
                    throw BoundViolation("R_{s,t} bound violated at s = " + std::to_string(s) +
                                             ", t = " + std::to_string(t),
                                         write_graph6(r));
                report.min_gap = std::min(report.min_gap, row.gap);
                ++report.asserted_count;
            }
            report.rows.push_back(row);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Bollobas-Nikiforov check

struct BnRow {
    int m = 0;
    long checked = 0;
    double max_excess = 0.0; // max over graphs of lhs - rhs
    std::vector<std::string> equalities;
};

struct BnReport {
    int r = 2;
    bool asserted = false; // the r = 2 case is a theorem, larger r a conjecture
    std::vector<BnRow> rows;
};

/// lambda_1^2 + lambda_2^2 <= 2m(1 - 1/r) over connected K_{r+1}-free graphs
/// of order >= r + 1. Asserted for r = 2 (a violation would refute the
/// confirmed case); report-only for r >= 3.
inline BnReport check_bn(int m_max, int r, int threads = 1) {
    if (m_max < 1 || m_max > 10) throw InvalidParameter("bn check needs 1 <= m_max <= 10");
    if (r < 2) throw InvalidParameter("bn check needs r >= 2");
    BnReport report;
    report.r = r;
    report.asserted = (r == 2);
    const Pattern clique = Pattern::from_family(FamilySpec{FamilySpec::Kind::complete, r + 1});
    for (int m = 1; m <= m_max; ++m) {
        BnRow row;
        row.m = m;
        row.max_excess = -std::numeric_limits<double>::infinity();
        std::mutex mu;
        std::optional<std::string> violation;
        enumerate(EnumSpec{m, true, 0}, [&](const Graph& g) {
            if (g.vertex_count() < r + 1 || contains(g, clique)) return;
            const auto chk = bn_check(g, r);
            std::lock_guard<std::mutex> lock(mu);
            ++row.checked;
            row.max_excess = std::max(row.max_excess, chk.lhs - chk.rhs);
            if (report.asserted && chk.lhs > chk.rhs + 1e-9 && !violation)
                violation = write_graph6(g);
            if (std::abs(chk.lhs - chk.rhs) <= 1e-8)
                row.equalities.push_back(write_graph6(canonical_graph(g)));
        }, threads);
        if (violation)
            throw BoundViolation("Bollobas-Nikiforov violated at m = " + std::to_string(m),
                                 *violation);
        std::sort(row.equalities.begin(), row.equalities.end());
        report.rows.push_back(std::move(row));
    }
    return report;
}

// ---------------------------------------------------------------------------
// rotation lemma property check

struct RotationReport {
    int trials = 0;
    double min_gain = 0.0;
};

/// Random valid rotations with x_i >= x_j on random connected graphs must
/// strictly increase the spectral radius.
inline RotationReport check_rotation_lemma(int trials, unsigned seed = 20240901, int max_n = 12) {
    if (trials < 1) throw InvalidParameter("rotation check needs at least one trial");
    std::mt19937 rng(seed);
    RotationReport report;
    report.min_gain = std::numeric_limits<double>::infinity();
    int done = 0;
    while (done < trials) {
        const int n = std::uniform_int_distribution<int>(3, max_n)(rng);
        // random tree plus a few extra edges keeps the graph connected
        Graph g = empty_graph<1>(n);
        for (int v = 1; v < n; ++v)
            g = g.with_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
        const int extras = std::uniform_int_distribution<int>(0, n)(rng);
        for (int e = 0; e < extras; ++e) {
            const int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
            const int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
            if (a != b) g = g.with_edge(a, b);
        }
        const SpectralResult r = spectral_radius(g);
        // sample an ordered pair with x_i >= x_j and a usable rotation set
        const int vi = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const int vj = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (vi == vj || r.perron[static_cast<size_t>(vi)] < r.perron[static_cast<size_t>(vj)])
            continue;
        Bitset<1> pool = g.neighbors(vj).minus(g.neighbors(vi));
        pool.reset(vi);
        if (pool.none()) continue;
        Bitset<1> s;
        pool.for_each([&](int v) {
            if (std::uniform_int_distribution<int>(0, 1)(rng)) s.set(v);
        });
        if (s.none()) s.set(pool.lowest());
        const Graph rotated = rotate_edges(g, vi, vj, s);
        const double gain = spectral_radius(rotated).lambda - r.lambda;
        if (gain <= 1e-12)
            throw BoundViolation("rotation failed to increase lambda", write_graph6(g));
        report.min_gain = std::min(report.min_gain, gain);
        ++done;
    }
    report.trials = done;
    return report;
}

// ---------------------------------------------------------------------------
// Erdos-Gallai desk check

struct EgRow {
    int n = 0, k = 0;
    long max_edges = 0;
    long bound = 0;
    long equality_classes = 0;
    bool equality_family_ok = false;
};

struct EgReport {
    std::vector<EgRow> rows;
};

/// Exhausts all graphs on n <= max_n labeled vertices per k, confirming the
/// edge bound for (k+1)K_2-free graphs and that every equality graph is
/// K_{2k+1} (padded with isolated vertices) or K_k v (n-k)K_1.
inline EgReport check_erdos_gallai(int max_n = 6, int max_k = 3) {
    if (max_n < 2 || max_n > 7) throw InvalidParameter("eg check needs 2 <= max_n <= 7");
    EgReport report;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> all_pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
        for (int k = 0; k <= max_k; ++k) {
            const long bound = erdos_gallai_bound(n, k);
            long max_edges = 0;
            std::vector<CanonicalForm> equality;
            for (long mask = 0; mask < (1L << all_pairs.size()); ++mask) {
                std::vector<std::pair<int, int>> es;
                for (size_t b = 0; b < all_pairs.size(); ++b)
                    if (mask & (1L << b)) es.push_back(all_pairs[b]);
                const Graph g = build_graph(n, es);
                if (max_matching_size(g) > k) continue;
                const long e = g.edge_count();
                if (e > bound)
                    throw BoundViolation("Erdos-Gallai bound violated", write_graph6(g));
                max_edges = std::max(max_edges, e);
                if (e == bound) {
                    auto cf = canonical_form(g);
                    if (std::find(equality.begin(), equality.end(), cf) == equality.end())
                        equality.push_back(std::move(cf));
                }
            }
            // expected equality family, padded to order n
            std::vector<CanonicalForm> expected;
            if (bound > 0) {
                if (2 * k + 1 <= n && (2L * k + 1) * k == bound) {
                    Graph x = disjoint_union(complete_graph<1>(2 * k + 1),
                                             empty_graph<1>(n - 2 * k - 1));
                    expected.push_back(canonical_form(x));
                }
                if (k <= n && k * (k - 1L) / 2 + (n - k) * static_cast<long>(k) == bound) {
                    Graph x = clique_join_independent<1>(k, n - k);
                    auto cf = canonical_form(x);
                    if (std::find(expected.begin(), expected.end(), cf) == expected.end())
                        expected.push_back(std::move(cf));
                }
            } else {
                expected.push_back(canonical_form(empty_graph<1>(n)));
            }
            std::sort(equality.begin(), equality.end());
            std::sort(expected.begin(), expected.end());
            EgRow row{n, k, max_edges, bound, static_cast<long>(equality.size()),
                      equality == expected};
            report.rows.push_back(row);
        }
    }
    return report;
}

} // namespace sxl
