#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "sxl/graph.hpp"

namespace sxl {

/// Spectral radius plus the Perron vector that certifies it. The vector is
/// normalized to max entry 1; for a disconnected graph it is supported on the
/// component attaining the maximum and zero elsewhere. On return the residual
/// |A x - lambda x|_inf is at most 1e-12 * max(1, lambda).
struct SpectralResult {
    double lambda = 0.0;
    std::vector<double> perron;
    double residual = 0.0;
    long iterations = 0;
};

/// All adjacency eigenvalues, sorted descending.
struct Spectrum {
    std::vector<double> eigenvalues;
};

/// Closed-form bound selector.
///   nosal          sqrt(m)
///   nikiforov (r)  sqrt(2m(1 - 1/r))
///   zls            (1 + sqrt(4m - 3)) / 2
///   f3             1 + sqrt(m - 2)
///   fk (k)         (k - 1 + sqrt(4m - k^2 + 1)) / 2
///   wheel_even     sqrt(4m / 3)
struct BoundKind {
    enum class Kind { nosal, nikiforov, zls, f3, fk, wheel_even };
    Kind kind = Kind::nosal;
    int param = 0;

    static BoundKind nosal() { return {Kind::nosal, 0}; }
    static BoundKind nikiforov(int r) { return {Kind::nikiforov, r}; }
    static BoundKind zls() { return {Kind::zls, 0}; }
    static BoundKind f3() { return {Kind::f3, 0}; }
    static BoundKind fk(int k) { return {Kind::fk, k}; }
    static BoundKind wheel_even() { return {Kind::wheel_even, 0}; }
};

inline double bound_value(const BoundKind& b, long m) {
    if (m < 1) throw InvalidParameter("bound needs m >= 1");
    switch (b.kind) {
    case BoundKind::Kind::nosal:
        return std::sqrt(static_cast<double>(m));
    case BoundKind::Kind::nikiforov:
        if (b.param < 2) throw InvalidParameter("nikiforov bound needs r >= 2");
        return std::sqrt(2.0 * static_cast<double>(m) * (1.0 - 1.0 / b.param));
    case BoundKind::Kind::zls:
        return (1.0 + std::sqrt(4.0 * static_cast<double>(m) - 3.0)) / 2.0;
    case BoundKind::Kind::f3:
        if (m < 2) throw InvalidParameter("f3 bound needs m >= 2");
        return 1.0 + std::sqrt(static_cast<double>(m) - 2.0);
    case BoundKind::Kind::fk: {
        if (b.param < 2) throw InvalidParameter("fk bound needs k >= 2");
        const double disc = 4.0 * static_cast<double>(m) -
                            static_cast<double>(b.param) * b.param + 1.0;
        if (disc < 0) throw InvalidParameter("fk bound undefined: 4m < k^2 - 1");
        return (b.param - 1 + std::sqrt(disc)) / 2.0;
    }
    case BoundKind::Kind::wheel_even:
        return std::sqrt(4.0 * static_cast<double>(m) / 3.0);
    }
    throw InvalidParameter("unhandled bound kind");
}

inline std::string to_string(const BoundKind& b) {
    switch (b.kind) {
    case BoundKind::Kind::nosal: return "nosal";
    case BoundKind::Kind::nikiforov: return "nikiforov:" + std::to_string(b.param);
    case BoundKind::Kind::zls: return "zls";
    case BoundKind::Kind::f3: return "f3";
    case BoundKind::Kind::fk: return "fk:" + std::to_string(b.param);
    case BoundKind::Kind::wheel_even: return "wheel-even";
    }
    return "?";
}

inline BoundKind parse_bound(const std::string& text) {
    if (text == "nosal") return BoundKind::nosal();
    if (text == "zls") return BoundKind::zls();
    if (text == "f3") return BoundKind::f3();
    if (text == "wheel-even") return BoundKind::wheel_even();
    if (text.rfind("nikiforov:", 0) == 0) return BoundKind::nikiforov(std::stoi(text.substr(10)));
    if (text.rfind("fk:", 0) == 0) return BoundKind::fk(std::stoi(text.substr(3)));
    throw InvalidParameter("unknown bound: " + text);
}

namespace detail {

constexpr long kMaxPowerIterations = 1000000;

// Power iteration on A + I restricted to one component. The shift keeps the
// Perron eigenvalue strictly dominant on bipartite components; the all-ones
// start has positive overlap with the Perron vector. Arithmetic order is
// fixed so results are reproducible per platform.
template <unsigned W>
void component_power(const BasicGraph<W>& g, const Bitset<W>& comp,
                     std::vector<double>& x, double& lambda, double& residual,
                     long& iterations) {
    std::vector<int> verts;
    comp.for_each([&](int v) { verts.push_back(v); });
    for (int v : verts) x[v] = 1.0;
    if (verts.size() == 1) {
        lambda = 0.0;
        residual = 0.0;
        return;
    }
    std::vector<double> ax(x.size(), 0.0);
    while (true) {
        for (int v : verts) {
            double s = 0.0;
            g.neighbors(v).for_each([&](int u) { s += x[u]; });
            ax[v] = s;
        }
        double num = 0.0, den = 0.0;
        for (int v : verts) {
            num += x[v] * ax[v];
            den += x[v] * x[v];
        }
        lambda = num / den;
        double res = 0.0;
        for (int v : verts) res = std::max(res, std::abs(ax[v] - lambda * x[v]));
        residual = res;
        if (res <= 1e-12 * std::max(1.0, lambda)) return;
        if (++iterations > kMaxPowerIterations)
            throw ConvergenceFailure("power iteration exceeded " +
                                     std::to_string(kMaxPowerIterations) + " iterations");
        double mx = 0.0;
        for (int v : verts) {
            x[v] = ax[v] + x[v]; // (A + I) x
            mx = std::max(mx, x[v]);
        }
        for (int v : verts) x[v] /= mx;
    }
}

} // namespace detail

/// Largest adjacency eigenvalue with its Perron vector. Disconnected graphs
/// are solved per component and the winner (ties to the earlier component)
/// is reported.
template <unsigned W>
SpectralResult spectral_radius(const BasicGraph<W>& g) {
    const int n = g.vertex_count();
    if (n < 1) throw InvalidParameter("spectral radius needs at least one vertex");
    SpectralResult best;
    best.lambda = -1.0;
    long total_iterations = 0;
    for (const auto& comp : components(g)) {
        std::vector<double> x(static_cast<size_t>(n), 0.0);
        double lambda = 0.0, residual = 0.0;
        detail::component_power(g, comp, x, lambda, residual, total_iterations);
        if (lambda > best.lambda) {
            best.lambda = lambda;
            best.perron = std::move(x);
            best.residual = residual;
        }
    }
    best.iterations = total_iterations;
    return best;
}

/// Full spectrum by cyclic Jacobi sweeps on the dense adjacency matrix;
/// rotations run until every off-diagonal entry is below 1e-12.
template <unsigned W>
Spectrum full_spectrum(const BasicGraph<W>& g) {
    const int n = g.vertex_count();
    if (n < 1) throw InvalidParameter("spectrum needs at least one vertex");
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        g.neighbors(i).for_each([&](int j) { a[static_cast<size_t>(i) * n + j] = 1.0; });

    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(p, q)));
        if (off < 1e-12) {
            Spectrum s;
            s.eigenvalues.resize(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) s.eigenvalues[static_cast<size_t>(i)] = at(i, i);
            std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
            return s;
        }
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = at(p, i), aqi = at(q, i);
                    at(p, i) = c * api - s * aqi;
                    at(q, i) = s * api + c * aqi;
                }
            }
    }
    throw ConvergenceFailure("jacobi sweeps did not converge");
}

/// Evaluates lambda_1^2 + lambda_2^2 against 2m(1 - 1/r).
struct BnCheckResult {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

template <unsigned W>
BnCheckResult bn_check(const BasicGraph<W>& g, int r) {
    if (r < 2) throw InvalidParameter("bn check needs r >= 2");
    if (g.vertex_count() < r + 1)
        throw InvalidParameter("bn check needs order at least r + 1");
    const Spectrum s = full_spectrum(g);
    BnCheckResult out;
    out.lhs = s.eigenvalues[0] * s.eigenvalues[0] + s.eigenvalues[1] * s.eigenvalues[1];
    out.rhs = 2.0 * g.edge_count() * (1.0 - 1.0 / r);
    out.holds = out.lhs <= out.rhs + 1e-9;
    return out;
}

} // namespace sxl
