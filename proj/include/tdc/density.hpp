#pragma once

#include <utility>
#include <vector>

#include "tdc/graph.hpp"
#include "tdc/maxflow.hpp"
#include "tdc/rational.hpp"

namespace tdc {

struct DensityResult {
    Rational value;           // max over nonempty S of e(G[S]) / |S|
    std::vector<int> witness; // a set achieving it
};

struct PotentialResult {
    Rational min_value;       // min over nonempty S of rho(S)
    std::vector<int> witness;
    int c = 0;
    Rational eps;
};

// Threshold of the main density hypothesis: 4 - 4/(c+1) - eps.
inline Rational mad_threshold(int c, const Rational& eps) {
    return Rational(4) - Rational(4, c + 1) - eps;
}

// Per-vertex coefficient of the potential: alpha = 2 - 2/(c+1) - eps/2,
// so that rho(S) = alpha * |S| - e(G[S]) and rho > 0 on all nonempty S
// is equivalent to mad < 4 - 4/(c+1) - eps.
inline Rational potential_coefficient(int c, const Rational& eps) {
    return Rational(2) - Rational(2, c + 1) - eps / 2;
}

// Validates the (c, eps) ranges shared by density, classify, reduce and color.
// The boundary eps = 4/(c(c+1)) is accepted: every downstream bound still
// holds there and the c = 6 corner (eps = 2/21) is exactly that boundary.
inline void validate_params(int c, const Rational& eps) {
    if (c < 3) throw precondition_error("c must be at least 3");
    if (!(eps > 0) || eps > Rational(4, static_cast<long long>(c) * (c + 1)))
        throw precondition_error("eps must lie in (0, 4/(c(c+1))]");
}

namespace detail {

// Feasibility test behind both density operations. For a guess value a/b it
// computes min over all S (including the empty set) of a*|S| - b*e(G[S]),
// scaled so all capacities are integers, and the minimizing set. With
// force >= 0 the vertex `force` is pinned inside S.
//
// Network (capacities scaled by b): source->v with b*m, v->sink with
// b*m + 2a - b*d(v), both directions of every edge with b. A cut keeping S on
// the source side costs n*b*m + 2*(a|S| - b*e(S)).
struct SubsetScan {
    BigInt scaled_min;  // min of a|S| - b e(S)
    std::vector<int> arg;
};

inline SubsetScan min_subset_form(const Graph& g, const BigInt& a, const BigInt& b, int force) {
    const int n = g.vertex_count();
    const BigInt m(g.edge_count());
    const int source = n, sink = n + 1;
    MaxFlow<BigInt> net(n + 2);
    BigInt huge = b * m * n + 2 * a * n + 1;
    for (int v = 0; v < n; ++v) {
        net.add_edge(source, v, v == force ? huge : b * m);
        net.add_edge(v, sink, b * m + 2 * a - b * g.degree(v));
        for (int w : g.neighbors(v))
            if (w > v) net.add_undirected_edge(v, w, b);
    }
    BigInt cut = net.max_flow(source, sink);
    SubsetScan out;
    out.scaled_min = (cut - BigInt(n) * b * m) / 2;
    auto side = net.min_cut_source_side();
    for (int v = 0; v < n; ++v)
        if (side[v]) out.arg.push_back(v);
    return out;
}

inline Rational exact_density(const Graph& g, const std::vector<int>& S) {
    return make_rational(BigInt(induced_edge_count(g, S)), BigInt(S.size()));
}

}  // namespace detail

// Exact densest subgraph via binary search with a max-flow feasibility test.
// Distinct achievable densities e/s, e'/s' with s, s' <= n differ by at least
// 1/(n(n-1)), so the search snaps onto the exact optimum once the interval is
// narrower than that.
inline DensityResult densest_subgraph(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw precondition_error("densest_subgraph on empty graph");
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    if (g.edge_count() == 0) return {Rational(0), all};

    Rational lo(g.edge_count(), n);  // achievable: the whole graph
    std::vector<int> witness = all;
    Rational hi(max_degree(g), 2);   // e(S)/|S| <= avg degree / 2 <= max degree / 2
    const Rational sep(1, static_cast<long long>(n) * (n - 1));
    while (hi - lo >= sep) {
        Rational mid = (lo + hi) / 2;
        auto scan = detail::min_subset_form(g, numer(mid), denom(mid), -1);
        if (scan.scaled_min < 0) {
            // Witness has density strictly above mid; restart from its exact value.
            lo = detail::exact_density(g, scan.arg);
            witness = std::move(scan.arg);
        } else {
            hi = mid;
        }
    }
    return {lo, witness};
}

inline Rational mad(const Graph& g) {
    return densest_subgraph(g).value * 2;
}

// Minimum of rho(S) = alpha|S| - e(G[S]) over nonempty S, exactly. One free
// scan finds any negative minimizer; otherwise each vertex is pinned in turn
// (the flow formulation allows S to be empty, which rho does not).
inline PotentialResult min_potential(const Graph& g, int c, const Rational& eps) {
    validate_params(c, eps);
    const int n = g.vertex_count();
    if (n == 0) throw precondition_error("min_potential on empty graph");
    const Rational alpha = potential_coefficient(c, eps);
    const BigInt a = numer(alpha), b = denom(alpha);

    PotentialResult out;
    out.c = c;
    out.eps = eps;
    auto free_scan = detail::min_subset_form(g, a, b, -1);
    if (free_scan.scaled_min < 0) {
        out.min_value = make_rational(free_scan.scaled_min, b);
        out.witness = std::move(free_scan.arg);
        return out;
    }
    bool have = false;
    BigInt best;
    for (int v = 0; v < n; ++v) {
        auto scan = detail::min_subset_form(g, a, b, v);
        if (!have || scan.scaled_min < best) {
            have = true;
            best = scan.scaled_min;
            out.witness = std::move(scan.arg);
        }
    }
    out.min_value = make_rational(best, b);
    return out;
}

inline bool check_mad_bound(const Graph& g, int c, const Rational& eps) {
    validate_params(c, eps);
    if (g.vertex_count() == 0) throw precondition_error("check_mad_bound on empty graph");
    return mad(g) < mad_threshold(c, eps);
}

// Exhaustive oracles. Deliberately independent of the flow machinery: they
// enumerate every nonempty subset and are the reference the solver is tested
// against at desk scale.
inline DensityResult brute_density(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw precondition_error("brute_density on empty graph");
    if (n > 20) throw too_large_error("brute_density limited to n <= 20");
    auto edges = g.edges();
    // best e/s so far; compare e*s' > e'*s in integers
    long long best_e = 0, best_s = 1;
    unsigned best_mask = 1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        long long e = 0;
        for (auto [u, v] : edges)
            if ((mask >> u & 1) && (mask >> v & 1)) ++e;
        long long s = __builtin_popcount(mask);
        if (e * best_s > best_e * s) {
            best_e = e;
            best_s = s;
            best_mask = mask;
        }
    }
    DensityResult out;
    out.value = make_rational(BigInt(best_e), BigInt(best_s));
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1) out.witness.push_back(v);
    return out;
}

inline PotentialResult brute_min_potential(const Graph& g, int c, const Rational& eps) {
    validate_params(c, eps);
    const int n = g.vertex_count();
    if (n == 0) throw precondition_error("brute_min_potential on empty graph");
    if (n > 20) throw too_large_error("brute_min_potential limited to n <= 20");
    const Rational alpha = potential_coefficient(c, eps);
    const BigInt p = numer(alpha), q = denom(alpha);
    auto edges = g.edges();
    bool have = false;
    BigInt best;  // scaled by q: p*|S| - q*e(S)
    unsigned best_mask = 1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        long long e = 0;
        for (auto [u, v] : edges)
            if ((mask >> u & 1) && (mask >> v & 1)) ++e;
        BigInt val = p * __builtin_popcount(mask) - q * e;
        if (!have || val < best) {
            have = true;
            best = val;
            best_mask = mask;
        }
    }
    PotentialResult out;
    out.c = c;
    out.eps = eps;
    out.min_value = make_rational(best, q);
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1) out.witness.push_back(v);
    return out;
}

}  // namespace tdc
