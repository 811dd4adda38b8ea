#pragma once

#include <utility>
#include <vector>

#include "tdc/density.hpp"
#include "tdc/graph.hpp"
#include "tdc/rational.hpp"

namespace tdc {

// The parameter triple driving every classification: c, eps and
// K = max{Delta + c, ceil(16 c^2 / eps^2)}. K is the color budget and the
// massive threshold is sqrt(K), always compared as d^2 >= K.
struct Params {
    int c = 3;
    Rational eps;
    long long K = 0;
    long long eps_term = 0;  // ceil(16 c^2 / eps^2)
    int delta = 0;           // max degree the params were computed for
};

inline Rational color_demand(int c, const Rational& eps) {
    return Rational(16) * c * c / (eps * eps);
}

inline Params compute_params_for_delta(int delta, int c, const Rational& eps) {
    validate_params(c, eps);
    if (delta < 0) throw precondition_error("negative maximum degree");
    Params p;
    p.c = c;
    p.eps = eps;
    p.delta = delta;
    BigInt term = ceil_rational(color_demand(c, eps));
    if (term > BigInt(1) << 62) throw too_large_error("16c^2/eps^2 exceeds supported range");
    p.eps_term = static_cast<long long>(term);
    p.K = std::max<long long>(static_cast<long long>(delta) + c, p.eps_term);
    // eps <= 4/(c(c+1)) forces 16c^2/eps^2 >= c^4(c+1)^2 >= 4c^2.
    if (p.K < 4LL * c * c) throw precondition_error("K below 4c^2; parameters out of range");
    return p;
}

inline Params compute_params(const Graph& g, int c, const Rational& eps) {
    return compute_params_for_delta(max_degree(g), c, eps);
}

// Partition of vertices. The tags are disjoint; "type one" in the charge
// rules means massive OR type_one (see is_type_one below).
enum class VertexClass { small, type_two, type_one, massive };

struct Classification {
    std::vector<VertexClass> tag;
    long long K = 0;
    long long n_massive = 0;
    long long n_type_one = 0;  // non-massive type one
    long long n_type_two = 0;

    bool is_type_one(int v) const {
        return tag[v] == VertexClass::massive || tag[v] == VertexClass::type_one;
    }
    bool is_massive(int v) const { return tag[v] == VertexClass::massive; }
    bool is_type_two(int v) const { return tag[v] == VertexClass::type_two; }
};

inline bool degree_is_massive(int degree, long long K) {
    return static_cast<long long>(degree) * degree >= K;
}

inline Classification classify(const Graph& g, const Params& p) {
    const int n = g.vertex_count();
    Classification cl;
    cl.K = p.K;
    cl.tag.assign(n, VertexClass::small);
    for (int v = 0; v < n; ++v)
        if (degree_is_massive(g.degree(v), p.K)) cl.tag[v] = VertexClass::massive;
    for (int v = 0; v < n; ++v) {
        if (cl.tag[v] == VertexClass::massive) continue;
        if (g.degree(v) < 3) continue;  // small
        bool massive_nbr = false;
        for (int w : g.neighbors(v))
            if (cl.tag[w] == VertexClass::massive) {
                massive_nbr = true;
                break;
            }
        cl.tag[v] = massive_nbr ? VertexClass::type_one : VertexClass::type_two;
    }
    for (int v = 0; v < n; ++v) {
        switch (cl.tag[v]) {
            case VertexClass::massive: ++cl.n_massive; break;
            case VertexClass::type_one: ++cl.n_type_one; break;
            case VertexClass::type_two: ++cl.n_type_two; break;
            case VertexClass::small: break;
        }
    }
    return cl;
}

// The induction measure (n1 + n2, e): count of type-one plus type-two
// vertices, then edge count, ordered lexicographically.
inline std::pair<long long, long long> l_measure(const Graph& g, const Params& p) {
    auto cl = classify(g, p);
    return {cl.n_massive + cl.n_type_one + cl.n_type_two, g.edge_count()};
}

}  // namespace tdc
