#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "tdc/errors.hpp"

namespace tdc {

// Immutable simple undirected graph on dense vertex ids 0..n-1.
// Adjacency lists are kept sorted; parallel edges are collapsed on build
// (reductions may produce them), self-loops are rejected.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
        if (n < 0) throw precondition_error("negative vertex count");
        Graph g;
        g.adj_.assign(static_cast<std::size_t>(n), {});
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw unknown_vertex_error("edge endpoint out of range");
            if (u == v) throw precondition_error("self-loop rejected");
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        g.edge_count_ = 0;
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            g.edge_count_ += nb.size();
        }
        g.edge_count_ /= 2;
        return g;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count()) throw unknown_vertex_error("unknown vertex id");
    }

private:
    std::vector<std::vector<int>> adj_;
    long long edge_count_ = 0;
};

// G^2: same vertices, edges between distinct vertices at distance <= 2.
inline Graph square(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    std::vector<int> mark(n, -1);
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (v > u && mark[v] != u) {
                mark[v] = u;
                edges.emplace_back(u, v);
            }
            for (int w : g.neighbors(v)) {
                if (w > u && mark[w] != u) {
                    mark[w] = u;
                    edges.emplace_back(u, w);
                }
            }
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

// Neighborhood of v in square(g): everything in conflict with v, never v itself.
inline std::vector<int> conflicts(const Graph& g, int v) {
    g.check_vertex(v);
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> out;
    seen[v] = 1;
    for (int u : g.neighbors(v)) {
        if (!seen[u]) {
            seen[u] = 1;
            out.push_back(u);
        }
        for (int w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Exact girth by BFS from every vertex; nullopt when acyclic.
inline std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    // Non-tree edge closes a cycle through the BFS root.
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

struct DegreeStats {
    int max = 0;
    int min = 0;
    std::vector<int> degrees;
};

inline DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    const int n = g.vertex_count();
    s.degrees.resize(n);
    for (int v = 0; v < n; ++v) s.degrees[v] = g.degree(v);
    if (n == 0) return s;
    s.max = *std::max_element(s.degrees.begin(), s.degrees.end());
    s.min = *std::min_element(s.degrees.begin(), s.degrees.end());
    return s;
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

// Number of edges of g inside the vertex set S.
inline long long induced_edge_count(const Graph& g, const std::vector<int>& S) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : S) {
        g.check_vertex(v);
        in[v] = 1;
    }
    long long e = 0;
    for (int v : S)
        for (int w : g.neighbors(v))
            if (in[w] && w > v) ++e;
    return e;
}

}  // namespace tdc
