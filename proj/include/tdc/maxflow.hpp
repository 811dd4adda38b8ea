#pragma once

#include <queue>
#include <vector>

namespace tdc {

// Dinic max-flow, templated on the capacity type so density computations can
// run on arbitrary-precision integers after clearing denominators.
template <class Cap>
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

    int node_count() const { return static_cast<int>(head_.size()); }

    // Adds a directed edge u->v; the paired reverse edge starts at capacity 0.
    void add_edge(int u, int v, Cap cap) {
        edges_.push_back({v, head_[u], std::move(cap)});
        head_[u] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({u, head_[v], Cap(0)});
        head_[v] = static_cast<int>(edges_.size()) - 1;
    }

    // Undirected edge with capacity cap in both directions.
    void add_undirected_edge(int u, int v, const Cap& cap) {
        edges_.push_back({v, head_[u], cap});
        head_[u] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({u, head_[v], cap});
        head_[v] = static_cast<int>(edges_.size()) - 1;
    }

    Cap max_flow(int s, int t) {
        source_ = s;
        Cap inf(1);
        for (int e = head_[s]; e >= 0; e = edges_[e].next) inf += edges_[e].cap;
        Cap total(0);
        while (bfs(s, t)) {
            it_ = head_;
            while (true) {
                Cap pushed = dfs(s, t, inf);
                if (pushed == Cap(0)) break;
                total += pushed;
            }
        }
        return total;
    }

    // Vertices reachable from the source in the residual graph after max_flow;
    // this is the source side of a minimum cut.
    std::vector<char> min_cut_source_side() const {
        std::vector<char> seen(node_count(), 0);
        std::queue<int> q;
        seen[source_] = 1;
        q.push(source_);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[u]; e >= 0; e = edges_[e].next) {
                if (edges_[e].cap > Cap(0) && !seen[edges_[e].to]) {
                    seen[edges_[e].to] = 1;
                    q.push(edges_[e].to);
                }
            }
        }
        return seen;
    }

private:
    struct Edge {
        int to;
        int next;
        Cap cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[u]; e >= 0; e = edges_[e].next)
                if (edges_[e].cap > Cap(0) && level_[edges_[e].to] < 0) {
                    level_[edges_[e].to] = level_[u] + 1;
                    q.push(edges_[e].to);
                }
        }
        return level_[t] >= 0;
    }

    Cap dfs(int u, int t, Cap limit) {
        if (u == t) return limit;
        for (int& e = it_[u]; e >= 0; e = edges_[e].next) {
            Edge& ed = edges_[e];
            if (ed.cap > Cap(0) && level_[ed.to] == level_[u] + 1) {
                Cap pushed = dfs(ed.to, t, limit < ed.cap ? limit : ed.cap);
                if (pushed > Cap(0)) {
                    ed.cap -= pushed;
                    edges_[e ^ 1].cap += pushed;
                    return pushed;
                }
            }
        }
        level_[u] = -1;
        return Cap(0);
    }

    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> it_;
    std::vector<Edge> edges_;
    int source_ = 0;
};

}  // namespace tdc
