#pragma once

// Simple undirected graphs with vertices 1..n, plus the handful of graph
// primitives the recognition pipeline needs: complements, induced subgraphs,
// bipartiteness, chordless odd cycles, augmented adjacency matrices.

#include <algorithm>
#include <deque>
#include <vector>

#include "circone/core.hpp"

namespace circone {

class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<size_t>(n) + 1) {
        if (n < 0) throw DimensionError("negative vertex count");
    }

    int n() const { return static_cast<int>(adj_.size()) - (adj_.empty() ? 0 : 1); }

    void add_edge(int u, int v) {
        if (u == v) throw InvalidParameter("loops are not allowed");
        if (u < 1 || v < 1 || u > n() || v > n()) throw InvalidParameter("vertex out of range");
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
        sorted_ = false;
    }

    void finalize() {
        for (auto& a : adj_) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
        sorted_ = true;
    }

    const std::vector<int>& neighbors(int u) const { return adj_[static_cast<size_t>(u)]; }

    bool adjacent(int u, int v) const {
        const auto& a = adj_[static_cast<size_t>(u)];
        if (sorted_) return std::binary_search(a.begin(), a.end(), v);
        return std::find(a.begin(), a.end(), v) != a.end();
    }

    int degree(int u) const { return static_cast<int>(adj_[static_cast<size_t>(u)].size()); }

    long long edge_count() const {
        long long s = 0;
        for (size_t u = 1; u < adj_.size(); ++u) s += static_cast<long long>(adj_[u].size());
        return s / 2;
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        g.finalize();
        return g;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 1; u <= n(); ++u)
            for (int v : neighbors(u))
                if (u < v) out.push_back({u, v});
        return out;
    }

  private:
    std::vector<std::vector<int>> adj_{1};
    bool sorted_ = true;
};

inline Graph complement_graph(const Graph& g) {
    Graph h(g.n());
    for (int u = 1; u <= g.n(); ++u)
        for (int v = u + 1; v <= g.n(); ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    h.finalize();
    return h;
}

// Induced subgraph on S; vertices are relabeled 1..|S| following S's order.
// mapping_out (optional) receives new->old labels.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& s,
                              std::vector<int>* mapping_out = nullptr) {
    std::vector<int> verts = s;
    for (int v : verts)
        if (v < 1 || v > g.n()) throw InvalidParameter("induced_subgraph: vertex out of range");
    std::vector<int> sorted_check = verts;
    std::sort(sorted_check.begin(), sorted_check.end());
    if (std::adjacent_find(sorted_check.begin(), sorted_check.end()) != sorted_check.end())
        throw InvalidParameter("induced_subgraph: duplicate vertex");
    Graph h(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) h.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    h.finalize();
    if (mapping_out) *mapping_out = verts;
    return h;
}

// Two-coloring; returns the color vector (0/1 per vertex) or nullopt.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.n()) + 1, -1);
    for (int s = 1; s <= g.n(); ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbors(u)) {
                if (color[static_cast<size_t>(v)] == -1) {
                    color[static_cast<size_t>(v)] = color[static_cast<size_t>(u)] ^ 1;
                    q.push_back(v);
                } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

inline bool is_cobipartite(const Graph& g) { return is_bipartite(complement_graph(g)); }

// Shortest odd cycle, as a vertex list; nullopt iff bipartite. Globally
// shortest odd cycles are chordless: a chord would split off a shorter one.
inline std::optional<std::vector<int>> chordless_odd_cycle(const Graph& g) {
    int n = g.n();
    int best_len = -1;
    std::vector<int> best;
    std::vector<int> dist(static_cast<size_t>(n) + 1), par(static_cast<size_t>(n) + 1);
    for (int s = 1; s <= n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<size_t>(s)] = 0;
        par[static_cast<size_t>(s)] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (best_len != -1 && 2 * dist[static_cast<size_t>(u)] + 1 >= best_len) break;
            for (int v : g.neighbors(u)) {
                if (dist[static_cast<size_t>(v)] == -1) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    par[static_cast<size_t>(v)] = u;
                    q.push_back(v);
                } else if (dist[static_cast<size_t>(v)] == dist[static_cast<size_t>(u)] && u < v) {
                    // odd closed walk through s; extract the simple cycle part
                    std::vector<int> pu, pv;
                    for (int x = u; x != 0; x = par[static_cast<size_t>(x)]) pu.push_back(x);
                    for (int x = v; x != 0; x = par[static_cast<size_t>(x)]) pv.push_back(x);
                    // strip common tail (paths from u,v back to s)
                    while (pu.size() >= 2 && pv.size() >= 2 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
                        pu.pop_back();
                        pv.pop_back();
                    }
                    std::vector<int> cyc(pu.begin(), pu.end());
                    for (size_t i = pv.size() - 1; i + 1 >= 2; --i) cyc.push_back(pv[i - 1]);
                    int len = static_cast<int>(cyc.size());
                    if (len % 2 == 1 && (best_len == -1 || len < best_len)) {
                        best_len = len;
                        best = cyc;
                    }
                }
            }
        }
    }
    if (best_len == -1) return std::nullopt;
    // The walk-derived cycle can in rare cases carry a chord when the two BFS
    // branches touch; shrink across chords until chordless, keeping oddness.
    auto chord = [&](const std::vector<int>& c) -> std::optional<std::pair<int, int>> {
        int len = static_cast<int>(c.size());
        for (int i = 0; i < len; ++i)
            for (int j = i + 2; j < len; ++j) {
                if (i == 0 && j == len - 1) continue;
                if (g.adjacent(c[static_cast<size_t>(i)], c[static_cast<size_t>(j)])) return std::make_pair(i, j);
            }
        return std::nullopt;
    };
    while (auto ch = chord(best)) {
        auto [i, j] = *ch;
        std::vector<int> a(best.begin() + i, best.begin() + j + 1);  // i..j + chord
        std::vector<int> b(best.begin() + j, best.end());            // j..end,0..i + chord
        b.insert(b.end(), best.begin(), best.begin() + i + 1);
        best = (a.size() % 2 == 1) ? a : b;
    }
    return best;
}

inline bool is_chordless_cycle(const Graph& g, const std::vector<int>& cyc) {
    int len = static_cast<int>(cyc.size());
    if (len < 3) return false;
    std::vector<int> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.adjacent(cyc[static_cast<size_t>(i)], cyc[static_cast<size_t>(j)]) != consecutive) return false;
        }
    return true;
}

// M(G): the augmented adjacency matrix, m_ij = 1 iff i = j or ij is an edge.
inline BinaryMatrix augmented_adjacency(const Graph& g) {
    int n = g.n();
    std::vector<std::vector<int>> rows(static_cast<size_t>(n));
    for (int u = 1; u <= n; ++u) {
        auto& r = rows[static_cast<size_t>(u) - 1];
        r = g.neighbors(u);
        r.insert(std::lower_bound(r.begin(), r.end(), u), u);
    }
    return BinaryMatrix::from_rows(n, n, std::move(rows));
}

}  // namespace circone
