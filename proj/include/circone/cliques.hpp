#pragma once

// Maximal-clique enumeration (Bron-Kerbosch with pivoting), clique-matrices,
// and the clique-matrix route to proper Helly circular-arc recognition.

#include "circone/circ_rows.hpp"
#include "circone/graph.hpp"

namespace circone {

inline void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                          std::vector<std::vector<int>>& out, size_t guard) {
    if (p.empty() && x.empty()) {
        if (out.size() >= guard) throw TooLarge("maximal clique enumeration exceeded its guard");
        out.push_back(r);
        return;
    }
    int pivot = 0, best = -1;
    for (int u : p)
        if (g.degree(u) > best) { best = g.degree(u); pivot = u; }
    for (int u : x)
        if (g.degree(u) > best) { best = g.degree(u); pivot = u; }
    std::vector<int> ext;
    for (int v : p)
        if (!g.adjacent(pivot, v)) ext.push_back(v);
    for (int v : ext) {
        std::vector<int> np, nx;
        for (int u : p)
            if (g.adjacent(u, v)) np.push_back(u);
        for (int u : x)
            if (g.adjacent(u, v)) nx.push_back(u);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(np), std::move(nx), out, guard);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

inline std::vector<std::vector<int>> maximal_cliques(const Graph& g, size_t guard = 100000) {
    std::vector<std::vector<int>> out;
    std::vector<int> r, p, x;
    for (int v = 1; v <= g.n(); ++v) p.push_back(v);
    if (g.n() == 0) return out;
    bron_kerbosch(g, r, std::move(p), std::move(x), out, guard);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Q(G): maximal cliques (rows, sorted for determinism) versus vertices.
inline BinaryMatrix clique_matrix(const Graph& g, size_t guard = 100000) {
    auto cliques = maximal_cliques(g, guard);
    int nrows = static_cast<int>(cliques.size());
    return BinaryMatrix::from_rows(nrows, g.n(), std::move(cliques));
}

// Proper Helly circular-arc <=> Q(G) has the circular-ones property for rows.
inline bool is_proper_helly_ca(const Graph& g, size_t guard = 100000) {
    return circ1p_test(clique_matrix(g, guard)).has_value();
}

}  // namespace circone
