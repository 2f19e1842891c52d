#pragma once

// Brute-force reference implementations. These exist to check the main path,
// so they share no code with it beyond the matrix type: candidate orders are
// enumerated exhaustively and rows are checked directly.

#include "circone/concave_round.hpp"
#include "circone/tucker.hpp"

namespace circone {

struct OracleBudget {
    int max_cols = 8;      // linear/circular column orders
    int max_vertices = 8;  // circular vertex enumerations
    int max_cells = 14;    // rows+cols for the minimality sweep
};

inline bool brute_c1p(const BinaryMatrix& m, const OracleBudget& budget = {}) {
    if (m.cols() > budget.max_cols) throw TooLarge("brute_c1p column budget exceeded");
    if (m.cols() <= 1) return true;
    std::vector<int> order(static_cast<size_t>(m.cols()));
    std::iota(order.begin(), order.end(), 1);
    do {
        if (ones_consecutive_under(m, order)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

inline bool brute_circ1p(const BinaryMatrix& m, const OracleBudget& budget = {}) {
    if (m.cols() > budget.max_cols + 1) throw TooLarge("brute_circ1p column budget exceeded");
    int l = m.cols();
    if (l <= 3) {
        // every subset of a <=3 circle is an arc
        return true;
    }
    // fix column 1 first and quotient out reflection: order[1] < order[l-1]
    std::vector<int> rest(static_cast<size_t>(l) - 1);
    std::iota(rest.begin(), rest.end(), 2);
    std::vector<int> order(static_cast<size_t>(l));
    order[0] = 1;
    do {
        if (rest.front() > rest.back()) continue;
        std::copy(rest.begin(), rest.end(), order.begin() + 1);
        if (ones_circular_under(m, order)) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

inline bool brute_concave_round(const Graph& g, const OracleBudget& budget = {}) {
    if (g.n() > budget.max_vertices) throw TooLarge("brute_concave_round vertex budget exceeded");
    if (g.n() <= 3) return true;
    BinaryMatrix m = augmented_adjacency(g);
    int n = g.n();
    std::vector<int> rest(static_cast<size_t>(n) - 1);
    std::iota(rest.begin(), rest.end(), 2);
    std::vector<int> order(static_cast<size_t>(n));
    order[0] = 1;
    do {
        if (rest.front() > rest.back()) continue;
        std::copy(rest.begin(), rest.end(), order.begin() + 1);
        if (ones_circular_under(m, order)) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

struct MinimalSubmatrix {
    std::vector<int> rows;
    std::vector<int> cols;
};

// Every minimal forbidden submatrix for the circular-ones property (rows),
// by exhaustive subset search. Tiny instances only.
inline std::vector<MinimalSubmatrix> brute_minimal_forbidden(const BinaryMatrix& m,
                                                             const OracleBudget& budget = {}) {
    int k = m.rows(), l = m.cols();
    if (k + l > budget.max_cells) throw TooLarge("brute_minimal_forbidden size budget exceeded");
    auto fails = [&](unsigned rmask, unsigned cmask) {
        std::vector<char> ra(static_cast<size_t>(k) + 1, 0), ca(static_cast<size_t>(l) + 1, 0);
        std::vector<int> rows, cols;
        for (int i = 1; i <= k; ++i)
            if (rmask & (1u << (i - 1))) rows.push_back(i);
        for (int j = 1; j <= l; ++j)
            if (cmask & (1u << (j - 1))) cols.push_back(j);
        if (cols.empty()) return false;  // no columns: vacuously circular
        BinaryMatrix sub = submatrix(m, Embedding{IndexMap(rows), IndexMap(cols)});
        return !circ1p_test(sub).has_value();
    };
    std::vector<MinimalSubmatrix> out;
    for (unsigned rmask = 1; rmask < (1u << k); ++rmask) {
        for (unsigned cmask = 1; cmask < (1u << l); ++cmask) {
            if (!fails(rmask, cmask)) continue;
            bool minimal = true;
            for (int i = 1; i <= k && minimal; ++i)
                if (rmask & (1u << (i - 1))) minimal = !fails(rmask ^ (1u << (i - 1)), cmask);
            for (int j = 1; j <= l && minimal; ++j)
                if (cmask & (1u << (j - 1))) minimal = !fails(rmask, cmask ^ (1u << (j - 1)));
            if (!minimal) continue;
            MinimalSubmatrix ms;
            for (int i = 1; i <= k; ++i)
                if (rmask & (1u << (i - 1))) ms.rows.push_back(i);
            for (int j = 1; j <= l; ++j)
                if (cmask & (1u << (j - 1))) ms.cols.push_back(j);
            out.push_back(std::move(ms));
        }
    }
    return out;
}

// Graph counterpart: all vertex-minimal non-concave-round induced subgraphs.
inline std::vector<std::vector<int>> brute_minimal_forbidden_graphs(const Graph& g, int max_n = 12) {
    if (g.n() > max_n) throw TooLarge("brute_minimal_forbidden_graphs vertex budget exceeded");
    int n = g.n();
    auto fails = [&](unsigned mask) {
        std::vector<int> verts;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) verts.push_back(v);
        return !is_concave_round(induced_subgraph(g, verts)).has_value();
    };
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!fails(mask)) continue;
        bool minimal = true;
        for (int v = 1; v <= n && minimal; ++v)
            if (mask & (1u << (v - 1))) minimal = !fails(mask ^ (1u << (v - 1)));
        if (!minimal) continue;
        std::vector<int> verts;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) verts.push_back(v);
        out.push_back(std::move(verts));
    }
    return out;
}

}  // namespace circone
