#pragma once

// Tucker families M_I(k)..M_V, the consecutive-ones test, and extraction of a
// Tucker submatrix (as an exact embedding) from any matrix that fails it.

#include "circone/core.hpp"
#include "circone/pqtree.hpp"

namespace circone {

enum class TuckerFamily { MI, MII, MIII, MIV, MV };

inline const char* family_name(TuckerFamily f) {
    switch (f) {
        case TuckerFamily::MI: return "MI";
        case TuckerFamily::MII: return "MII";
        case TuckerFamily::MIII: return "MIII";
        case TuckerFamily::MIV: return "MIV";
        case TuckerFamily::MV: return "MV";
    }
    return "?";
}

// The exact Tucker matrices. M_II(k) is k x k; M_III(k) is k x (k+1).
inline BinaryMatrix tucker_matrix(TuckerFamily f, int k = 4) {
    switch (f) {
        case TuckerFamily::MI: {
            if (k < 3) throw InvalidParameter("M_I needs k >= 3");
            std::vector<std::vector<int>> rows(static_cast<size_t>(k));
            for (int i = 1; i < k; ++i) rows[static_cast<size_t>(i) - 1] = {i, i + 1};
            rows[static_cast<size_t>(k) - 1] = {1, k};
            return BinaryMatrix::from_rows(k, k, std::move(rows));
        }
        case TuckerFamily::MII: {
            if (k < 4) throw InvalidParameter("M_II needs k >= 4");
            std::vector<std::vector<int>> rows(static_cast<size_t>(k));
            for (int i = 1; i <= k - 2; ++i) rows[static_cast<size_t>(i) - 1] = {i, i + 1};
            for (int j = 1; j <= k - 2; ++j) rows[static_cast<size_t>(k) - 2].push_back(j);
            rows[static_cast<size_t>(k) - 2].push_back(k);
            for (int j = 2; j <= k; ++j) rows[static_cast<size_t>(k) - 1].push_back(j);
            return BinaryMatrix::from_rows(k, k, std::move(rows));
        }
        case TuckerFamily::MIII: {
            if (k < 3) throw InvalidParameter("M_III needs k >= 3");
            std::vector<std::vector<int>> rows(static_cast<size_t>(k));
            for (int i = 1; i <= k - 1; ++i) rows[static_cast<size_t>(i) - 1] = {i, i + 1};
            for (int j = 2; j <= k - 1; ++j) rows[static_cast<size_t>(k) - 1].push_back(j);
            rows[static_cast<size_t>(k) - 1].push_back(k + 1);
            return BinaryMatrix::from_rows(k, k + 1, std::move(rows));
        }
        case TuckerFamily::MIV:
            if (k != 4) throw InvalidParameter("M_IV has exactly 4 rows");
            return BinaryMatrix::from_rows(4, 6, {{1, 2}, {3, 4}, {5, 6}, {2, 4, 6}});
        case TuckerFamily::MV:
            if (k != 4) throw InvalidParameter("M_V has exactly 4 rows");
            return BinaryMatrix::from_rows(4, 5, {{1, 2}, {1, 2, 3, 4}, {3, 4}, {1, 4, 5}});
    }
    throw InvalidParameter("unknown Tucker family");
}

inline bool ones_consecutive_under(const BinaryMatrix& m, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != m.cols()) return false;
    std::vector<int> pos(static_cast<size_t>(m.cols()) + 1, 0);
    for (int p = 0; p < static_cast<int>(order.size()); ++p) pos[static_cast<size_t>(order[static_cast<size_t>(p)])] = p;
    for (int i = 1; i <= m.rows(); ++i) {
        const auto& r = m.row(i);
        if (r.size() <= 1) continue;
        int lo = m.cols(), hi = -1;
        for (int j : r) {
            lo = std::min(lo, pos[static_cast<size_t>(j)]);
            hi = std::max(hi, pos[static_cast<size_t>(j)]);
        }
        if (hi - lo + 1 != static_cast<int>(r.size())) return false;
    }
    return true;
}

inline bool ones_circular_under(const BinaryMatrix& m, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != m.cols()) return false;
    int l = m.cols();
    std::vector<int> pos(static_cast<size_t>(l) + 1, 0);
    for (int p = 0; p < l; ++p) pos[static_cast<size_t>(order[static_cast<size_t>(p)])] = p;
    std::vector<char> in(static_cast<size_t>(l), 0);
    for (int i = 1; i <= m.rows(); ++i) {
        const auto& r = m.row(i);
        if (static_cast<int>(r.size()) >= l - 1 || r.size() <= 1) continue;  // always an arc
        std::fill(in.begin(), in.end(), 0);
        for (int j : r) in[static_cast<size_t>(pos[static_cast<size_t>(j)])] = 1;
        int boundaries = 0;
        for (int p = 0; p < l; ++p)
            if (in[static_cast<size_t>(p)] && !in[static_cast<size_t>((p + 1) % l)]) ++boundaries;
        if (boundaries != 1) return false;
    }
    return true;
}

// Consecutive-ones test over a row/column-alive mask (1-indexed).
inline bool c1p_holds_masked(const BinaryMatrix& m, const std::vector<char>& row_alive,
                             const std::vector<char>& col_alive) {
    std::vector<int> col_id(static_cast<size_t>(m.cols()) + 1, 0);
    int ncols = 0;
    for (int j = 1; j <= m.cols(); ++j)
        if (col_alive[static_cast<size_t>(j)]) col_id[static_cast<size_t>(j)] = ++ncols;
    PQTree tree(ncols);
    std::vector<int> want;
    for (int i = 1; i <= m.rows(); ++i) {
        if (!row_alive[static_cast<size_t>(i)]) continue;
        want.clear();
        for (int j : m.row(i))
            if (col_alive[static_cast<size_t>(j)]) want.push_back(col_id[static_cast<size_t>(j)]);
        if (want.size() <= 1) continue;
        if (!tree.reduce(want)) return false;
    }
    return true;
}

// On YES, a column order making every row's ones consecutive.
inline std::optional<std::vector<int>> c1p_test(const BinaryMatrix& m) {
    PQTree tree(m.cols());
    for (int i = 1; i <= m.rows(); ++i) {
        if (m.row(i).size() <= 1) continue;
        if (!tree.reduce(m.row(i))) return std::nullopt;
    }
    auto order = tree.frontier();
    return order;
}

struct TuckerWitness {
    TuckerFamily family;
    int k;  // row count of the found Tucker matrix
    Embedding embedding;
};

namespace detail {

// Exact structural matchers. Each returns maps (rp, cp) into `t` with
// submatrix(t, {rp, cp}) == tucker_matrix(...), or nullopt.

inline std::optional<std::pair<IndexMap, IndexMap>> match_with(const BinaryMatrix& t,
                                                               const BinaryMatrix& target,
                                                               std::vector<int> rp, std::vector<int> cp) {
    Embedding e{IndexMap(std::move(rp)), IndexMap(std::move(cp))};
    if (!e.row_map.injective() || !e.col_map.injective()) return std::nullopt;
    if (!e.row_map.within(t.rows()) || !e.col_map.within(t.cols())) return std::nullopt;
    if (submatrix(t, e) != target) return std::nullopt;
    return std::make_pair(e.row_map, e.col_map);
}

inline std::optional<std::pair<IndexMap, IndexMap>> match_mi(const BinaryMatrix& t) {
    int k = t.rows();
    if (k < 3 || t.cols() != k) return std::nullopt;
    std::vector<std::vector<int>> col_rows(static_cast<size_t>(k) + 1);
    for (int i = 1; i <= k; ++i) {
        if (t.row(i).size() != 2) return std::nullopt;
        for (int j : t.row(i)) col_rows[static_cast<size_t>(j)].push_back(i);
    }
    for (int j = 1; j <= k; ++j)
        if (col_rows[static_cast<size_t>(j)].size() != 2) return std::nullopt;
    // rows are edges over columns; walk the (unique, if any) Hamiltonian cycle
    std::vector<int> cols{1};
    std::vector<char> row_used(static_cast<size_t>(k) + 1, 0), col_used(static_cast<size_t>(k) + 1, 0);
    std::vector<int> rows;
    col_used[1] = 1;
    int cur = 1;
    for (int step = 0; step < k; ++step) {
        int pick_row = 0, nxt = 0;
        for (int r : col_rows[static_cast<size_t>(cur)]) {
            if (row_used[static_cast<size_t>(r)]) continue;
            int other = t.row(r)[0] == cur ? t.row(r)[1] : t.row(r)[0];
            if (step < k - 1 ? !col_used[static_cast<size_t>(other)] : other == 1) {
                pick_row = r;
                nxt = other;
                break;
            }
        }
        if (!pick_row) return std::nullopt;
        row_used[static_cast<size_t>(pick_row)] = 1;
        rows.push_back(pick_row);
        if (step < k - 1) {
            col_used[static_cast<size_t>(nxt)] = 1;
            cols.push_back(nxt);
            cur = nxt;
        }
    }
    return match_with(t, tucker_matrix(TuckerFamily::MI, k), rows, cols);
}

inline std::optional<std::pair<IndexMap, IndexMap>> match_mii(const BinaryMatrix& t) {
    int k = t.rows();
    if (k < 4 || t.cols() != k) return std::nullopt;
    std::vector<int> heavy, light;
    for (int i = 1; i <= k; ++i) {
        if (static_cast<int>(t.row(i).size()) == k - 1) heavy.push_back(i);
        else if (t.row(i).size() == 2) light.push_back(i);
        else return std::nullopt;
    }
    if (heavy.size() != 2 || static_cast<int>(light.size()) != k - 2) return std::nullopt;
    auto target = tucker_matrix(TuckerFamily::MII, k);
    for (int ori = 0; ori < 2; ++ori) {
        int rk1 = heavy[static_cast<size_t>(ori)], rk = heavy[static_cast<size_t>(1 - ori)];
        // column 1 is the unique column in row k-1 but not row k
        int c1 = 0;
        for (int j : t.row(rk1))
            if (!t.at(rk, j)) { c1 = j; break; }
        if (!c1) continue;
        std::vector<int> cols{c1}, rows;
        std::vector<char> used(static_cast<size_t>(k) + 1, 0);
        int cur = c1;
        bool ok = true;
        for (int step = 0; step < k - 2 && ok; ++step) {
            int pick = 0;
            for (int r : light)
                if (!used[static_cast<size_t>(r)] && t.at(r, cur)) { pick = r; break; }
            if (!pick) { ok = false; break; }
            used[static_cast<size_t>(pick)] = 1;
            rows.push_back(pick);
            cur = t.row(pick)[0] == cur ? t.row(pick)[1] : t.row(pick)[0];
            cols.push_back(cur);
        }
        if (!ok) continue;
        // remaining column is column k (in both heavy rows, in no light row)
        std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
        for (int j : cols) seen[static_cast<size_t>(j)] = 1;
        int ck = 0;
        for (int j = 1; j <= k; ++j)
            if (!seen[static_cast<size_t>(j)]) ck = j;
        cols.push_back(ck);
        rows.push_back(rk1);
        rows.push_back(rk);
        if (auto r = match_with(t, target, rows, cols)) return r;
    }
    return std::nullopt;
}

inline std::optional<std::pair<IndexMap, IndexMap>> match_miii(const BinaryMatrix& t) {
    int k = t.rows();
    if (k < 3 || t.cols() != k + 1) return std::nullopt;
    auto target = tucker_matrix(TuckerFamily::MIII, k);
    if (k == 3) {
        // rows are {hub, leaf_i}; the hub column meets all three rows
        auto cnt = t.column_ones_counts();
        int hub = 0;
        for (int j = 1; j <= 4; ++j)
            if (cnt[static_cast<size_t>(j)] == 3) hub = j;
        if (!hub) return std::nullopt;
        std::vector<int> rows{1, 2, 3}, cols;
        std::vector<int> leaves;
        for (int i = 1; i <= 3; ++i) {
            if (t.row(i).size() != 2) return std::nullopt;
            leaves.push_back(t.row(i)[0] == hub ? t.row(i)[1] : t.row(i)[0]);
        }
        cols = {leaves[0], hub, leaves[1], leaves[2]};
        return match_with(t, target, rows, cols);
    }
    int rk = 0;
    std::vector<int> light;
    for (int i = 1; i <= k; ++i) {
        if (static_cast<int>(t.row(i).size()) == k - 1) rk = i;
        else if (t.row(i).size() == 2) light.push_back(i);
        else return std::nullopt;
    }
    if (!rk || static_cast<int>(light.size()) != k - 1) return std::nullopt;
    auto cnt = t.column_ones_counts();
    // the three count-1 columns: col 1 and col k sit in light rows, col k+1 in row k
    std::vector<int> deg1_light;
    int ckp1 = 0;
    for (int j = 1; j <= k + 1; ++j) {
        if (cnt[static_cast<size_t>(j)] != 1) continue;
        if (t.at(rk, j)) ckp1 = j;
        else deg1_light.push_back(j);
    }
    if (!ckp1 || deg1_light.size() != 2) return std::nullopt;
    for (int c1 : deg1_light) {
        std::vector<int> cols{c1}, rows;
        std::vector<char> used(static_cast<size_t>(k) + 1, 0);
        int cur = c1;
        bool ok = true;
        for (int step = 0; step < k - 1 && ok; ++step) {
            int pick = 0;
            for (int r : light)
                if (!used[static_cast<size_t>(r)] && t.at(r, cur)) { pick = r; break; }
            if (!pick) { ok = false; break; }
            used[static_cast<size_t>(pick)] = 1;
            rows.push_back(pick);
            cur = t.row(pick)[0] == cur ? t.row(pick)[1] : t.row(pick)[0];
            cols.push_back(cur);
        }
        if (!ok) continue;
        cols.push_back(ckp1);
        rows.push_back(rk);
        if (auto r = match_with(t, target, rows, cols)) return r;
    }
    return std::nullopt;
}

inline std::optional<std::pair<IndexMap, IndexMap>> match_miv(const BinaryMatrix& t) {
    if (t.rows() != 4 || t.cols() != 6) return std::nullopt;
    int heavy = 0;
    std::vector<int> light;
    for (int i = 1; i <= 4; ++i) {
        if (t.row(i).size() == 3) heavy = i;
        else if (t.row(i).size() == 2) light.push_back(i);
        else return std::nullopt;
    }
    if (!heavy || light.size() != 3) return std::nullopt;
    std::vector<int> rows = light, cols;
    for (int r : light) {
        int a = 0, b = 0;
        for (int j : t.row(r)) (t.at(heavy, j) ? b : a) = j;
        if (!a || !b) return std::nullopt;
        cols.push_back(a);
        cols.push_back(b);
    }
    rows.push_back(heavy);
    return match_with(t, tucker_matrix(TuckerFamily::MIV), rows, cols);
}

inline std::optional<std::pair<IndexMap, IndexMap>> match_mv(const BinaryMatrix& t) {
    if (t.rows() != 4 || t.cols() != 5) return std::nullopt;
    int r2 = 0, r4 = 0;
    std::vector<int> twos;
    for (int i = 1; i <= 4; ++i) {
        size_t s = t.row(i).size();
        if (s == 4) r2 = i;
        else if (s == 3) r4 = i;
        else if (s == 2) twos.push_back(i);
        else return std::nullopt;
    }
    if (!r2 || !r4 || twos.size() != 2) return std::nullopt;
    auto target = tucker_matrix(TuckerFamily::MV);
    for (int ori = 0; ori < 2; ++ori) {
        int r1 = twos[static_cast<size_t>(ori)], r3 = twos[static_cast<size_t>(1 - ori)];
        int c5 = 0;
        for (int j : t.row(r4))
            if (!t.at(r2, j)) c5 = j;
        int c1 = 0, c4 = 0;
        for (int j : t.row(r1))
            if (t.at(r4, j)) c1 = j;
        for (int j : t.row(r3))
            if (t.at(r4, j)) c4 = j;
        if (!c5 || !c1 || !c4) continue;
        int c2 = t.row(r1)[0] == c1 ? t.row(r1)[1] : t.row(r1)[0];
        int c3 = t.row(r3)[0] == c4 ? t.row(r3)[1] : t.row(r3)[0];
        if (auto r = match_with(t, target, {r1, r2, r3, r4}, {c1, c2, c3, c4, c5})) return r;
    }
    return std::nullopt;
}

}  // namespace detail

struct TuckerClassification {
    TuckerFamily family;
    int k;
    IndexMap row_perm;
    IndexMap col_perm;
};

// If t represents the same configuration as a Tucker matrix, returns the
// family and permutations with submatrix(t, perms) equal to it entrywise.
inline std::optional<TuckerClassification> classify_tucker(const BinaryMatrix& t) {
    int k = t.rows();
    if (k == 4 && t.cols() == 6)
        if (auto r = detail::match_miv(t)) return TuckerClassification{TuckerFamily::MIV, 4, r->first, r->second};
    if (k == 4 && t.cols() == 5)
        if (auto r = detail::match_mv(t)) return TuckerClassification{TuckerFamily::MV, 4, r->first, r->second};
    if (t.cols() == k) {
        if (auto r = detail::match_mi(t)) return TuckerClassification{TuckerFamily::MI, k, r->first, r->second};
        if (auto r = detail::match_mii(t)) return TuckerClassification{TuckerFamily::MII, k, r->first, r->second};
    }
    if (t.cols() == k + 1)
        if (auto r = detail::match_miii(t)) return TuckerClassification{TuckerFamily::MIII, k, r->first, r->second};
    return std::nullopt;
}

// Deletion-minimization: drop rows then columns (ascending) while the rest
// still fails C1P, then classify the minimal residue. O((k+l) * size(M)).
inline TuckerWitness find_tucker_submatrix(const BinaryMatrix& m) {
    std::vector<char> row_alive(static_cast<size_t>(m.rows()) + 1, 1);
    std::vector<char> col_alive(static_cast<size_t>(m.cols()) + 1, 1);
    if (c1p_holds_masked(m, row_alive, col_alive))
        throw PreconditionError("find_tucker_submatrix: matrix has the consecutive-ones property");
    for (int i = 1; i <= m.rows(); ++i) {
        row_alive[static_cast<size_t>(i)] = 0;
        if (c1p_holds_masked(m, row_alive, col_alive)) row_alive[static_cast<size_t>(i)] = 1;
    }
    for (int j = 1; j <= m.cols(); ++j) {
        col_alive[static_cast<size_t>(j)] = 0;
        if (c1p_holds_masked(m, row_alive, col_alive)) col_alive[static_cast<size_t>(j)] = 1;
    }
    std::vector<int> rows, cols;
    for (int i = 1; i <= m.rows(); ++i)
        if (row_alive[static_cast<size_t>(i)]) rows.push_back(i);
    for (int j = 1; j <= m.cols(); ++j)
        if (col_alive[static_cast<size_t>(j)]) cols.push_back(j);
    Embedding residue{IndexMap(rows), IndexMap(cols)};
    BinaryMatrix t = submatrix(m, residue);
    auto cls = classify_tucker(t);
    if (!cls) throw Error("find_tucker_submatrix: minimal residue failed classification");
    TuckerWitness w{cls->family, cls->k,
                    chain(residue, Embedding{cls->row_perm, cls->col_perm})};
    if (submatrix(m, w.embedding) != tucker_matrix(w.family, w.k))
        throw Error("find_tucker_submatrix: witness re-extraction mismatch");
    return w;
}

}  // namespace circone
