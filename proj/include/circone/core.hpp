#pragma once

// Sparse 0/1 matrices, index maps and embeddings, row complementation and the
// other small configuration operators everything else is built on.
// Rows, columns and vertices are 1-indexed throughout, matching the file formats.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace circone {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionError : Error { using Error::Error; };
struct InvalidEmbedding : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };
struct InvalidMember : Error { using Error::Error; };
struct CertificateError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Binary sequences are ASCII strings over {'0','1'}; this is also their
// serialized form.
using BinarySequence = std::string;

inline void check_binary(const BinarySequence& a) {
    for (char c : a)
        if (c != '0' && c != '1') throw InvalidParameter("binary sequence may contain only 0/1");
}

inline BinarySequence seq_xor(const BinarySequence& a, const BinarySequence& b) {
    if (a.size() != b.size()) throw DimensionError("mod-2 sum needs equal lengths");
    BinarySequence r(a.size(), '0');
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] != b[i]) ? '1' : '0';
    return r;
}

inline BinarySequence seq_complement(const BinarySequence& a) {
    BinarySequence r(a.size(), '0');
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] == '0' ? '1' : '0';
    return r;
}

inline bool seq_constant(const BinarySequence& a, char bit) {
    return std::all_of(a.begin(), a.end(), [bit](char c) { return c == bit; });
}

// The injective function <n1,...,ns>; targets are 1-indexed.
struct IndexMap {
    std::vector<int> targets;

    IndexMap() = default;
    explicit IndexMap(std::vector<int> t) : targets(std::move(t)) {}
    static IndexMap identity(int s) {
        std::vector<int> t(s);
        std::iota(t.begin(), t.end(), 1);
        return IndexMap(std::move(t));
    }

    int size() const { return static_cast<int>(targets.size()); }
    int operator()(int i) const { return targets[static_cast<size_t>(i) - 1]; }

    bool injective() const {
        std::vector<int> s = targets;
        std::sort(s.begin(), s.end());
        return std::adjacent_find(s.begin(), s.end()) == s.end();
    }
    bool within(int bound) const {
        return std::all_of(targets.begin(), targets.end(),
                           [bound](int v) { return v >= 1 && v <= bound; });
    }
};

// chain(outer, inner)(i) = outer(inner(i)); so M_(chain(r,r'), chain(s,s')) ==
// (M_(r,s))_(r',s').
inline IndexMap chain(const IndexMap& outer, const IndexMap& inner) {
    std::vector<int> t(inner.targets.size());
    for (size_t i = 0; i < t.size(); ++i) {
        int j = inner.targets[i];
        if (j < 1 || j > outer.size()) throw InvalidEmbedding("composition out of bounds");
        t[i] = outer(j);
    }
    return IndexMap(std::move(t));
}

struct Embedding {
    IndexMap row_map;
    IndexMap col_map;
};

inline Embedding chain(const Embedding& outer, const Embedding& inner) {
    return Embedding{chain(outer.row_map, inner.row_map), chain(outer.col_map, inner.col_map)};
}

class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_data_(static_cast<size_t>(rows)) {
        if (rows < 0 || cols < 0) throw DimensionError("negative dimension");
    }

    // row_data: per-row strictly increasing 1-indexed column lists.
    static BinaryMatrix from_rows(int rows, int cols, std::vector<std::vector<int>> row_data) {
        BinaryMatrix m(rows, cols);
        if (static_cast<int>(row_data.size()) != rows) throw DimensionError("row count mismatch");
        for (auto& r : row_data) {
            std::sort(r.begin(), r.end());
            if (std::adjacent_find(r.begin(), r.end()) != r.end())
                throw ParseError("duplicate entry in row");
            if (!r.empty() && (r.front() < 1 || r.back() > cols))
                throw DimensionError("column index out of range");
        }
        m.row_data_ = std::move(row_data);
        return m;
    }

    static BinaryMatrix from_dense(const std::vector<std::string>& rows) {
        int k = static_cast<int>(rows.size());
        int l = k == 0 ? 0 : static_cast<int>(rows[0].size());
        BinaryMatrix m(k, l);
        for (int i = 0; i < k; ++i) {
            if (static_cast<int>(rows[i].size()) != l) throw DimensionError("ragged dense rows");
            for (int j = 0; j < l; ++j) {
                char c = rows[i][static_cast<size_t>(j)];
                if (c == '1') m.row_data_[static_cast<size_t>(i)].push_back(j + 1);
                else if (c != '0') throw ParseError("dense rows must be 0/1");
            }
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::vector<int>& row(int i) const { return row_data_[static_cast<size_t>(i) - 1]; }

    bool at(int i, int j) const {
        const auto& r = row(i);
        return std::binary_search(r.begin(), r.end(), j);
    }

    long long ones() const {
        long long n = 0;
        for (const auto& r : row_data_) n += static_cast<long long>(r.size());
        return n;
    }

    // size(M) = rows + cols + ones
    long long size_measure() const { return rows_ + cols_ + ones(); }

    std::vector<int> column_ones_counts() const {
        std::vector<int> cnt(static_cast<size_t>(cols_) + 1, 0);
        for (const auto& r : row_data_)
            for (int j : r) ++cnt[static_cast<size_t>(j)];
        return cnt;
    }

    BinarySequence column(int j) const {
        BinarySequence s(static_cast<size_t>(rows_), '0');
        for (int i = 1; i <= rows_; ++i)
            if (at(i, j)) s[static_cast<size_t>(i) - 1] = '1';
        return s;
    }

    bool operator==(const BinaryMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && row_data_ == o.row_data_;
    }
    bool operator!=(const BinaryMatrix& o) const { return !(*this == o); }

    std::vector<std::string> dense_rows() const {
        std::vector<std::string> out;
        out.reserve(static_cast<size_t>(rows_));
        for (int i = 1; i <= rows_; ++i) {
            std::string s(static_cast<size_t>(cols_), '0');
            for (int j : row(i)) s[static_cast<size_t>(j) - 1] = '1';
            out.push_back(std::move(s));
        }
        return out;
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<int>> row_data_;
};

inline void check_embedding(const BinaryMatrix& m, const Embedding& e) {
    if (!e.row_map.injective() || !e.col_map.injective())
        throw InvalidEmbedding("index maps must be injective");
    if (!e.row_map.within(m.rows()) || !e.col_map.within(m.cols()))
        throw InvalidEmbedding("index map exceeds matrix bounds");
}

inline BinaryMatrix submatrix(const BinaryMatrix& m, const Embedding& e) {
    check_embedding(m, e);
    int k = e.row_map.size(), l = e.col_map.size();
    std::vector<std::vector<int>> rows(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= l; ++j)
            if (m.at(e.row_map(i), e.col_map(j))) rows[static_cast<size_t>(i) - 1].push_back(j);
    return BinaryMatrix::from_rows(k, l, std::move(rows));
}

// a (+) M: complement exactly the rows i with a_i = 1.
inline BinaryMatrix row_complement(const BinarySequence& a, const BinaryMatrix& m) {
    if (static_cast<int>(a.size()) != m.rows()) throw DimensionError("mask length != row count");
    check_binary(a);
    std::vector<std::vector<int>> rows(static_cast<size_t>(m.rows()));
    for (int i = 1; i <= m.rows(); ++i) {
        if (a[static_cast<size_t>(i) - 1] == '0') {
            rows[static_cast<size_t>(i) - 1] = m.row(i);
        } else {
            const auto& r = m.row(i);
            auto& out = rows[static_cast<size_t>(i) - 1];
            size_t p = 0;
            for (int j = 1; j <= m.cols(); ++j) {
                if (p < r.size() && r[p] == j) ++p;
                else out.push_back(j);
            }
        }
    }
    return BinaryMatrix::from_rows(m.rows(), m.cols(), std::move(rows));
}

inline BinaryMatrix complement(const BinaryMatrix& m) {
    return row_complement(BinarySequence(static_cast<size_t>(m.rows()), '1'), m);
}

inline BinaryMatrix transpose(const BinaryMatrix& m) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(m.cols()));
    for (int i = 1; i <= m.rows(); ++i)
        for (int j : m.row(i)) rows[static_cast<size_t>(j) - 1].push_back(i);
    return BinaryMatrix::from_rows(m.cols(), m.rows(), std::move(rows));
}

// M*: one extra all-zero last column.
inline BinaryMatrix star_extend(const BinaryMatrix& m) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(m.rows()));
    for (int i = 1; i <= m.rows(); ++i) rows[static_cast<size_t>(i) - 1] = m.row(i);
    return BinaryMatrix::from_rows(m.rows(), m.cols() + 1, std::move(rows));
}

struct Component {
    std::vector<int> rows;
    std::vector<int> cols;
};

// Connected components of the bipartite graph associated with M. All-zero rows
// and columns come out as singleton components.
inline std::vector<Component> components(const BinaryMatrix& m) {
    int k = m.rows(), l = m.cols();
    std::vector<std::vector<int>> col_rows(static_cast<size_t>(l) + 1);
    for (int i = 1; i <= k; ++i)
        for (int j : m.row(i)) col_rows[static_cast<size_t>(j)].push_back(i);

    std::vector<int> row_comp(static_cast<size_t>(k) + 1, 0), col_comp(static_cast<size_t>(l) + 1, 0);
    std::vector<Component> out;
    auto bfs = [&](int sr, int sc) {
        Component comp;
        std::vector<std::pair<bool, int>> stack;  // (is_row, index)
        int id = static_cast<int>(out.size()) + 1;
        if (sr) { row_comp[static_cast<size_t>(sr)] = id; stack.push_back({true, sr}); }
        if (sc) { col_comp[static_cast<size_t>(sc)] = id; stack.push_back({false, sc}); }
        while (!stack.empty()) {
            auto [is_row, x] = stack.back();
            stack.pop_back();
            if (is_row) {
                comp.rows.push_back(x);
                for (int j : m.row(x))
                    if (!col_comp[static_cast<size_t>(j)]) {
                        col_comp[static_cast<size_t>(j)] = id;
                        stack.push_back({false, j});
                    }
            } else {
                comp.cols.push_back(x);
                for (int i : col_rows[static_cast<size_t>(x)])
                    if (!row_comp[static_cast<size_t>(i)]) {
                        row_comp[static_cast<size_t>(i)] = id;
                        stack.push_back({true, i});
                    }
            }
        }
        std::sort(comp.rows.begin(), comp.rows.end());
        std::sort(comp.cols.begin(), comp.cols.end());
        out.push_back(std::move(comp));
    };
    for (int i = 1; i <= k; ++i)
        if (!row_comp[static_cast<size_t>(i)]) bfs(i, 0);
    for (int j = 1; j <= l; ++j)
        if (!col_comp[static_cast<size_t>(j)]) bfs(0, j);
    return out;
}

// Canonical byte string deciding configuration equality: minimum, over all row
// permutations, of the row-major dense image with columns sorted
// lexicographically. Column sorting is already canonical for a fixed row
// order, so the minimum over row orders is a full invariant.
inline std::string canonical_config(const BinaryMatrix& m) {
    if (m.rows() > 10 || m.cols() > 10)
        throw TooLarge("canonical_config is guarded to 10x10");
    int k = m.rows(), l = m.cols();
    if (k == 0 || l == 0) return std::to_string(k) + "x" + std::to_string(l);

    auto dense = m.dense_rows();
    std::vector<int> perm(static_cast<size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    std::vector<std::string> cols(static_cast<size_t>(l));
    do {
        for (int j = 0; j < l; ++j) {
            std::string& c = cols[static_cast<size_t>(j)];
            c.resize(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = dense[static_cast<size_t>(perm[static_cast<size_t>(i)])][static_cast<size_t>(j)];
        }
        std::sort(cols.begin(), cols.end());
        std::string flat;
        flat.reserve(static_cast<size_t>(k) * static_cast<size_t>(l));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < l; ++j) flat.push_back(cols[static_cast<size_t>(j)][static_cast<size_t>(i)]);
        if (best.empty() || flat < best) best = std::move(flat);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(k) + "x" + std::to_string(l) + ":" + best;
}

// Oracle-grade configuration containment: find an embedding e with
// submatrix(m, e) == t entrywise, if one exists. Backtracks over row choices
// with a column-signature feasibility check at every level.
inline std::optional<Embedding> contains_config_bruteforce(const BinaryMatrix& m, const BinaryMatrix& t) {
    int kt = t.rows(), lt = t.cols();
    if (kt > m.rows() || lt > m.cols()) return std::nullopt;
    if (kt == 0) {
        // only columns matter; any lt distinct columns realize the empty rows
        return Embedding{IndexMap{{}}, IndexMap::identity(lt)};
    }

    auto t_dense = t.dense_rows();
    std::vector<int> chosen;  // chosen host rows (1-indexed), depth = chosen.size()
    std::vector<char> used(static_cast<size_t>(m.rows()) + 1, 0);

    // signature of host column j under the current partial row choice
    std::vector<std::string> host_sig(static_cast<size_t>(m.cols()) + 1);
    for (int j = 1; j <= m.cols(); ++j) host_sig[static_cast<size_t>(j)].reserve(static_cast<size_t>(kt));

    std::optional<Embedding> found;

    auto feasible = [&](int depth) {
        // multiset dominance: every depth-prefix pattern class of t's columns
        // must be covered by host columns with that exact prefix
        std::vector<std::string> tp(static_cast<size_t>(lt));
        for (int j = 0; j < lt; ++j) {
            std::string s(static_cast<size_t>(depth), '0');
            for (int i = 0; i < depth; ++i) s[static_cast<size_t>(i)] = t_dense[static_cast<size_t>(i)][static_cast<size_t>(j)];
            tp[static_cast<size_t>(j)] = std::move(s);
        }
        std::sort(tp.begin(), tp.end());
        std::vector<std::string> hp;
        hp.reserve(static_cast<size_t>(m.cols()));
        for (int j = 1; j <= m.cols(); ++j) hp.push_back(host_sig[static_cast<size_t>(j)]);
        std::sort(hp.begin(), hp.end());
        size_t hi = 0;
        for (size_t ti = 0; ti < tp.size(); ++ti) {
            while (hi < hp.size() && hp[hi] < tp[ti]) ++hi;
            if (hi == hp.size() || hp[hi] != tp[ti]) return false;
            ++hi;
        }
        return true;
    };

    std::function<bool()> rec = [&]() -> bool {
        int depth = static_cast<int>(chosen.size());
        if (depth == kt) {
            // assign columns greedily within exact-signature buckets
            std::vector<int> col_map(static_cast<size_t>(lt), 0);
            std::vector<char> cused(static_cast<size_t>(m.cols()) + 1, 0);
            for (int j = 0; j < lt; ++j) {
                std::string want(static_cast<size_t>(kt), '0');
                for (int i = 0; i < kt; ++i) want[static_cast<size_t>(i)] = t_dense[static_cast<size_t>(i)][static_cast<size_t>(j)];
                int pick = 0;
                for (int c = 1; c <= m.cols(); ++c)
                    if (!cused[static_cast<size_t>(c)] && host_sig[static_cast<size_t>(c)] == want) { pick = c; break; }
                if (!pick) return false;  // cannot happen after feasible(), kept as a guard
                cused[static_cast<size_t>(pick)] = 1;
                col_map[static_cast<size_t>(j)] = pick;
            }
            found = Embedding{IndexMap(chosen), IndexMap(col_map)};
            return true;
        }
        for (int r = 1; r <= m.rows(); ++r) {
            if (used[static_cast<size_t>(r)]) continue;
            used[static_cast<size_t>(r)] = 1;
            chosen.push_back(r);
            for (int j = 1; j <= m.cols(); ++j)
                host_sig[static_cast<size_t>(j)].push_back(m.at(r, j) ? '1' : '0');
            bool ok = feasible(depth + 1) && rec();
            for (int j = 1; j <= m.cols(); ++j) host_sig[static_cast<size_t>(j)].pop_back();
            chosen.pop_back();
            used[static_cast<size_t>(r)] = 0;
            if (ok) return true;
        }
        return false;
    };
    rec();
    return found;
}

}  // namespace circone
