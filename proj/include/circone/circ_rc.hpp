#pragma once

// Circular-ones for rows and columns: the pattern machinery turning a
// masked M_I*(k) into M_I*(3)^T (or its complement), the rows-side finder,
// and the two-sided finder over ForbRowCol u ForbRowCol^T.

#include "circone/circ_rows.hpp"

namespace circone {

enum class RowColKind { MIStar, CoMIStar, Masked, MVStar, CoMVStar, MIStar3T, CoMIStar3T };

struct ForbRowColMember {
    RowColKind kind;
    int k = 0;             // MIStar / CoMIStar only
    BinarySequence mask;   // Masked only; a member of ARowCol
    bool transposed = false;
};

inline std::string rowcol_kind_name(RowColKind k) {
    switch (k) {
        case RowColKind::MIStar: return "MI*";
        case RowColKind::CoMIStar: return "coMI*";
        case RowColKind::Masked: return "masked";
        case RowColKind::MVStar: return "MV*";
        case RowColKind::CoMVStar: return "coMV*";
        case RowColKind::MIStar3T: return "MI*3T";
        case RowColKind::CoMIStar3T: return "coMI*3T";
    }
    return "?";
}

inline const std::vector<BinarySequence>& arowcol_masks() {
    static const std::vector<BinarySequence> masks{"0001", "0011", "0111", "00001",
                                                   "00011", "00111", "01111", "000111"};
    return masks;
}

inline bool rowcol_member_well_formed(const ForbRowColMember& m) {
    switch (m.kind) {
        case RowColKind::MIStar:
        case RowColKind::CoMIStar: return m.k >= 3;
        case RowColKind::Masked: {
            const auto& ms = arowcol_masks();
            return std::find(ms.begin(), ms.end(), m.mask) != ms.end();
        }
        default: return true;
    }
}

inline BinaryMatrix realize_rowcol(const ForbRowColMember& m) {
    if (!rowcol_member_well_formed(m)) throw InvalidMember("malformed ForbRowCol member");
    BinaryMatrix base;
    switch (m.kind) {
        case RowColKind::MIStar: base = star_extend(tucker_matrix(TuckerFamily::MI, m.k)); break;
        case RowColKind::CoMIStar: base = complement(star_extend(tucker_matrix(TuckerFamily::MI, m.k))); break;
        case RowColKind::Masked:
            base = row_complement(m.mask, star_extend(tucker_matrix(TuckerFamily::MI, static_cast<int>(m.mask.size()))));
            break;
        case RowColKind::MVStar: base = star_extend(tucker_matrix(TuckerFamily::MV)); break;
        case RowColKind::CoMVStar: base = complement(star_extend(tucker_matrix(TuckerFamily::MV))); break;
        case RowColKind::MIStar3T: base = transpose(star_extend(tucker_matrix(TuckerFamily::MI, 3))); break;
        case RowColKind::CoMIStar3T:
            base = complement(transpose(star_extend(tucker_matrix(TuckerFamily::MI, 3))));
            break;
    }
    return m.transposed ? transpose(base) : base;
}

// The pattern table. Row/column index templates are offsets from the
// occurrence position i (mod k); column entry -1 stands for column k+1.
struct PatternRow {
    const char* pattern;
    std::array<int, 4> rho;
    std::array<int, 3> sigma;
};

inline const std::array<PatternRow, 11>& pattern_table() {
    static const std::array<PatternRow, 11> table{{
        {"xyxy", {0, 1, 2, 3}, {2, 1, -1}},
        {"xyxxy", {0, 1, 2, 4}, {2, 1, -1}},
        {"yxxyx", {4, 3, 2, 0}, {3, 4, -1}},
        {"yxxxxy", {1, 2, 4, 5}, {4, 1, 3}},
        {"xxxxxy", {1, 2, 4, 5}, {4, 1, 3}},
        {"xyxxxy", {0, 1, 2, 5}, {2, 1, 4}},
        {"yxxxyx", {5, 4, 3, 0}, {4, 5, 2}},
        {"xyyxxx", {0, 3, 5, 2}, {5, 1, 4}},
        {"xxxyyx", {5, 2, 0, 3}, {1, 5, 2}},
        {"xyyxxyy", {0, 3, 4, 6}, {5, 1, 3}},
        {"xyyyxxx", {0, 4, 5, 2}, {6, 1, 4}},
    }};
    return table;
}

struct PatternOccurrence {
    int table_row;   // 0-based index into pattern_table()
    int position;    // 1-based start position in c
    bool x_is_one;   // (x,y) = (1,0) if true, (0,1) otherwise
};

// Circular occurrence of some pattern in c. Deterministic tie-break: lowest
// table row, then smallest position, then polarity (1,0) before (0,1).
inline std::optional<PatternOccurrence> pattern_occurrence(const BinarySequence& c) {
    int k = static_cast<int>(c.size());
    if (k < 3) throw InvalidParameter("pattern_occurrence needs |c| >= 3");
    const auto& table = pattern_table();
    for (int t = 0; t < static_cast<int>(table.size()); ++t) {
        const char* b = table[static_cast<size_t>(t)].pattern;
        int len = static_cast<int>(std::string(b).size());
        if (len > k) continue;
        for (int i = 1; i <= k; ++i) {
            for (int pol = 0; pol < 2; ++pol) {
                char xc = pol == 0 ? '1' : '0', yc = pol == 0 ? '0' : '1';
                bool ok = true;
                for (int off = 0; off < len && ok; ++off) {
                    char want = b[off] == 'x' ? xc : yc;
                    ok = c[static_cast<size_t>((i - 1 + off) % k)] == want;
                }
                if (ok) return PatternOccurrence{t, i, pol == 0};
            }
        }
    }
    return std::nullopt;
}

// The (rho, sigma) of the Table-1 row, instantiated at position i.
inline Embedding pattern_extract(int table_row, int i, int k) {
    if (table_row < 0 || table_row >= static_cast<int>(pattern_table().size()))
        throw InvalidParameter("pattern_extract: bad table row");
    const PatternRow& row = pattern_table()[static_cast<size_t>(table_row)];
    auto wrap = [&](int off) { return (i - 1 + off) % k + 1; };
    std::vector<int> rho, sigma;
    for (int off : row.rho) rho.push_back(wrap(off));
    for (int off : row.sigma) sigma.push_back(off == -1 ? k + 1 : wrap(off));
    return Embedding{IndexMap(std::move(rho)), IndexMap(std::move(sigma))};
}

struct ForbRowColCertificate {
    ForbRowColMember member;
    Embedding embedding;
};

inline bool verify_forbrowcol(const BinaryMatrix& m, const ForbRowColCertificate& cert) {
    if (!rowcol_member_well_formed(cert.member)) return false;
    BinaryMatrix want;
    try {
        want = realize_rowcol(cert.member);
        if (cert.embedding.row_map.size() != want.rows() || cert.embedding.col_map.size() != want.cols())
            return false;
        return submatrix(m, cert.embedding) == want;
    } catch (const Error&) {
        return false;
    }
}

// Rows-side finder: from a ForbRow certificate to a member of
// ForbRowCol u {M_I*(3)^T, co-M_I*(3)^T}.
inline ForbRowColCertificate find_forbrowcol_rows(const BinaryMatrix& m) {
    ForbRowCertificate base = find_forbrow(m);
    ForbRowColCertificate out;
    if (base.member.kind == ForbRowKind::MIStar) {
        int k = base.member.k;
        auto occ = pattern_occurrence(base.c);
        if (occ) {
            Embedding inner = pattern_extract(occ->table_row, occ->position, k);
            out.member = {occ->x_is_one ? RowColKind::MIStar3T : RowColKind::CoMIStar3T, 3, "", false};
            out.embedding = chain(base.embedding, inner);
        } else {
            if (seq_constant(base.c, '0')) out.member = {RowColKind::MIStar, k, "", false};
            else if (seq_constant(base.c, '1')) out.member = {RowColKind::CoMIStar, k, "", false};
            else out.member = {RowColKind::Masked, k, base.c, false};  // pattern-free bracelet: c in ARowCol
            out.embedding = base.embedding;
        }
    } else if (base.member.kind == ForbRowKind::MIV || base.member.kind == ForbRowKind::CoMIV) {
        out.member = {base.member.kind == ForbRowKind::MIV ? RowColKind::CoMIStar3T : RowColKind::MIStar3T,
                      3, "", false};
        out.embedding = chain(base.embedding, Embedding{IndexMap::identity(4), IndexMap{{6, 2, 4}}});
    } else {
        out.member = {base.member.kind == ForbRowKind::MVStar ? RowColKind::MVStar : RowColKind::CoMVStar,
                      4, "", false};
        out.embedding = base.embedding;
    }
    if (!verify_forbrowcol(m, out)) throw Error("find_forbrowcol_rows: certificate failed verification");
    return out;
}

// Two-sided finder. Fails rows: run the rows-side finder on M; otherwise
// on M^T and transpose the certificate.
inline ForbRowColCertificate find_forbrowcol(const BinaryMatrix& m) {
    if (!circ1p_test(m)) return find_forbrowcol_rows(m);
    BinaryMatrix mt = transpose(m);
    if (circ1p_test(mt))
        throw PreconditionError("find_forbrowcol: matrix has the circular-ones property for rows and columns");
    ForbRowColCertificate cert = find_forbrowcol_rows(mt);
    cert.member.transposed = true;
    std::swap(cert.embedding.row_map, cert.embedding.col_map);
    if (!verify_forbrowcol(m, cert)) throw Error("find_forbrowcol: transposed certificate failed verification");
    return cert;
}

struct CircRcResult {
    bool ok = false;
    std::vector<int> circular_col_order;  // witness for the rows property
    std::vector<int> circular_row_order;  // witness for the columns property
    enum class Fail { None, Rows, Cols } failed = Fail::None;
};

inline CircRcResult circ_rc_test(const BinaryMatrix& m) {
    CircRcResult r;
    auto rows_side = circ1p_test(m);
    if (!rows_side) {
        r.failed = CircRcResult::Fail::Rows;
        return r;
    }
    auto cols_side = circ1p_test(transpose(m));
    if (!cols_side) {
        r.failed = CircRcResult::Fail::Cols;
        return r;
    }
    r.ok = true;
    r.circular_col_order = *rows_side;
    r.circular_row_order = *cols_side;
    return r;
}

// ForbRowCol members with k rows, untransposed: the two infinite-family
// members, the masked sporadics of that length, and M_V*/co-M_V* at k = 4.
inline std::vector<ForbRowColMember> forbrowcol_enumerate(int k) {
    if (k < 3 || k > 16) throw InvalidParameter("forbrowcol_enumerate is guarded to 3 <= k <= 16");
    std::vector<ForbRowColMember> out;
    out.push_back({RowColKind::MIStar, k, "", false});
    out.push_back({RowColKind::CoMIStar, k, "", false});
    for (const auto& a : arowcol_masks())
        if (static_cast<int>(a.size()) == k) out.push_back({RowColKind::Masked, k, a, false});
    if (k == 4) {
        out.push_back({RowColKind::MVStar, 4, "", false});
        out.push_back({RowColKind::CoMVStar, 4, "", false});
    }
    return out;
}

}  // namespace circone
