#pragma once

// Circular-ones property for rows: Tucker reduction, recognition with a
// circular column order as witness, and the certified NO path producing a
// member of ForbRow = {a (+) M_I*(k) : a in A_k} u {M_IV, co-M_IV, M_V*, co-M_V*}
// embedded entrywise in the input.

#include <array>

#include "circone/bracelet.hpp"
#include "circone/tucker.hpp"

namespace circone {

enum class ForbRowKind { MIStar, MIV, CoMIV, MVStar, CoMVStar };

struct ForbRowMember {
    ForbRowKind kind;
    int k = 4;             // row count; meaningful for MIStar, 4 otherwise
    BinarySequence mask;   // MIStar only: the bracelet a with |a| = k
};

inline std::string forbrow_kind_name(ForbRowKind k) {
    switch (k) {
        case ForbRowKind::MIStar: return "MI*";
        case ForbRowKind::MIV: return "MIV";
        case ForbRowKind::CoMIV: return "coMIV";
        case ForbRowKind::MVStar: return "MV*";
        case ForbRowKind::CoMVStar: return "coMV*";
    }
    return "?";
}

inline bool member_well_formed(const ForbRowMember& m) {
    if (m.kind == ForbRowKind::MIStar)
        return m.k >= 3 && static_cast<int>(m.mask.size()) == m.k && in_A_k(m.mask);
    return m.k == 4;
}

inline BinaryMatrix realize(const ForbRowMember& m) {
    switch (m.kind) {
        case ForbRowKind::MIStar:
            if (!member_well_formed(m)) throw InvalidMember("MI* member needs a mask in A_k");
            return row_complement(m.mask, star_extend(tucker_matrix(TuckerFamily::MI, m.k)));
        case ForbRowKind::MIV: return tucker_matrix(TuckerFamily::MIV);
        case ForbRowKind::CoMIV: return complement(tucker_matrix(TuckerFamily::MIV));
        case ForbRowKind::MVStar: return star_extend(tucker_matrix(TuckerFamily::MV));
        case ForbRowKind::CoMVStar: return complement(star_extend(tucker_matrix(TuckerFamily::MV)));
    }
    throw InvalidMember("unknown ForbRow member");
}

struct TuckerReduction {
    BinaryMatrix reduced;  // M' = a (+) M, column z all-zero
    int z;
    BinarySequence a;      // column z of M, read top-down
};

// Complement the rows holding a 1 in column z so it becomes all-zero.
inline TuckerReduction tucker_reduction_at(const BinaryMatrix& m, int z) {
    if (z < 1 || z > m.cols()) throw DimensionError("tucker_reduction: column out of range");
    BinarySequence a = m.column(z);
    return TuckerReduction{row_complement(a, m), z, a};
}

// Column choice: maximum ones, ties to the smallest index.
inline TuckerReduction tucker_reduction(const BinaryMatrix& m) {
    if (m.cols() < 1) throw DimensionError("tucker_reduction needs at least one column");
    auto cnt = m.column_ones_counts();
    int z = 1;
    for (int j = 2; j <= m.cols(); ++j)
        if (cnt[static_cast<size_t>(j)] > cnt[static_cast<size_t>(z)]) z = j;
    return tucker_reduction_at(m, z);
}

// Circular-ones for rows; on YES a circular column order (the linear order
// of the reduction, read circularly).
inline std::optional<std::vector<int>> circ1p_test(const BinaryMatrix& m) {
    if (m.cols() == 0) return std::vector<int>{};
    auto red = tucker_reduction(m);
    return c1p_test(red.reduced);
}

// Lift: a Tucker witness in the reduction becomes a (+) M_I*(k') or
// a (+) M_V* embedded in the original matrix, case by family.
struct LiftResult {
    bool mvstar;       // false: a (+) M_I*(k'); true: a (+) M_V*
    BinarySequence a;
    Embedding e;
};

inline LiftResult lift_tucker(const BinaryMatrix& m, const TuckerReduction& red, const TuckerWitness& w) {
    const IndexMap& rho = w.embedding.row_map;
    const IndexMap& sig = w.embedding.col_map;
    for (int j : sig.targets)
        if (j == red.z) throw CertificateError("lift_tucker: witness uses the zero column");
    BinarySequence a_rho(static_cast<size_t>(rho.size()), '0');
    for (int i = 1; i <= rho.size(); ++i) a_rho[static_cast<size_t>(i) - 1] = red.a[static_cast<size_t>(rho(i)) - 1];

    int k = w.k;
    LiftResult out;
    std::vector<int> cols;
    switch (w.family) {
        case TuckerFamily::MI:
            out = {false, a_rho, {}};
            cols = sig.targets;
            cols.push_back(red.z);
            break;
        case TuckerFamily::MII: {
            BinarySequence add(static_cast<size_t>(k), '0');
            add[static_cast<size_t>(k) - 2] = add[static_cast<size_t>(k) - 1] = '1';
            out = {false, seq_xor(a_rho, add), {}};
            cols.assign(sig.targets.begin(), sig.targets.end() - 1);
            cols.push_back(red.z);
            cols.push_back(sig.targets.back());
            break;
        }
        case TuckerFamily::MIII: {
            BinarySequence add(static_cast<size_t>(k), '0');
            add[static_cast<size_t>(k) - 1] = '1';
            out = {false, seq_xor(a_rho, add), {}};
            cols = sig.targets;
            break;
        }
        case TuckerFamily::MIV: {
            out = {true, seq_xor(a_rho, "0100"), {}};
            for (int j : {2, 1, 5, 6, 4, 3}) cols.push_back(sig(j));
            break;
        }
        case TuckerFamily::MV:
            out = {true, a_rho, {}};
            cols = sig.targets;
            cols.push_back(red.z);
            break;
    }
    out.e = Embedding{rho, IndexMap(cols)};
    BinaryMatrix base = out.mvstar ? star_extend(tucker_matrix(TuckerFamily::MV))
                                   : star_extend(tucker_matrix(TuckerFamily::MI, k));
    if (submatrix(m, out.e) != row_complement(out.a, base))
        throw Error("lift_tucker: lifted submatrix mismatch");
    return out;
}

// The 16-entry classification of a (+) M_V* up to row/column permutations.
struct MvstarEntry {
    IndexMap rho;
    IndexMap sigma;
    ForbRowMember member;
};

inline const MvstarEntry& mvstar_classify(const BinarySequence& a) {
    if (a.size() != 4) throw InvalidParameter("mvstar_classify needs a length-4 mask");
    static const std::array<MvstarEntry, 16> table = [] {
        auto id4 = IndexMap::identity(4);
        auto id6 = IndexMap::identity(6);
        IndexMap s2143{{2, 1, 4, 3, 6, 5}}, s6543{{6, 5, 4, 3, 2, 1}}, s5634{{5, 6, 3, 4, 1, 2}},
            s2165{{2, 1, 6, 5, 3, 4}}, s1256{{1, 2, 5, 6, 4, 3}}, s1265{{1, 2, 6, 5, 4, 3}},
            s2156{{2, 1, 5, 6, 3, 4}};
        IndexMap r1324{{1, 3, 2, 4}}, r2134{{2, 1, 3, 4}};
        ForbRowMember mv{ForbRowKind::MVStar, 4, ""}, cmv{ForbRowKind::CoMVStar, 4, ""},
            m4{ForbRowKind::MIV, 4, ""}, cm4{ForbRowKind::CoMIV, 4, ""};
        return std::array<MvstarEntry, 16>{{
            /*0000*/ {id4, id6, mv},
            /*0001*/ {id4, s2143, mv},
            /*0010*/ {r2134, s6543, cmv},
            /*0011*/ {r2134, s5634, cmv},
            /*0100*/ {id4, s2165, m4},
            /*0101*/ {id4, s1256, m4},
            /*0110*/ {r1324, s1265, mv},
            /*0111*/ {r1324, s2156, mv},
            /*1000*/ {r1324, s2156, cmv},
            /*1001*/ {r1324, s1265, cmv},
            /*1010*/ {id4, s1256, cm4},
            /*1011*/ {id4, s2165, cm4},
            /*1100*/ {r2134, s5634, mv},
            /*1101*/ {r2134, s6543, mv},
            /*1110*/ {id4, s2143, cmv},
            /*1111*/ {id4, id6, cmv},
        }};
    }();
    int idx = 0;
    for (char c : a) {
        if (c != '0' && c != '1') throw InvalidParameter("mask must be binary");
        idx = idx * 2 + (c - '0');
    }
    return table[static_cast<size_t>(idx)];
}

struct ForbRowCertificate {
    ForbRowMember member;
    Embedding embedding;
    BinarySequence c;  // entries of the last column of the embedded matrix
};

inline bool verify_forbrow(const BinaryMatrix& m, const ForbRowCertificate& cert) {
    if (!member_well_formed(cert.member)) return false;
    BinaryMatrix want;
    try {
        want = realize(cert.member);
    } catch (const Error&) {
        return false;
    }
    if (cert.embedding.row_map.size() != want.rows() || cert.embedding.col_map.size() != want.cols())
        return false;
    try {
        if (submatrix(m, cert.embedding) != want) return false;
    } catch (const Error&) {
        return false;
    }
    return cert.c == want.column(want.cols());
}

// The certified finder: reduction, Tucker find, lift, bracelet
// canonicalization with the k = 3 exceptions, or the M_V* table.
inline ForbRowCertificate find_forbrow(const BinaryMatrix& m) {
    auto red = tucker_reduction(m);
    if (c1p_test(red.reduced)) throw PreconditionError("find_forbrow: matrix has the circular-ones property");
    TuckerWitness w = find_tucker_submatrix(red.reduced);
    LiftResult lift = lift_tucker(m, red, w);

    ForbRowCertificate cert;
    if (!lift.mvstar) {
        int k = static_cast<int>(lift.a.size());
        BoothResult booth = booth_canonical(lift.a);
        IndexMap rho = chain(lift.e.row_map, booth.perm.as_map());
        IndexMap sigma = chain(lift.e.col_map, booth.perm.as_map_star());
        if (booth.canonical == "001") {
            sigma = chain(sigma, IndexMap{{3, 4, 1, 2}});
            cert = {{ForbRowKind::MIStar, 3, "111"}, {rho, sigma}, "111"};
        } else if (booth.canonical == "011") {
            sigma = chain(sigma, IndexMap{{2, 1, 4, 3}});
            cert = {{ForbRowKind::MIStar, 3, "000"}, {rho, sigma}, "000"};
        } else {
            cert = {{ForbRowKind::MIStar, k, booth.canonical}, {rho, sigma}, booth.canonical};
        }
    } else {
        const MvstarEntry& entry = mvstar_classify(lift.a);
        Embedding e = chain(lift.e, Embedding{entry.rho, entry.sigma});
        BinaryMatrix want = realize(entry.member);
        cert = {entry.member, e, want.column(want.cols())};
    }
    if (!verify_forbrow(m, cert)) throw Error("find_forbrow: produced certificate failed verification");
    return cert;
}

// All ForbRow members with k rows: the masked M_I*(k) family plus the four
// sporadics at k = 4.
inline std::vector<ForbRowMember> forbrow_enumerate(int k) {
    if (k < 3 || k > 16) throw InvalidParameter("forbrow_enumerate is guarded to 3 <= k <= 16");
    std::vector<ForbRowMember> out;
    for (const auto& a : enumerate_A_k(k)) out.push_back({ForbRowKind::MIStar, k, a});
    if (k == 4) {
        out.push_back({ForbRowKind::MIV, 4, ""});
        out.push_back({ForbRowKind::CoMIV, 4, ""});
        out.push_back({ForbRowKind::MVStar, 4, ""});
        out.push_back({ForbRowKind::CoMVStar, 4, ""});
    }
    return out;
}

}  // namespace circone
