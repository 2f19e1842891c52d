#pragma once

// Binary sequences under shifts and reversals: Booth least-rotation
// canonicalization with an explicit permutation record, bracelet sets A_k,
// enumeration, and the exact counting formula.

#include <cstdint>

#include "circone/core.hpp"

namespace circone {

inline BinarySequence shift_seq(const BinarySequence& a) {
    if (a.size() <= 1) return a;
    return a.substr(1) + a[0];
}

inline BinarySequence reverse_seq(const BinarySequence& a) {
    return BinarySequence(a.rbegin(), a.rend());
}

enum class PermAtom { Shift, Reversal };

// A permutation of [k] given as a composition of shift and reversal atoms,
// applied left-to-right: a_pi for the derived pi equals the result of applying
// the atoms to a in order.
struct PermRecord {
    int k = 0;
    std::vector<PermAtom> composition;

    // pi as an explicit function: pi(i), 1-indexed.
    std::vector<int> derived() const {
        std::vector<int> pi(static_cast<size_t>(k));
        std::iota(pi.begin(), pi.end(), 1);
        for (PermAtom atom : composition) {
            std::vector<int> nxt(static_cast<size_t>(k));
            for (int i = 1; i <= k; ++i) {
                int j = atom == PermAtom::Shift ? (i % k) + 1 : k + 1 - i;
                // applying the atom maps position i to old position j: pi := pi o atom
                nxt[static_cast<size_t>(i) - 1] = pi[static_cast<size_t>(j) - 1];
            }
            pi = std::move(nxt);
        }
        return pi;
    }

    IndexMap as_map() const { return IndexMap(derived()); }

    // pi* : the extension to [k+1] fixing k+1.
    IndexMap as_map_star() const {
        auto t = derived();
        t.push_back(k + 1);
        return IndexMap(std::move(t));
    }
};

inline BinarySequence apply_perm(const BinarySequence& a, const IndexMap& pi) {
    if (pi.size() != static_cast<int>(a.size())) throw DimensionError("permutation length mismatch");
    BinarySequence r(a.size(), '0');
    for (int i = 1; i <= pi.size(); ++i) r[static_cast<size_t>(i) - 1] = a[static_cast<size_t>(pi(i)) - 1];
    return r;
}

// Booth's least-rotation: 0-based start index of the lexicographically
// smallest rotation, in O(k).
inline int booth_least_rotation(const BinarySequence& s) {
    int n = static_cast<int>(s.size());
    if (n <= 1) return 0;
    std::string t = s + s;
    std::vector<int> f(t.size(), -1);
    int k = 0;
    for (int j = 1; j < 2 * n; ++j) {
        char sj = t[static_cast<size_t>(j)];
        int i = f[static_cast<size_t>(j - k - 1)];
        while (i != -1 && sj != t[static_cast<size_t>(k + i + 1)]) {
            if (sj < t[static_cast<size_t>(k + i + 1)]) k = j - i - 1;
            i = f[static_cast<size_t>(i)];
        }
        if (sj != t[static_cast<size_t>(k + i + 1)]) {
            if (sj < t[static_cast<size_t>(k)]) k = j;
            f[static_cast<size_t>(j - k)] = -1;
        } else {
            f[static_cast<size_t>(j - k)] = i + 1;
        }
    }
    return k % n;
}

struct BoothResult {
    BinarySequence canonical;
    PermRecord perm;
};

// Lexicographically least sequence over all shifts of a and of reverse(a);
// ties resolve toward the forward orbit (no Reversal atom).
inline BoothResult booth_canonical(const BinarySequence& a) {
    check_binary(a);
    int k = static_cast<int>(a.size());
    PermRecord rec;
    rec.k = k;
    if (k == 0) return {a, rec};

    int r1 = booth_least_rotation(a);
    BinarySequence fwd = a.substr(static_cast<size_t>(r1)) + a.substr(0, static_cast<size_t>(r1));
    BinarySequence rev = reverse_seq(a);
    int r2 = booth_least_rotation(rev);
    BinarySequence bwd = rev.substr(static_cast<size_t>(r2)) + rev.substr(0, static_cast<size_t>(r2));

    if (fwd <= bwd) {
        rec.composition.assign(static_cast<size_t>(r1), PermAtom::Shift);
        return {fwd, rec};
    }
    rec.composition.push_back(PermAtom::Reversal);
    rec.composition.insert(rec.composition.end(), static_cast<size_t>(r2), PermAtom::Shift);
    return {bwd, rec};
}

inline bool is_bracelet(const BinarySequence& a) {
    return booth_canonical(a).canonical == a;
}

// A_k: all bracelets for k >= 4; only the constant ones for k = 3.
inline bool in_A_k(const BinarySequence& a) {
    int k = static_cast<int>(a.size());
    if (k < 3) return false;
    if (k == 3) return a == "000" || a == "111";
    return is_bracelet(a);
}

inline std::vector<BinarySequence> enumerate_bracelets(int k) {
    if (k < 1) throw InvalidParameter("k >= 1 required");
    if (k > 24) throw TooLarge("bracelet enumeration is guarded to k <= 24");
    std::vector<BinarySequence> out;
    for (std::uint64_t v = 0; v < (1ULL << k); ++v) {
        BinarySequence s(static_cast<size_t>(k), '0');
        for (int i = 0; i < k; ++i)
            if (v & (1ULL << i)) s[static_cast<size_t>(i)] = '1';
        if (is_bracelet(s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<BinarySequence> enumerate_A_k(int k) {
    if (k < 3) throw InvalidParameter("A_k needs k >= 3");
    if (k == 3) return {"000", "111"};
    return enumerate_bracelets(k);
}

inline std::uint64_t euler_totient(std::uint64_t d) {
    std::uint64_t result = d;
    for (std::uint64_t p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            while (d % p == 0) d /= p;
            result -= result / p;
        }
    }
    if (d > 1) result -= result / d;
    return result;
}

// Number of binary bracelets of length k:
//   (1/2k) * sum_{d|k} phi(d) 2^{k/d}  +  (3/4) 2^{k/2}   (k even)
//                                      +  2^{(k-1)/2}     (k odd)
inline std::uint64_t bracelet_count(int k) {
    if (k < 1) throw InvalidParameter("k >= 1 required");
    if (k > 60) throw TooLarge("bracelet_count is guarded to k <= 60");
    std::uint64_t kk = static_cast<std::uint64_t>(k);
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d <= kk; ++d)
        if (kk % d == 0) s += euler_totient(d) << (kk / d);
    std::uint64_t num, den;
    if (k % 2 == 0) {
        num = 2 * s + 3 * kk * (1ULL << (kk / 2));
        den = 4 * kk;
    } else {
        num = s + 2 * kk * (1ULL << ((kk - 1) / 2));
        den = 2 * kk;
    }
    if (num % den != 0) throw Error("bracelet_count: internal divisibility failure");
    return num / den;
}

}  // namespace circone
