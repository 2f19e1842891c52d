#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "circone/bracelet.hpp"

using namespace circone;

namespace {

BinarySequence naive_canonical(const BinarySequence& a) {
    BinarySequence best = a;
    BinarySequence cur = a;
    for (size_t r = 0; r < a.size(); ++r) {
        cur = shift_seq(cur);
        best = std::min(best, cur);
    }
    cur = reverse_seq(a);
    for (size_t r = 0; r <= a.size(); ++r) {
        best = std::min(best, cur);
        cur = shift_seq(cur);
    }
    return best;
}

BinarySequence random_seq(std::mt19937_64& rng, int k) {
    BinarySequence s(static_cast<size_t>(k), '0');
    for (int i = 0; i < k; ++i) s[static_cast<size_t>(i)] = rng() % 2 ? '1' : '0';
    return s;
}

}  // namespace

TEST_CASE("shift and reversal") {
    CHECK(shift_seq("0001") == "0010");
    CHECK(reverse_seq("0011") == "1100");
    BinarySequence a = "011010";
    BinarySequence b = a;
    for (size_t i = 0; i < a.size(); ++i) b = shift_seq(b);
    CHECK(b == a);
}

TEST_CASE("booth canonicalization") {
    auto r = booth_canonical("0100");
    CHECK(r.canonical == "0001");
    CHECK(apply_perm("0100", r.perm.as_map()) == "0001");

    CHECK(booth_canonical("0000").canonical == "0000");
    CHECK(booth_canonical("0011").canonical == "0011");
    CHECK_FALSE(is_bracelet("0100"));
    CHECK(is_bracelet("0011"));

    std::mt19937_64 rng(42);
    for (int t = 0; t < 10000; ++t) {
        int k = 1 + static_cast<int>(rng() % 64);
        auto a = random_seq(rng, k);
        auto res = booth_canonical(a);
        CHECK(res.canonical == naive_canonical(a));
        // permutation record soundness: a_pi equals the canonical sequence
        CHECK(apply_perm(a, res.perm.as_map()) == res.canonical);
        // idempotence
        CHECK(booth_canonical(res.canonical).canonical == res.canonical);
    }
}

TEST_CASE("orbit invariance and forward tie-break") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 2000; ++t) {
        int k = 1 + static_cast<int>(rng() % 16);
        auto a = random_seq(rng, k);
        auto c = booth_canonical(a).canonical;
        auto s = a;
        for (int r = 0; r < k; ++r) {
            s = shift_seq(s);
            CHECK(booth_canonical(s).canonical == c);
        }
        CHECK(booth_canonical(reverse_seq(a)).canonical == c);
    }
    // palindromic orbit: no Reversal atom used
    auto rec = booth_canonical("0110");
    for (PermAtom atom : rec.perm.composition) CHECK(atom != PermAtom::Reversal);
}

TEST_CASE("A_k membership") {
    CHECK_FALSE(in_A_k("001"));
    CHECK_FALSE(in_A_k("011"));
    CHECK(in_A_k("000"));
    CHECK(in_A_k("111"));
    CHECK(in_A_k("0011"));
    CHECK(enumerate_A_k(3) == std::vector<BinarySequence>{"000", "111"});
    CHECK(enumerate_A_k(5).size() == 8);
    CHECK(enumerate_bracelets(4).size() == 6);
}

TEST_CASE("bracelet counting formula") {
    CHECK(bracelet_count(6) == 13);
    CHECK(bracelet_count(8) == 30);
    for (int k = 3; k <= 16; ++k) CHECK(bracelet_count(k) == enumerate_bracelets(k).size());
    CHECK(euler_totient(1) == 1);
    CHECK(euler_totient(12) == 4);
    CHECK(euler_totient(97) == 96);
    CHECK_THROWS_AS(enumerate_bracelets(25), TooLarge);
}
