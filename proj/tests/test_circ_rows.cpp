#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "circone/circ_rows.hpp"
#include "circone/oracles.hpp"

using namespace circone;

namespace {

BinaryMatrix random_matrix(std::mt19937_64& rng, int k, int l, double density) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 1; j <= l; ++j)
            if (static_cast<double>(rng() % 1000) / 1000.0 < density) rows[static_cast<size_t>(i)].push_back(j);
    return BinaryMatrix::from_rows(k, l, std::move(rows));
}

BinaryMatrix drop_rowcol(const BinaryMatrix& m, int drop_row, int drop_col) {
    std::vector<int> rows, cols;
    for (int i = 1; i <= m.rows(); ++i)
        if (i != drop_row) rows.push_back(i);
    for (int j = 1; j <= m.cols(); ++j)
        if (j != drop_col) cols.push_back(j);
    return submatrix(m, Embedding{IndexMap(rows), IndexMap(cols)});
}

BinarySequence random_seq(std::mt19937_64& rng, int k) {
    BinarySequence s(static_cast<size_t>(k), '0');
    for (int i = 0; i < k; ++i) s[static_cast<size_t>(i)] = rng() % 2 ? '1' : '0';
    return s;
}

}  // namespace

TEST_CASE("realize members") {
    CHECK(realize({ForbRowKind::MIStar, 3, "000"}) == star_extend(tucker_matrix(TuckerFamily::MI, 3)));
    CHECK(realize({ForbRowKind::MIStar, 3, "111"}) ==
          row_complement("111", star_extend(tucker_matrix(TuckerFamily::MI, 3))));
    CHECK(realize({ForbRowKind::CoMVStar, 4, ""}) == complement(star_extend(tucker_matrix(TuckerFamily::MV))));
    CHECK_THROWS_AS(realize({ForbRowKind::MIStar, 3, "001"}), InvalidMember);
}

TEST_CASE("tucker reduction") {
    auto mi3s = star_extend(tucker_matrix(TuckerFamily::MI, 3));
    auto red = tucker_reduction_at(mi3s, 4);
    CHECK(red.a == "000");
    CHECK(red.reduced == mi3s);

    auto m = BinaryMatrix::from_dense({"01", "11"});
    auto red2 = tucker_reduction_at(m, 1);
    CHECK(red2.a == "01");
    CHECK(red2.reduced == BinaryMatrix::from_dense({"01", "00"}));

    std::mt19937_64 rng(4);
    for (int t = 0; t < 500; ++t) {
        auto mm = random_matrix(rng, 1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 7), 0.5);
        auto r = tucker_reduction(mm);
        CHECK(r.reduced.column(r.z) == BinarySequence(static_cast<size_t>(mm.rows()), '0'));
        CHECK(row_complement(r.a, r.reduced) == mm);
        // recognition agrees through the reduction
        CHECK(circ1p_test(mm).has_value() == c1p_test(r.reduced).has_value());
    }
}

TEST_CASE("circ1p witnesses and brute agreement") {
    auto mi3 = tucker_matrix(TuckerFamily::MI, 3);
    auto w = circ1p_test(mi3);
    REQUIRE(w.has_value());
    CHECK(ones_circular_under(mi3, *w));
    CHECK_FALSE(circ1p_test(star_extend(mi3)).has_value());
    CHECK(circ1p_test(BinaryMatrix::from_dense({"1111"})).has_value());

    std::mt19937_64 rng(8);
    for (int t = 0; t < 4000; ++t) {
        auto m = random_matrix(rng, 1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 7), 0.45);
        auto got = circ1p_test(m);
        REQUIRE(got.has_value() == brute_circ1p(m));
        if (got) CHECK(ones_circular_under(m, *got));
    }
}

TEST_CASE("masked star extensions of M_II and M_III reduce to M_I*") {
    for (int k = 4; k <= 8; ++k) {
        BinarySequence m11(static_cast<size_t>(k), '0');
        m11[static_cast<size_t>(k) - 2] = m11[static_cast<size_t>(k) - 1] = '1';
        auto mii_star = star_extend(tucker_matrix(TuckerFamily::MII, k));
        std::vector<int> phi;
        for (int j = 1; j <= k - 1; ++j) phi.push_back(j);
        phi.push_back(k + 1);
        phi.push_back(k);
        auto extracted = submatrix(mii_star, Embedding{IndexMap::identity(k), IndexMap(phi)});
        CHECK(row_complement(m11, extracted) == star_extend(tucker_matrix(TuckerFamily::MI, k)));
    }
    for (int k = 3; k <= 8; ++k) {
        BinarySequence m1(static_cast<size_t>(k), '0');
        m1[static_cast<size_t>(k) - 1] = '1';
        CHECK(row_complement(m1, tucker_matrix(TuckerFamily::MIII, k)) ==
              star_extend(tucker_matrix(TuckerFamily::MI, k)));
    }
}

TEST_CASE("witness lift cases from the reduction") {
    std::mt19937_64 rng(21);
    // host = a' (+) (T with appended zero column z); witness = identity maps
    auto run_case = [&](TuckerFamily f, int k) {
        auto t = tucker_matrix(f, k);
        auto tstar = star_extend(t);
        BinarySequence ap = random_seq(rng, t.rows());
        auto host = row_complement(ap, tstar);
        TuckerReduction red{tstar, t.cols() + 1, ap};
        TuckerWitness w{f, t.rows(), Embedding{IndexMap::identity(t.rows()), IndexMap::identity(t.cols())}};
        return lift_tucker(host, red, w);  // lift_tucker asserts re-extraction internally
    };
    for (int k = 3; k <= 7; ++k) {
        auto r = run_case(TuckerFamily::MI, k);
        CHECK_FALSE(r.mvstar);
        CHECK(r.e.col_map.targets.back() == k + 1);  // z appended last
    }
    for (int k = 4; k <= 7; ++k) {
        auto r = run_case(TuckerFamily::MII, k);
        CHECK_FALSE(r.mvstar);
        CHECK(r.e.col_map.targets[static_cast<size_t>(k) - 1] == k + 1);  // z placed before sigma'(k)
        CHECK(r.e.col_map.targets.back() == k);
    }
    for (int k = 3; k <= 7; ++k) {
        auto r = run_case(TuckerFamily::MIII, k);
        CHECK_FALSE(r.mvstar);
        CHECK(static_cast<int>(r.e.col_map.targets.size()) == k + 1);  // no z used
    }
    {
        auto r = run_case(TuckerFamily::MIV, 4);
        CHECK(r.mvstar);
        CHECK(r.e.col_map.targets == std::vector<int>{2, 1, 5, 6, 4, 3});
    }
    {
        auto r = run_case(TuckerFamily::MV, 4);
        CHECK(r.mvstar);
        CHECK(r.e.col_map.targets == std::vector<int>{1, 2, 3, 4, 5, 6});
    }
}

TEST_CASE("mvstar classification table equals direct computation") {
    auto mvs = star_extend(tucker_matrix(TuckerFamily::MV));
    for (int mask = 0; mask < 16; ++mask) {
        BinarySequence a(4, '0');
        for (int b = 0; b < 4; ++b)
            if (mask & (1 << (3 - b))) a[static_cast<size_t>(b)] = '1';
        const auto& entry = mvstar_classify(a);
        auto masked = row_complement(a, mvs);
        CHECK(submatrix(masked, Embedding{entry.rho, entry.sigma}) == realize(entry.member));
    }
    CHECK(mvstar_classify("0000").member.kind == ForbRowKind::MVStar);
    CHECK(mvstar_classify("0100").member.kind == ForbRowKind::MIV);
    CHECK(mvstar_classify("0100").sigma.targets == std::vector<int>{2, 1, 6, 5, 3, 4});
    CHECK(mvstar_classify("1111").member.kind == ForbRowKind::CoMVStar);
    CHECK(mvstar_classify("1111").rho.targets == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("certified finder on the pinned examples") {
    auto mi3s = star_extend(tucker_matrix(TuckerFamily::MI, 3));
    auto cert = find_forbrow(mi3s);
    CHECK(cert.member.kind == ForbRowKind::MIStar);
    CHECK(cert.member.k == 3);
    CHECK(cert.member.mask == "000");
    CHECK(cert.c == "000");
    CHECK(verify_forbrow(mi3s, cert));

    auto mvs = star_extend(tucker_matrix(TuckerFamily::MV));
    auto cert2 = find_forbrow(mvs);
    CHECK(cert2.member.kind == ForbRowKind::MVStar);
    CHECK(cert2.c == realize(cert2.member).column(6));

    auto comiv = complement(tucker_matrix(TuckerFamily::MIV));
    auto cert3 = find_forbrow(comiv);
    CHECK(cert3.member.kind == ForbRowKind::CoMIV);

    CHECK_THROWS_AS(find_forbrow(tucker_matrix(TuckerFamily::MI, 3)), PreconditionError);
}

TEST_CASE("certified finder on a random corpus") {
    std::mt19937_64 rng(31);
    int certified = 0;
    for (int t = 0; t < 3000; ++t) {
        double density = 0.1 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0;
        auto m = random_matrix(rng, 1 + static_cast<int>(rng() % 12), 1 + static_cast<int>(rng() % 12), density);
        if (circ1p_test(m)) continue;
        auto cert = find_forbrow(m);
        REQUIRE(verify_forbrow(m, cert));
        // the witness matrix itself fails the circular-ones test
        CHECK_FALSE(circ1p_test(realize(cert.member)).has_value());
        ++certified;
    }
    CHECK(certified > 500);
}

TEST_CASE("forbrow enumeration counts") {
    std::vector<size_t> want{2, 10, 8, 13, 18, 30};
    for (int k = 3; k <= 8; ++k) CHECK(forbrow_enumerate(k).size() == want[static_cast<size_t>(k) - 3]);
    CHECK_THROWS_AS(forbrow_enumerate(2), InvalidParameter);
}

TEST_CASE("forbidden members fail, deletions pass, configurations distinct") {
    for (int k = 3; k <= 6; ++k) {
        auto members = forbrow_enumerate(k);
        std::vector<std::string> canon;
        for (const auto& mem : members) {
            auto m = realize(mem);
            CHECK_FALSE(circ1p_test(m).has_value());
            if (k <= 5) CHECK_FALSE(brute_circ1p(m));
            for (int i = 1; i <= m.rows(); ++i) CHECK(circ1p_test(drop_rowcol(m, i, 0)).has_value());
            for (int j = 1; j <= m.cols(); ++j) CHECK(circ1p_test(drop_rowcol(m, 0, j)).has_value());
            canon.push_back(canonical_config(m));
        }
        std::sort(canon.begin(), canon.end());
        CHECK(std::adjacent_find(canon.begin(), canon.end()) == canon.end());
    }
}

TEST_CASE("masks equal up to shifts and reversals give one configuration") {
    std::mt19937_64 rng(55);
    for (int k = 3; k <= 7; ++k) {
        for (int t = 0; t < 20; ++t) {
            auto a = random_seq(rng, k);
            auto base = star_extend(tucker_matrix(TuckerFamily::MI, k));
            auto c0 = canonical_config(row_complement(a, base));
            CHECK(canonical_config(row_complement(shift_seq(a), base)) == c0);
            CHECK(canonical_config(row_complement(reverse_seq(a), base)) == c0);
        }
    }
}

TEST_CASE("minimal forbidden submatrix audits (brute)") {
    auto mi3s = star_extend(tucker_matrix(TuckerFamily::MI, 3));
    auto all = brute_minimal_forbidden(mi3s);
    REQUIRE(all.size() == 1);
    CHECK(all[0].rows == std::vector<int>{1, 2, 3});
    CHECK(all[0].cols == std::vector<int>{1, 2, 3, 4});
    for (const auto& a : enumerate_A_k(4)) {
        auto m = realize({ForbRowKind::MIStar, 4, a});
        auto mins = brute_minimal_forbidden(m);
        REQUIRE(mins.size() == 1);
        CHECK(mins[0].rows.size() == 4);
        CHECK(mins[0].cols.size() == 5);
    }
}

TEST_CASE("verify_forbrow rejects corrupted certificates") {
    auto mi3s = star_extend(tucker_matrix(TuckerFamily::MI, 3));
    auto cert = find_forbrow(mi3s);
    REQUIRE(verify_forbrow(mi3s, cert));
    auto bad = cert;
    bad.embedding.col_map.targets[0] = bad.embedding.col_map.targets[0] % 4 + 1;
    CHECK_FALSE(verify_forbrow(mi3s, bad));
    auto bad2 = cert;
    bad2.member.mask = "001";
    bad2.member.k = 3;
    CHECK_FALSE(verify_forbrow(mi3s, bad2));
}
