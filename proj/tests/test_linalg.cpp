#include "specht/fp.hpp"
#include "specht/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace specht;

TEST(Integer, Valuations) {
    EXPECT_EQ(p_valuation(8, 2), 3);
    EXPECT_EQ(p_valuation(9, 3), 2);
    EXPECT_EQ(p_valuation(81 * 7, 3), 4);
    EXPECT_EQ(p_valuation(-12, 2), 2);
    EXPECT_THROW(p_valuation(0, 2), ZeroValuationError);
    EXPECT_THROW(p_valuation(8, 4), NotPrimeError);
}

TEST(Hnf, Examples) {
    auto I = IntMatrix::identity(3);
    auto r = hnf(I);
    EXPECT_EQ(r.H, I);
    EXPECT_EQ(r.U, I);
    IntMatrix d{{2, 0}, {0, 3}};
    EXPECT_EQ(hnf(d).H, d);
    IntMatrix a{{2, 4}, {0, 3}};
    auto h = hnf(a);
    IntMatrix expect{{2, 1}, {0, 3}};
    EXPECT_EQ(h.H, expect);
    EXPECT_EQ(h.U * a, h.H);
    EXPECT_TRUE(is_hnf(h.H));
}

TEST(Hnf, RandomUnimodularTransform) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix a(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a(i, j) = static_cast<long>(rng() % 11) - 5;
        if (determinant(a) == 0) continue;
        auto h = hnf(a);
        EXPECT_TRUE(is_hnf(h.H));
        EXPECT_EQ(h.U * a, h.H);
        EXPECT_EQ(abs(determinant(h.U)), Int(1));
        // modular variant agrees when D is a multiple of the determinant
        auto hm = hnf_mod(a.to_rows(), 4, abs(determinant(a)));
        EXPECT_EQ(hm, h.H);
    }
}

TEST(Hnf, RankDeficient) {
    IntMatrix a{{1, 2}, {2, 4}};
    EXPECT_THROW(hnf(a), RankDeficientError);
}

TEST(Snf, Examples) {
    IntMatrix d{{6, 0}, {0, 4}};
    auto s = snf(d);
    EXPECT_EQ(s.divisors, (std::vector<Int>{2, 12}));
    EXPECT_EQ(s.U2 * d * s.U1, (IntMatrix{{2, 0}, {0, 12}}));
    auto id = snf(IntMatrix::identity(3));
    EXPECT_EQ(id.divisors, (std::vector<Int>{1, 1, 1}));
    IntMatrix z{{2, 3}, {0, 0}};
    EXPECT_EQ(snf(z).divisors, (std::vector<Int>{1, 0}));
}

TEST(Lattice, IndexAndIntersection) {
    auto M = ZLattice::standard(5, 6, 1);
    EXPECT_EQ(order_ideal_index(M, M), Int(1));
    EXPECT_EQ(order_ideal_index(M, M.scaled(3)), Int(243));
    auto L2 = M.scaled(2), L3 = M.scaled(3);
    EXPECT_EQ(lattice_intersection(L2, L3), M.scaled(6));
    EXPECT_EQ(lattice_intersection(L2, L2), L2);
    EXPECT_EQ(lattice_sum(L2, L3), M);
    EXPECT_THROW(order_ideal_index(L2, M), NotSublatticeError);
    EXPECT_THROW(lattice_intersection(M, ZLattice::standard(4, 5, 1)), AmbientMismatchError);
}

TEST(Lattice, Coordinates) {
    IntMatrix b{{2, 1}, {0, 3}};
    ZLattice L(b, 3, 1);
    auto x = L.coordinates({Int(4), Int(5)});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, (std::vector<Int>{2, 1}));
    EXPECT_FALSE(L.contains(std::vector<Int>{Int(1), Int(0)}));
    EXPECT_EQ(L.det(), Int(6));
    EXPECT_TRUE(L.contains(std::vector<Int>{L.exponent(), Int(0)}));
}

TEST(Fp, Nullspaces) {
    FpMatrix z(5, 3, 3);
    EXPECT_EQ(left_nullspace(z).dim(), 3u);
    EXPECT_EQ(left_nullspace(FpMatrix::identity(5, 3)).dim(), 0u);
    auto k = nullspace_mod_p(IntMatrix{{1, 1}, {1, 1}}, 2);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (FpVec{1, 1}));
}

TEST(Fp, InverseAndSubspaces) {
    FpMatrix a = FpMatrix::from_rows(7, {{1, 2, 3}, {0, 1, 4}, {5, 6, 0}}, 3);
    EXPECT_EQ(a * fp_inverse(a), FpMatrix::identity(7, 3));
    Subspace u(7, 3), w(7, 3);
    u.add({1, 0, 0});
    u.add({0, 1, 0});
    w.add({0, 1, 0});
    w.add({0, 0, 1});
    auto i = u.intersect(w);
    EXPECT_EQ(i.dim(), 1u);
    EXPECT_TRUE(i.contains({0, 3, 0}));
    EXPECT_EQ(u.annihilator().dim(), 1u);
}
