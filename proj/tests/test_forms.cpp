#include "specht/forms.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace specht;

TEST(Feasibility, Bounds) {
    EXPECT_NO_THROW(check_feasible(12, 3));
    EXPECT_THROW(check_feasible(13, 3), FeasibilityError);
    EXPECT_THROW(check_feasible(10, 4), FeasibilityError);
    EXPECT_THROW(check_feasible(5, 4), FeasibilityError);
    EXPECT_THROW(enumerate_p_forms(13, 3, 2), FeasibilityError);
}

TEST(Lattices, NormalizeAndLocalize) {
    auto S = ZLattice::standard(6, 5, 2);
    EXPECT_EQ(normalize(S.scaled(8), 2), S);
    EXPECT_EQ(localize(S.scaled(3), 2), S);
    EXPECT_EQ(localize(S.scaled(12), 2), S.scaled(4));
    EXPECT_TRUE(has_p_power_index(s1_lattice(5), 2));
    EXPECT_FALSE(has_p_power_index(S.scaled(6), 2));
}

TEST(Lattices, NamedIndices) {
    EXPECT_EQ(craig_plesken_lattice(8, 4).det(), ipow(4, 6));
    EXPECT_EQ(s1_lattice(7).det(), Int(2));
    EXPECT_EQ(s2_lattice(7).det(), ipow(2, 14));
    EXPECT_THROW(craig_plesken_lattice(6, 4), std::invalid_argument);
    EXPECT_THROW(s2_lattice(6), std::invalid_argument);
}

TEST(Iso, HomGenerator) {
    auto ctx = build_hook_specht(5, 2);
    auto S = ZLattice::standard(ctx->rank(), 5, 2);
    EXPECT_TRUE(is_isomorphic_at_p(S, S.scaled(2), 2, *ctx));
    EXPECT_FALSE(is_isomorphic_at_p(S, s1_lattice(5), 2, *ctx));
    EXPECT_FALSE(is_isomorphic_at_p(s1_lattice(5), s2_lattice(5), 2, *ctx));
    // S1 and S2 agree with S away from 2
    EXPECT_TRUE(is_isomorphic_at_p(S, s1_lattice(5), 3, *ctx));
    auto h = hom_generator(S, S.scaled(4), *ctx);
    EXPECT_EQ(h.det_valuation(2, S, S.scaled(4)), 0);
}

TEST(Maximal, HeadSizes) {
    auto S5 = ZLattice::standard(6, 5, 2);
    auto m5 = maximal_sublattices(S5, 2);
    ASSERT_EQ(m5.size(), 1u);
    EXPECT_EQ(m5[0].det(), Int(2));
    auto S7 = ZLattice::standard(15, 7, 2);
    auto m7 = maximal_sublattices(S7, 2);
    ASSERT_EQ(m7.size(), 2u);
    std::set<long> idx;
    for (auto& L : m7) idx.insert(p_valuation(L.det(), 2));
    EXPECT_EQ(idx, (std::set<long>{1, 14}));
    // p does not divide n and p odd: S/pS is simple
    auto m = maximal_sublattices(S7, 3);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m[0], S7.scaled(3));
}

TEST(Enumerate, NaturalModule) {
    for (int n : {4, 6, 8}) {
        auto cls = enumerate_p_forms(n, 1, 2);
        ASSERT_EQ(cls.size(), static_cast<std::size_t>(p_valuation(n, 2) + 1)) << n;
        for (long long d = 1; n % d == 0 && d <= n; d *= 2) EXPECT_TRUE(find_class(cls, craig_plesken_lattice(n, d), 2)) << n << " " << d;
    }
    EXPECT_EQ(enumerate_p_forms(9, 1, 3).size(), 3u);
    EXPECT_EQ(enumerate_p_forms(7, 1, 3).size(), 1u);
}

TEST(Enumerate, OddPrimeHooks) {
    EXPECT_EQ(enumerate_p_forms(6, 2, 3).size(), 2u);
    EXPECT_EQ(enumerate_p_forms(9, 2, 3).size(), 3u);
    EXPECT_EQ(enumerate_p_forms(7, 2, 3).size(), 1u);
    EXPECT_EQ(enumerate_p_forms(10, 3, 5).size(), 2u);
}

TEST(Enumerate, TwoModularOdd) {
    auto cls = enumerate_p_forms(5, 2, 2);
    ASSERT_EQ(cls.size(), 3u);
    std::set<std::size_t> hit;
    for (auto& L : {ZLattice::standard(6, 5, 2), s1_lattice(5), s2_lattice(5)}) {
        auto c = find_class(cls, L, 2);
        ASSERT_TRUE(c);
        hit.insert(*c);
    }
    EXPECT_EQ(hit.size(), 3u);
}

TEST(Enumerate, TwoModularTwoModFour) {
    auto cls = enumerate_p_forms(6, 2, 2);
    ASSERT_EQ(cls.size(), 4u);
    std::set<std::size_t> hit;
    auto named = t_chain(6);
    named.push_back(ZLattice::standard(10, 6, 2));
    for (auto& L : named) {
        auto c = find_class(cls, L, 2);
        ASSERT_TRUE(c);
        hit.insert(*c);
    }
    EXPECT_EQ(hit.size(), 4u);
}

TEST(Enumerate, DualPartnersAndBrauerNesbitt) {
    for (auto [n, k, p] : {std::tuple{5, 2, 2}, {6, 2, 2}, {9, 2, 3}, {8, 1, 2}}) {
        auto cls = enumerate_p_forms(n, k, p);
        for (std::size_t i = 0; i < cls.size(); ++i) {
            ASSERT_TRUE(cls[i].dual_partner);
            EXPECT_EQ(cls[*cls[i].dual_partner].dual_partner, i);
            EXPECT_EQ(cls[i].composition, cls[0].composition);
            EXPECT_FALSE(in_p_reference(cls[i].lattice, p));
            EXPECT_TRUE(has_p_power_index(cls[i].lattice, p));
        }
    }
}

TEST(Enumerate, Deterministic) {
    auto a = enumerate_p_forms(6, 2, 2, {64, 40, 11});
    auto b = enumerate_p_forms(6, 2, 2, {64, 40, 12345});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].lattice, b[i].lattice);
        EXPECT_EQ(a[i].loewy, b[i].loewy);
    }
}

TEST(Enumerate, CapReported) { EXPECT_THROW(enumerate_p_forms(6, 2, 2, {2, 40, kDefaultSeed}), CapExceededError); }

TEST(Exterior, TransferMatchesEnumeration) {
    auto t = exterior_transfer(6, 2, 3);
    auto e = enumerate_p_forms(6, 2, 3);
    ASSERT_EQ(t.size(), e.size());
    for (auto& c : t) EXPECT_TRUE(find_class(e, c.lattice, 3));
}

TEST(Global, Counts) {
    // three classes at 2 and two at 5
    auto g5 = global_forms(5, 2);
    EXPECT_EQ(g5.forms.size(), 6u);
    EXPECT_EQ(g5.distinct_signatures, 6u);
    auto g6 = global_forms(6, 2);
    EXPECT_EQ(g6.forms.size(), 8u);
    EXPECT_EQ(g6.distinct_signatures, 8u);
    EXPECT_TRUE(g6.index_multiplicative);
    for (auto& f : g6.forms) EXPECT_TRUE(f.localization_ok);
}

TEST(Census, Predictions) {
    auto p63 = predicted_h2(6, 3);
    ASSERT_EQ(p63.size(), 2u);
    auto recs = conjecture_census(6, 6, 3);
    ASSERT_EQ(recs.size(), 3u);
    auto& r = recs[2];
    EXPECT_EQ(r.k, 3);
    EXPECT_EQ(r.expected, 4);
    EXPECT_EQ(r.source, "THEOREM");
    EXPECT_EQ(r.alternatives, (std::vector<long long>{8}));
    EXPECT_EQ(r.status, "MATCH");
    EXPECT_TRUE(conjecture_census(9, 8, 2).empty());
}
