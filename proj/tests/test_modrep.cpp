#include "specht/modrep.hpp"

#include <gtest/gtest.h>

using namespace specht;

namespace {

FpModule hook_mod(int n, int k, long long p) { return reduce_mod_p(build_hook_specht(n, k)->gens(), p); }

std::vector<std::string> tags(const std::vector<SimpleLabel>& ls) {
    std::vector<std::string> out;
    for (auto& l : ls) out.push_back(l.tag);
    return out;
}

std::vector<std::vector<std::string>> tags(const std::vector<std::vector<SimpleLabel>>& layers) {
    std::vector<std::vector<std::string>> out;
    for (auto& l : layers) out.push_back(tags(l));
    return out;
}

using Layers = std::vector<std::vector<std::string>>;

}  // namespace

TEST(Composition, NaturalModuleSimpleWhenCoprime) {
    for (auto [n, p] : {std::pair{5, 3}, {7, 3}, {6, 5}, {7, 5}}) {
        LabelOracle o(n, 1, p);
        auto cf = composition_factors(hook_mod(n, 1, p), o, kDefaultSeed);
        ASSERT_EQ(cf.size(), 1u) << n << " " << p;
        EXPECT_EQ(cf[0].dim, static_cast<std::size_t>(n - 1));
    }
}

TEST(Composition, S2ModTwoAtFive) {
    LabelOracle o(5, 2, 2);
    auto cf = composition_factors(hook_mod(5, 2, 2), o, kDefaultSeed);
    EXPECT_EQ(tags(cf), (std::vector<std::string>{"D(3,2)", "TRIVIAL", "TRIVIAL"}));
    std::size_t total = 0;
    for (auto& l : cf) total += l.dim;
    EXPECT_EQ(total, 6u);
}

TEST(Composition, TrivialModule) {
    LabelOracle o(4, 0, 3);
    auto cf = composition_factors(hook_mod(4, 0, 3), o, kDefaultSeed);
    EXPECT_EQ(tags(cf), (std::vector<std::string>{"TRIVIAL"}));
    // the sign character is a different simple at odd p
    FpModule sgn{3, 1, {}};
    for (int i = 0; i < 3; ++i) sgn.gens.push_back(FpMatrix::from_rows(3, {{2}}, 1));
    EXPECT_EQ(tags(composition_factors(sgn, o, kDefaultSeed)), (std::vector<std::string>{"SIGN"}));
}

TEST(Composition, SeedIndependent) {
    for (auto [n, k, p] : {std::tuple{6, 2, 2}, {6, 2, 3}, {9, 2, 3}}) {
        LabelOracle o(n, k, p);
        auto V = hook_mod(n, k, p);
        EXPECT_EQ(composition_factors(V, o, 1), composition_factors(V, o, 987654321));
    }
}

TEST(Composition, OddHooksDimensions) {
    for (auto [n, k, p] : {std::tuple{6, 2, 3}, {9, 3, 3}, {10, 2, 5}}) {
        LabelOracle o(n, k, p);
        auto a = analyze_module(hook_mod(n, k, p), o, kDefaultSeed);
        EXPECT_EQ(tags(a.loewy), (Layers{{hook_label(k + 1)}, {hook_label(k)}}));
        for (auto& l : a.composition) {
            int j = l.tag == hook_label(k) ? k : k + 1;
            EXPECT_EQ(static_cast<long long>(l.dim), binom(n - 2, j - 1));
        }
    }
}

TEST(Loewy, TwoModularByResidue) {
    LabelOracle o9(9, 2, 2), o7(7, 2, 2), o6(6, 2, 2);
    EXPECT_EQ(tags(loewy_series(hook_mod(9, 2, 2), o9, kDefaultSeed)), (Layers{{"TRIVIAL"}, {"D(7,2)"}, {"TRIVIAL"}}));
    EXPECT_EQ(tags(loewy_series(hook_mod(7, 2, 2), o7, kDefaultSeed)), (Layers{{"D(5,2)", "TRIVIAL"}}));
    EXPECT_EQ(tags(loewy_series(hook_mod(6, 2, 2), o6, kDefaultSeed)),
              (Layers{{"TRIVIAL"}, {"D(4,2)"}, {"TRIVIAL"}, {"D(5,1)"}}));
}

TEST(Loewy, LayersConcatenateToComposition) {
    for (auto [n, k, p] : {std::tuple{6, 2, 2}, {7, 3, 2}, {9, 2, 3}}) {
        LabelOracle o(n, k, p);
        auto a = analyze_module(hook_mod(n, k, p), o, kDefaultSeed);
        std::vector<SimpleLabel> all;
        for (auto& l : a.loewy) all.insert(all.end(), l.begin(), l.end());
        std::sort(all.begin(), all.end());
        EXPECT_EQ(all, a.composition);
    }
}

TEST(Loewy, DualReverses) {
    for (auto [n, k, p] : {std::tuple{5, 2, 2}, {6, 2, 2}, {9, 2, 3}}) {
        LabelOracle o(n, k, p);
        auto V = hook_mod(n, k, p);
        auto l = loewy_series(V, o, kDefaultSeed);
        auto d = loewy_series(dual_module(V), o, kDefaultSeed);
        std::reverse(d.begin(), d.end());
        EXPECT_EQ(l, d);
    }
}

TEST(Head, UniserialHasOneQuotient) {
    LabelOracle o(6, 2, 2);
    auto V = hook_mod(6, 2, 2);
    auto h = head_simple_quotients(V, o, kDefaultSeed);
    ASSERT_EQ(h.size(), 1u);
    EXPECT_EQ(h[0].label.tag, "TRIVIAL");
    EXPECT_EQ(rank(h[0].projection), 1u);
}

TEST(Head, SimpleModuleProjectsIsomorphically) {
    LabelOracle o(7, 1, 3);
    auto V = hook_mod(7, 1, 3);
    auto h = head_simple_quotients(V, o, kDefaultSeed);
    ASSERT_EQ(h.size(), 1u);
    EXPECT_EQ(h[0].projection.rows(), V.dim);
    EXPECT_EQ(rank(h[0].projection), V.dim);
}

TEST(Head, SemisimpleHasTwoQuotients) {
    LabelOracle o(7, 2, 2);
    auto V = hook_mod(7, 2, 2);
    auto h = head_simple_quotients(V, o, kDefaultSeed);
    ASSERT_EQ(h.size(), 2u);
    for (auto& q : h) {
        // kernel of each projection is a maximal submodule
        auto K = left_nullspace(q.projection);
        EXPECT_EQ(K.dim() + q.label.dim, V.dim);
        for (auto& g : V.gens)
            for (auto& v : K.basis()) EXPECT_TRUE(K.contains(vec_mul(v, g)));
    }
}

TEST(Head, MultiplicityReported) {
    // F + F at p = 2: the head has multiplicity two
    FpModule V{2, 2, {FpMatrix::identity(2, 2), FpMatrix::identity(2, 2)}};
    LabelOracle o(3, 1, 2);
    EXPECT_THROW(head_simple_quotients(V, o, kDefaultSeed), HeadNotMultiplicityFreeError);
}

TEST(Radical, SocleOfUniserial) {
    auto V = hook_mod(5, 2, 2);
    Meataxe mx(V.p, V.gens.size(), kDefaultSeed);
    auto types = module_types(V, mx);
    EXPECT_EQ(radical(V, types).radical.dim(), 5u);
    EXPECT_EQ(socle(V, types).dim(), 1u);
}

TEST(Iso, Examples) {
    auto V = hook_mod(6, 2, 2);
    EXPECT_TRUE(is_isomorphic(V, V));
    FpModule triv{2, 1, {}}, sgn{2, 1, {}};
    for (int i = 0; i < 3; ++i) {
        triv.gens.push_back(FpMatrix::identity(2, 1));
        sgn.gens.push_back(FpMatrix::from_int(IntMatrix{{-1}}, 2));
    }
    EXPECT_TRUE(is_isomorphic(triv, sgn));

    LabelOracle o(6, 2, 2);
    Meataxe m1(2, 5, kDefaultSeed);
    auto a = composition_factor_modules(hook_mod(6, 1, 2), m1);
    auto b = composition_factor_modules(reduce_mod_p(build_specht(Partition({4, 2}))->gens(), 2), m1);
    // both D(5,1) and D(4,2) have dimension 4; S(4,2) also contains D(5,1)
    int compared = 0;
    for (auto& x : a)
        for (auto& y : b) {
            if (x.mod.dim != 4 || y.mod.dim != 4) continue;
            bool same = o.label(x).tag == o.label(y).tag;
            EXPECT_EQ(is_isomorphic(x.mod, y.mod), same);
            compared += !same;
        }
    EXPECT_GT(compared, 0);
}

TEST(Iso, RejectsDifferentShapes) {
    EXPECT_FALSE(is_isomorphic(hook_mod(6, 1, 3), hook_mod(6, 2, 3)));
    auto V = hook_mod(6, 1, 5);
    auto W = V;
    // conjugate by a fixed invertible matrix
    FpMatrix P = FpMatrix::identity(5, V.dim);
    P(0, 1) = 3;
    P(2, 4) = 1;
    auto Pi = fp_inverse(P);
    for (auto& g : W.gens) g = Pi * g * P;
    EXPECT_TRUE(is_isomorphic(V, W));
}
