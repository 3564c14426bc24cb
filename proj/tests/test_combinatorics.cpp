#include "specht/combinatorics.hpp"

#include <gtest/gtest.h>

using namespace specht;

TEST(Permutation, ComposesRightFactorFirst) {
    auto a = Permutation::transposition(3, 1, 2);
    auto b = Permutation::transposition(3, 2, 3);
    auto ab = a * b;  // 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    EXPECT_EQ(ab.images(), (std::vector<int>{2, 3, 1}));
    EXPECT_EQ(ab * ab.inverse(), Permutation::identity(3));
}

TEST(Permutation, Sign) {
    EXPECT_EQ(Permutation::identity(5).sign(), 1);
    EXPECT_EQ(Permutation::transposition(5, 2, 4).sign(), -1);
    EXPECT_EQ(Permutation({2, 3, 1}).sign(), 1);
}

TEST(Permutation, RejectsBadInput) {
    EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
    EXPECT_THROW(Permutation::identity(3) * Permutation::identity(4), DegreeMismatchError);
}

TEST(Partition, Validation) {
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_EQ(Partition::hook(6, 2).parts(), (std::vector<int>{4, 1, 1}));
    EXPECT_EQ(Partition({4, 1, 1}).conjugate().parts(), (std::vector<int>{3, 1, 1, 1}));
}

TEST(Tabloids, Counts) {
    EXPECT_EQ(enumerate_tabloids(Partition({3})).size(), 1u);
    EXPECT_EQ(enumerate_tabloids(Partition({2, 1})).size(), 3u);
    for (int n = 3; n <= 8; ++n) EXPECT_EQ(enumerate_tabloids(Partition({n - 1, 1})).size(), static_cast<std::size_t>(n));
    // multinomial 6!/(3!2!1!)
    EXPECT_EQ(enumerate_tabloids(Partition({3, 2, 1})).size(), 60u);
    auto t = enumerate_tabloids(Partition({2, 2}));
    EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
}

TEST(Tabloids, Action) {
    Tabloid t{{{1, 2}, {3}}};
    EXPECT_EQ(act_on_tabloid(Permutation::identity(3), t), t);
    EXPECT_EQ(act_on_tabloid(Permutation::transposition(3, 1, 2), t), t);
    Tabloid expect{{{1, 3}, {2}}};
    EXPECT_EQ(act_on_tabloid(Permutation::transposition(3, 2, 3), t), expect);
    EXPECT_THROW(act_on_tabloid(Permutation::identity(4), t), DegreeMismatchError);
}

TEST(StandardTableaux, HookLengthCounts) {
    EXPECT_EQ(enumerate_standard_tableaux(Partition({2, 1})).size(), 2u);
    EXPECT_EQ(enumerate_standard_tableaux(Partition({3, 2})).size(), 5u);
    EXPECT_EQ(enumerate_standard_tableaux(Partition({4, 2})).size(), 9u);
    EXPECT_EQ(enumerate_standard_tableaux(Partition({3, 2, 1})).size(), 16u);
    for (auto& t : enumerate_standard_tableaux(Partition({3, 1, 1}))) EXPECT_TRUE(t.is_standard());
}

TEST(StandardTableaux, HookOrderMatchesSubsets) {
    int n = 6, k = 2;
    auto ts = enumerate_standard_tableaux(Partition::hook(n, k));
    auto subsets = combinations(2, n, k);
    ASSERT_EQ(ts.size(), subsets.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        auto col = ts[i].columns()[0];
        EXPECT_EQ(std::vector<int>(col.begin() + 1, col.end()), subsets[i]);
    }
}

TEST(Stabilizers, Orders) {
    int n = 7;
    auto t = enumerate_standard_tableaux(Partition({n - 2, 1, 1}))[0];
    EXPECT_EQ(row_stabilizer(t).order, factorial(n - 2));
    EXPECT_EQ(column_stabilizer(t).order, Int(6));
    auto col = enumerate_standard_tableaux(Partition({1, 1, 1, 1}))[0];
    EXPECT_EQ(row_stabilizer(col).order, Int(1));

    StandardTableau s{{{1, 2}, {3}}};
    std::vector<Permutation> elems;
    for_each_row_permutation(s, [&](const Permutation& p) { elems.push_back(p); });
    ASSERT_EQ(elems.size(), 2u);
    EXPECT_TRUE(std::find(elems.begin(), elems.end(), Permutation::identity(3)) != elems.end());
    EXPECT_TRUE(std::find(elems.begin(), elems.end(), Permutation::transposition(3, 1, 2)) != elems.end());
}

TEST(Combinations, Lex) {
    auto c = combinations(2, 5, 2);
    ASSERT_EQ(c.size(), 6u);
    EXPECT_EQ(c.front(), (std::vector<int>{2, 3}));
    EXPECT_EQ(c.back(), (std::vector<int>{4, 5}));
    EXPECT_TRUE(combinations(1, 3, 4).empty());
}
