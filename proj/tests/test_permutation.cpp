#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wreath/wreath.hpp"

using namespace wreath;

namespace {

Tableau random_tableau(std::mt19937& rng, const Composition& shape, int max_entry) {
    std::uniform_int_distribution<int> d(1, max_entry);
    std::vector<int> e(shape.size());
    for (int& v : e) v = d(rng);
    return Tableau(shape, e);
}

Permutation random_permutation(std::mt19937& rng, int n) {
    auto img = Permutation::identity(n).images();
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

}  // namespace

TEST(Permutation, RightActionComposition) {
    const auto a = Permutation::from_cycles(3, {{1, 2}});
    const auto b = Permutation::from_cycles(3, {{2, 3}});
    // (1)(ab) = ((1)a)b = (2)b = 3
    EXPECT_EQ((a * b)(1), 3);
    EXPECT_EQ(to_cycle_string(a * b), "(1,3,2)");
    EXPECT_EQ(to_cycle_string(Permutation::identity(4)), "e");
}

TEST(Permutation, CycleStringRoundTrip) {
    const auto s = parse_cycles("(1,12,3,6)(5,7,13)(8,10)", 13);
    EXPECT_EQ(to_cycle_string(s), "(1,12,3,6)(5,7,13)(8,10)");
    EXPECT_EQ(to_cycle_string(parse_cycles("(6,9,8,7)", 9)), "(6,9,8,7)");
    EXPECT_EQ(to_cycle_string(parse_cycles("(9,8,7,6)", 9)), "(6,9,8,7)");
    EXPECT_TRUE(parse_cycles("e", 5).is_identity());
    EXPECT_THROW(parse_cycles("(1,2", 3), Error);
    EXPECT_THROW(parse_cycles("(1,4)", 3), Error);
    EXPECT_THROW(Permutation(std::vector<int>{1, 1}), Error);
}

TEST(Length, Examples) {
    EXPECT_EQ(length(Permutation::identity(5)), 0);
    for (int j = 1; j < 6; ++j) EXPECT_EQ(length(Permutation::transposition(6, j, j + 1)), 1);
    const Permutation reversal(std::vector<int>{4, 3, 2, 1});
    EXPECT_EQ(oracle::inversions(reversal), 6);
    EXPECT_EQ(length(reversal), 6);
}

TEST(Length, MatchesInversionCount) {
    for (int n = 0; n <= 6; ++n)
        for (const auto& s : oracle::permutations(n)) EXPECT_EQ(length(s), oracle::inversions(s));
}

TEST(Descents, Examples) {
    EXPECT_TRUE(descents(Permutation::identity(4)).empty());
    EXPECT_EQ(descents(Permutation::transposition(2, 1, 2)), std::vector<int>{1});
    EXPECT_EQ(descents(Permutation(std::vector<int>{2, 3, 1})), std::vector<int>{2});
}

TEST(TableauAction, ThirteenBoxExample) {
    const auto tau = Tableau::from_rows({5, 3, 4, 1}, {{1, 2, 1, 3, 2}, {2, 3, 2}, {2, 3, 1, 3}, {1}});
    const auto sigma = parse_cycles("(1,12,3,6)(5,7,13)(8,10)", 13);
    const auto expected = Tableau::from_rows({5, 3, 4, 1}, {{2, 2, 3, 3, 1}, {1, 2, 3}, {2, 2, 1, 1}, {3}});
    EXPECT_EQ(act_on_tableau(tau, sigma), expected);
    EXPECT_EQ(act_on_tableau(tau, Permutation::identity(13)), tau);
    EXPECT_EQ(act_on_tableau(act_on_tableau(tau, sigma), sigma.inverse()), tau);
}

TEST(TableauAction, DegreeMismatchThrows) {
    try {
        act_on_tableau(Tableau::from_rows({{1, 2}}), Permutation::identity(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "degree_mismatch");
    }
}

TEST(TableauAction, IsARightActionOnRandomInputs) {
    std::mt19937 rng(20241016);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + int(rng() % 9);
        const auto shape = enumerate_strict_compositions(n)[rng() % (1u << (n - 1))];
        const auto tau = random_tableau(rng, shape, 4);
        const auto s = random_permutation(rng, n), p = random_permutation(rng, n);
        EXPECT_EQ(act_on_tableau(act_on_tableau(tau, s), p), act_on_tableau(tau, s * p));
        EXPECT_EQ(act_on_tableau(act_on_tableau(tau, s), s.inverse()), tau);
        EXPECT_EQ(content_type(act_on_tableau(tau, s)), content_type(tau));
    }
}
