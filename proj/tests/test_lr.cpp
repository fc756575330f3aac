#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "wreath/wreath.hpp"

using namespace wreath;

TEST(LrCoefficient, Examples) {
    EXPECT_EQ(lr_coefficient({3}, {2}, {1}), 1u);
    EXPECT_EQ(lr_coefficient({2, 1}, {1}, {1, 1}), 1u);
    EXPECT_EQ(lr_coefficient({2, 1}, {2}, {2}), 0u);
    EXPECT_EQ(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}), 2u);
    EXPECT_EQ(lr_coefficient({2}, {1, 1}, {}), 0u);
    EXPECT_EQ(lr_coefficient({}, {}, {}), 1u);
}

TEST(LrCoefficient, CountsLatticeSkewTableaux) {
    for (int total = 0; total <= 6; ++total)
        for (const auto& lambda : enumerate_partitions(total))
            for (int a = 0; a <= total; ++a)
                for (const auto& alpha : enumerate_partitions(a))
                    for (const auto& beta : enumerate_partitions(total - a)) {
                        Count direct = 0;
                        if (fits_inside(alpha.as_composition(), lambda))
                            for (const auto& t :
                                 enumerate_skew_ssyt(SkewShape(lambda, alpha.as_composition()), beta.as_composition()))
                                direct += is_lattice_word(reverse_reading_word(t));
                        EXPECT_EQ(lr_coefficient(lambda, alpha, beta), direct);
                    }
}

TEST(SchurOracle, PieriCases) {
    EXPECT_EQ(schur_product_oracle({1}, {1}), (SchurExpansion{{{2}, 1}, {{1, 1}, 1}}));
    EXPECT_EQ(schur_product_oracle({2}, {1}), (SchurExpansion{{{3}, 1}, {{2, 1}, 1}}));
    EXPECT_EQ(schur_product_oracle({}, {}), (SchurExpansion{{{}, 1}}));
}

TEST(SchurOracle, SquareOfTwoOne) {
    const auto e = schur_product_oracle({2, 1}, {2, 1});
    const SchurExpansion expected{{{4, 2}, 1}, {{4, 1, 1}, 1}, {{3, 3}, 1},    {{3, 2, 1}, 2},
                                  {{3, 1, 1, 1}, 1}, {{2, 2, 2}, 1}, {{2, 2, 1, 1}, 1}};
    EXPECT_EQ(e, expected);
    Count mass = 0, dim = 0;
    for (const auto& [lambda, c] : e) {
        mass += c;
        dim += c * specht_dimension(lambda);
    }
    EXPECT_EQ(e.size(), 7u);
    EXPECT_EQ(mass, 8u);
    // induction from S_3 x S_3 to S_6
    EXPECT_EQ(dim, specht_dimension({2, 1}) * specht_dimension({2, 1}) * binomial(6, 3));
}

TEST(SchurOracle, BoundIsEnforced) {
    EXPECT_THROW(schur_product_oracle({3}, {3}, 5), Error);
}

TEST(SchurOracle, DimensionsOfInducedModules) {
    for (int total = 0; total <= 7; ++total)
        for (int a = 0; a <= total; ++a)
            for (const auto& alpha : enumerate_partitions(a))
                for (const auto& beta : enumerate_partitions(total - a)) {
                    Count dim = 0;
                    for (const auto& [lambda, c] : schur_product_oracle(alpha, beta)) {
                        EXPECT_EQ(lambda.size(), total);
                        EXPECT_GT(c, 0u);
                        dim += c * specht_dimension(lambda);
                    }
                    EXPECT_EQ(dim, specht_dimension(alpha) * specht_dimension(beta) *
                                       binomial(unsigned(total), unsigned(a)));
                }
}

TEST(LrCoefficient, AgreesWithSchurOracleUpToSix) {
    const auto report = verify_lr_oracle(6);
    EXPECT_TRUE(report.ok()) << (report.failures.empty() ? "" : report.failures.front());
    EXPECT_GT(report.checked, 0u);
}

TEST(LrCoefficient, Symmetric) {
    for (int total = 0; total <= 8; ++total)
        for (const auto& lambda : enumerate_partitions(total))
            for (int a = 0; a <= total; ++a)
                for (const auto& alpha : enumerate_partitions(a))
                    for (const auto& beta : enumerate_partitions(total - a))
                        EXPECT_EQ(lr_coefficient(lambda, alpha, beta), lr_coefficient(lambda, beta, alpha));
}

TEST(LrMulti, Examples) {
    EXPECT_EQ(lr_multi({1, 1}, {{1}, {1}}), 1u);
    EXPECT_EQ(lr_multi({2}, {{2}}), 1u);
    EXPECT_EQ(lr_multi({2}, {{1, 1}}), 0u);
    EXPECT_EQ(lr_multi({}, {}), 1u);
    EXPECT_EQ(lr_multi({1}, {}), 0u);
    EXPECT_EQ(oracle::standard_tableaux({3, 2, 1}), 16u);
    EXPECT_EQ(lr_multi({3, 2, 1}, std::vector<Partition>(6, Partition{1})), 16u);
}

TEST(LrMulti, DegreeFilter) {
    EXPECT_EQ(lr_multi({2, 1}, {{1}, {1}}), 0u);
    EXPECT_EQ(lr_multi_direct({2, 1}, {{1}, {1}}), 0u);
    EXPECT_EQ(lr_multi({2}, {{1}, {1}, {1}}), 0u);
}

TEST(LrMulti, OrderInvariantAndCacheAgreesWithDirectRecursion) {
    for (int size = 0; size <= 6; ++size)
        for (const auto& lambda : enumerate_partitions(size))
            for (int t = 1; t <= 4; ++t)
                for (const auto& mp : enumerate_multipartitions(size, t)) {
                    const Count direct = lr_multi_direct(lambda, mp.components);
                    EXPECT_EQ(lr_multi(lambda, mp.components), direct);
                    auto reversed = mp.components;
                    std::reverse(reversed.begin(), reversed.end());
                    EXPECT_EQ(lr_multi_direct(lambda, reversed), direct);
                }
}

TEST(LrMulti, AllBoxesSeparatelyGivesSpechtDimension) {
    for (int m = 0; m <= 7; ++m)
        for (const auto& p : enumerate_partitions(m))
            EXPECT_EQ(lr_multi(p, std::vector<Partition>(m, Partition{1})), specht_dimension(p));
}

TEST(LrMulti, EmptyArgumentsAreIgnored) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int size = int(rng() % 6);
        const auto lambdas = enumerate_partitions(size);
        const auto& lambda = lambdas[rng() % lambdas.size()];
        const auto mps = enumerate_multipartitions(size, 3);
        auto parts = mps[rng() % mps.size()].components;
        const Count base = lr_multi_direct(lambda, parts);
        parts.insert(parts.begin() + long(rng() % (parts.size() + 1)), Partition{});
        EXPECT_EQ(lr_multi_direct(lambda, parts), base);
        EXPECT_EQ(lr_multi(lambda, parts), base);
    }
}
