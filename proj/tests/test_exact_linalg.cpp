#include <gtest/gtest.h>

#include <random>

#include "liekn/liekn.hpp"
#include "oracle.hpp"

using namespace liekn;

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, -2).str(), "-1/2");
    EXPECT_EQ(Rational(0, 5).str(), "0");
    EXPECT_EQ(Rational(6, 3).str(), "2");
    EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
}

TEST(Rational, ParseRejectsMalformed) {
    for (const char* bad : {"1/0", "", "/", "1/", "a", "1.5", "--1", "1/-2", " 1", "+1"})
        EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, BigValuesStayExact) {
    Rational x = Rational::parse("123456789012345678901234567890/7");
    Rational y = x * x - x * x;
    EXPECT_TRUE(y.is_zero());
    EXPECT_EQ((x / x).str(), "1");
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(-1), Rational(-1, 2));
    EXPECT_GT(Rational(1, 3), Rational(1, 4));
}

TEST(Matrix, Product) {
    const Matrix a{{1, 2}, {3, 4}}, b{{0, 1}, {1, 0}};
    EXPECT_EQ(a * b, (Matrix{{2, 1}, {4, 3}}));
    EXPECT_THROW(a * Matrix(3, 3), DimensionError);
}

TEST(Matrix, InvertDiagonal) {
    auto inv = invert(Matrix::diagonal({2, Rational(1, 2)}));
    ASSERT_TRUE(inv);
    EXPECT_EQ(*inv, Matrix::diagonal({Rational(1, 2), 2}));
    EXPECT_FALSE(invert(Matrix{{1, 2}, {2, 4}}));
}

TEST(Matrix, Solve) {
    auto x = solve(Matrix{{1, 1}, {0, 1}}, Vector{3, 1});
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, (Vector{2, 1}));
    EXPECT_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Vector{1, 2}));
}

TEST(Matrix, KernelAndRank) {
    const Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    EXPECT_EQ(rank(m), 2u);
    auto k = kernel_vector(m);
    ASSERT_TRUE(k);
    EXPECT_FALSE(k->is_zero());
    EXPECT_TRUE((m * *k).is_zero());
    EXPECT_FALSE(kernel_vector(Matrix::identity(3)));
}

TEST(Matrix, DeterminantMatchesLeibniz) {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> d(-3, 3);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(d(gen), 1 + (trial % 3));
            EXPECT_EQ(determinant(m).gmp(), oracle::det(oracle::from(m))) << m;
            if (auto inv = invert(m)) {
                EXPECT_EQ(m * *inv, Matrix::identity(n));
                EXPECT_NE(determinant(m), Rational(0));
            } else {
                EXPECT_EQ(determinant(m), Rational(0));
            }
        }
}

TEST(Matrix, Shapes) {
    EXPECT_THROW((Matrix{{1, 2}, {3}}), DimensionError);
    EXPECT_THROW(Matrix(2, 2) + Matrix(2, 3), DimensionError);
    EXPECT_TRUE((Matrix{{0, 1}, {-1, 0}}).is_antisymmetric());
    EXPECT_TRUE((Matrix{{1, 2}, {2, 1}}).is_symmetric());
    EXPECT_EQ(power(Matrix{{1, 1}, {0, 1}}, 3), (Matrix{{1, 3}, {0, 1}}));
    EXPECT_EQ(trace(Matrix{{1, 9}, {9, 4}}), Rational(5));
}
