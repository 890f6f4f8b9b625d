#include "fmz/jordan.hpp"
#include "fmz/matrix.hpp"
#include "fmz/structure.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace fmz;
using namespace fmz::test;

TEST(Jordan, NormOfUnitAndDiagonal) {
    for (JordanKind k : kAllKinds) EXPECT_EQ(norm(Jordan<Int>::unit(k)), Int(1));
    EXPECT_EQ(norm(diag(JordanKind::Diag3, 2, 3, 5)), Int(30));
}

TEST(Jordan, SharpOfDiagonalIsAdjoint) {
    EXPECT_EQ(sharp(diag(JordanKind::Diag3, 2, 3, 5)), diag(JordanKind::Diag3, 15, 10, 6));
    for (JordanKind k : kAllKinds) EXPECT_EQ(sharp(Jordan<Int>::unit(k)), Jordan<Int>::unit(k));
}

TEST(Jordan, AdjointIdentity) {
    Rng rng(11);
    for (JordanKind k : kAllKinds) {
        for (int n = 0; n < 300; ++n) {
            auto A = rng.jordan(k, 10);
            ASSERT_EQ(sharp(sharp(A)), norm(A) * A) << kind_name(k);
        }
    }
}

TEST(Jordan, TraceSpurAndTraceForm) {
    Rng rng(12);
    for (JordanKind k : kAllKinds) {
        auto one = Jordan<Int>::unit(k);
        EXPECT_EQ(trace(one), Int(3));
        EXPECT_EQ(spur(one), Int(3));
        for (int n = 0; n < 100; ++n) {
            auto X = rng.jordan(k, 10), Y = rng.jordan(k, 10);
            ASSERT_EQ(trace_form(one, X), trace(X));
            Int s = spur(X + Y) - spur(X) - spur(Y);
            ASSERT_EQ(trace_form(X, Y), trace(X) * trace(Y) - s);
            ASSERT_EQ(trace_form(X, sharp(X)), 3 * norm(X));
        }
    }
}

TEST(Jordan, CrossProductIsPolarizedSharp) {
    Rng rng(13);
    for (JordanKind k : kAllKinds) {
        auto X = rng.jordan(k, 10);
        EXPECT_EQ(cross(X, X), 2 * sharp(X));
        auto Y = rng.jordan(k, 10);
        // N(X + Y) = N(X) + (X#, Y) + (X, Y#) + N(Y)
        EXPECT_EQ(norm(X + Y), norm(X) + trace_form(sharp(X), Y) + trace_form(X, sharp(Y)) + norm(Y));
    }
}

TEST(Jordan, MatrixModelOfH3BIsDeterminantAndAdjugate) {
    Rng rng(14);
    for (int n = 0; n < 200; ++n) {
        auto X = rng.jordan(JordanKind::H3B, 10);
        Matrix<Int> m = to_matrix3(X);
        ASSERT_EQ(norm(X), determinant(m));
        ASSERT_EQ(to_matrix3(sharp(X)), adjugate3(m));
        ASSERT_EQ(from_matrix3(m), X);
    }
}

TEST(Jordan, TripleProductOfUnits) {
    for (JordanKind k : kAllKinds) {
        auto one = Jordan<Int>::unit(k);
        EXPECT_EQ(triple_doubled(one, one, one), 2 * one);
    }
}

TEST(Jordan, TripleProductMatchesSquareInMatrixModel) {
    Rng rng(15);
    for (int n = 0; n < 100; ++n) {
        auto X = rng.jordan(JordanKind::H3B, 10);
        auto two_xx = triple_doubled(X, Jordan<Int>::unit(JordanKind::H3B), X);
        Matrix<Int> m = to_matrix3(X);
        ASSERT_EQ(to_matrix3(two_xx), Int(2) * (m * m));
    }
}

TEST(Jordan, JordanProductAndCayleyHamilton) {
    Rng rng(16);
    for (JordanKind k : kAllKinds) {
        for (int n = 0; n < 50; ++n) {
            auto Xi = rng.jordan(k, 6);
            std::vector<Rat> v;
            for (const auto& c : Xi.coords()) v.push_back(Rat(c));
            auto X = Jordan<Rat>::from_coords(k, v);
            auto one = Jordan<Rat>::unit(k);
            ASSERT_EQ(jordan_product(X, one), X);
            auto X2 = jordan_product(X, X);
            auto X3 = jordan_product(X2, X);
            auto ch = X3 - trace(X) * X2 + spur(X) * X - norm(X) * one;
            ASSERT_TRUE(ch.is_zero()) << kind_name(k);
        }
    }
}

TEST(Jordan, Rank) {
    EXPECT_EQ(jrank(Jordan<Int>::unit(JordanKind::H3O)), 3);
    EXPECT_EQ(jrank(diag(JordanKind::Diag3, 1, 1, 0)), 2);
    EXPECT_EQ(jrank(diag(JordanKind::Diag3, 1, 0, 0)), 1);
    EXPECT_EQ(jrank(Jordan<Int>(JordanKind::H3H)), 0);
}

TEST(Jordan, DiagonalEmbeddingPreservesNormAndSharp) {
    Rng rng(17);
    auto A = rng.jordan(JordanKind::Diag3, 10);
    for (JordanKind k : {JordanKind::H3F, JordanKind::H3B, JordanKind::H3O}) {
        auto E = embed_diagonal(A, k);
        EXPECT_EQ(norm(E), norm(A));
        EXPECT_EQ(sharp(E), embed_diagonal(sharp(A), k));
    }
}

TEST(Jordan, CoordinateRoundTripAndErrors) {
    Rng rng(18);
    for (JordanKind k : kAllKinds) {
        auto A = rng.jordan(k, 10);
        EXPECT_EQ(Jordan<Int>::from_coords(k, A.coords()), A);
        EXPECT_EQ(static_cast<int>(A.coords().size()), kind_dim(k));
    }
    EXPECT_THROW(Jordan<Int>::from_coords(JordanKind::H3B, std::vector<Int>(4)), DomainError);
    EXPECT_THROW(parse_kind("H3Q"), DomainError);
    EXPECT_THROW(Jordan<Int>(JordanKind::H3B) + Jordan<Int>(JordanKind::H3H), DomainError);
}
