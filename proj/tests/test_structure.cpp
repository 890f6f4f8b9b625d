#include "fmz/structure.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace fmz;
using namespace fmz::test;

TEST(Structure, MovesScaleTheNormByTheMultiplier) {
    Rng rng(21);
    for (JordanKind k : kReducibleKinds) {
        for (int n = 0; n < 300; ++n) {
            auto s = rng.structure_map(k, 4, 3);
            auto X = rng.jordan(k, 10);
            ASSERT_EQ(norm(s.apply(X)), s.multiplier() * norm(X)) << kind_name(k);
            ASSERT_EQ(s.inverse().apply(s.apply(X)), X);
        }
    }
}

TEST(Structure, AdjointInversePreservesTheTraceForm) {
    Rng rng(22);
    for (JordanKind k : kReducibleKinds) {
        for (int n = 0; n < 200; ++n) {
            auto s = rng.structure_map(k, 4, 3);
            auto X = rng.jordan(k, 10), Y = rng.jordan(k, 10);
            ASSERT_EQ(trace_form(s.apply(X), s.adjoint_inverse().apply(Y)), trace_form(X, Y)) << kind_name(k);
        }
    }
}

TEST(Structure, SharpIntertwinesWithTheAdjointInverse) {
    Rng rng(23);
    for (JordanKind k : kSplitKinds) {
        for (int n = 0; n < 100; ++n) {
            auto s = rng.structure_map(k, 4, 3);
            auto X = rng.jordan(k, 10);
            ASSERT_EQ(sharp(s.apply(X)), s.multiplier() * s.adjoint_inverse().apply(sharp(X)));
        }
    }
}

TEST(Structure, MatrixPairActsAsLeftRightMultiplication) {
    Matrix<Int> L{{1, 2, 0}, {0, 1, 0}, {0, 0, 1}};
    Matrix<Int> R{{1, 0, 0}, {3, 1, 0}, {0, 0, -1}};
    StructureMap<Int> s(JordanKind::H3B, {MatrixPair<Int>{L, R}});
    Rng rng(24);
    auto X = rng.jordan(JordanKind::H3B, 10);
    EXPECT_EQ(to_matrix3(s.apply(X)), L * to_matrix3(X) * inverse3(R));
    EXPECT_EQ(s.multiplier(), Int(-1));
}

TEST(Structure, SmithFormOfDiagonalExample) {
    auto A = diag(JordanKind::H3B, 2, 4, 6);
    SmithForm f = smith_normal_form(A);
    EXPECT_EQ(f.d, (std::array<Int, 3>{2, 2, 12}));
    EXPECT_EQ(f.multiplier, Int(1));
    EXPECT_EQ(f.witness.apply(A), diag(JordanKind::H3B, 2, 2, 12));
}

TEST(Structure, NegativeNormFlipsTheMultiplier) {
    auto A = diag(JordanKind::H3H, 1, 1, -3);
    SmithForm f = smith_normal_form(A);
    EXPECT_EQ(f.d, (std::array<Int, 3>{1, 1, 3}));
    EXPECT_EQ(f.multiplier, Int(-1));
}

TEST(Structure, InvariantFactorsOfUnitDeformation) {
    for (JordanKind k : kSplitKinds) {
        for (long m : {-6L, 0L, 7L}) {
            auto inv = invariant_factors(diag(k, 1, 1, m));
            EXPECT_EQ(inv.d1, Int(1));
            EXPECT_EQ(inv.d2, Int(1));
            EXPECT_EQ(inv.d3, abs(Int(m)));
        }
    }
}

TEST(Structure, SmithFormReplaysToInvariantFactors) {
    Rng rng(25);
    for (JordanKind k : kSplitKinds) {
        for (int n = 0; n < 200; ++n) {
            auto A = rng.jordan(k, 12);
            SmithForm f = smith_normal_form(A);
            auto inv = invariant_factors(A);
            ASSERT_EQ(f.witness.apply(A), Jordan<Int>::diagonal(k, f.d[0], f.d[1], f.d[2]));
            ASSERT_EQ(f.d[0], inv.d1);
            ASSERT_EQ(f.d[1], inv.d2);
            ASSERT_EQ(f.d[2], inv.d3);
            ASSERT_TRUE(divides(f.d[0], f.d[1]) && divides(f.d[1], f.d[2]));
            ASSERT_EQ(f.witness.multiplier(), f.multiplier);
        }
    }
}

TEST(Structure, H3BSmithFormAgreesWithClassicalElimination) {
    Rng rng(26);
    for (int n = 0; n < 300; ++n) {
        auto A = rng.jordan(JordanKind::H3B, 12);
        SmithForm f = smith_normal_form(A);
        auto classical = oracle::smith_diagonal(to_matrix3(A));
        ASSERT_EQ(f.d[0], classical[0]);
        ASSERT_EQ(f.d[1], classical[1]);
        ASSERT_EQ(f.d[2], classical[2]);
    }
}

TEST(Structure, NormPreservingDiagonalization) {
    Rng rng(27);
    for (JordanKind k : kSplitKinds) {
        for (int n = 0; n < 100; ++n) {
            auto A = rng.jordan(k, 10);
            auto [d, map] = diagonalize_norm_preserving(A);
            ASSERT_EQ(map.multiplier(), Int(1));
            ASSERT_EQ(map.apply(A), Jordan<Int>::diagonal(k, d[0], d[1], d[2]));
            ASSERT_EQ(d[0] * d[1] * d[2], norm(A));
        }
    }
}

TEST(Structure, Content) {
    EXPECT_EQ(content(diag(JordanKind::Diag3, 4, 6, -10)), Int(2));
    EXPECT_EQ(content(Jordan<Int>(JordanKind::H3O)), Int(0));
}

TEST(Structure, SmithFormRejectsDiag3AndH3F) {
    EXPECT_THROW(smith_normal_form(diag(JordanKind::Diag3, 1, 2, 3)), DomainError);
}
