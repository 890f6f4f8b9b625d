#include "fmz/reduction.hpp"

#include "support.hpp"

#include <gtest/gtest.h>
#include <numeric>

using namespace fmz;
using namespace fmz::test;

namespace {

Int gcd_of(const Freud<Int>& x) {
    Int g = 0;
    for (const auto& c : x.coords()) g = gcd(g, c);
    return g;
}

}  // namespace

TEST(Reduction, LcompMatchesTheDisplayedTarget) {
    for (JordanKind k : kReducibleKinds) {
        Jordan<Int> zero(k);
        auto x = element(k, 1, 2, diag(k, 1, 1, 2), zero);
        EXPECT_EQ(lcomp_move(x, 2, Int(1)), element(k, 1, 0, diag(k, 1, 1, 3), zero));
        EXPECT_EQ(lcomp_move(x, 1, Int(0)), x);
    }
}

TEST(Reduction, LcompGeneralSlotFormula) {
    Rng rng(41);
    for (JordanKind k : kReducibleKinds) {
        for (int n = 0; n < 100; ++n) {
            Int a = rng.uniform(1, 4);
            Int b = a * rng.coefficient(4);
            Int a1 = a * rng.coefficient(4), a2 = a * rng.coefficient(4), a3 = rng.coefficient(10);
            Int c = rng.coefficient(3);
            Jordan<Int> A = Jordan<Int>::diagonal(k, a1, a2, a3);
            Freud<Int> x(a, b, A, Jordan<Int>(k));
            Int p = a1 * a2 / a;
            Freud<Int> expected(a, b - 2 * p * c, Jordan<Int>::diagonal(k, a1, a2, a3 + b * c - p * c * c),
                                Jordan<Int>(k));
            auto y = lcomp_move(x, 2, c);
            ASSERT_EQ(y, expected) << kind_name(k);
            ASSERT_EQ(quartic_reduced(y), quartic_reduced(x));
        }
    }
}

TEST(Reduction, LcompPreconditions) {
    auto k = JordanKind::H3B;
    EXPECT_THROW(lcomp_move(element(k, 0, 1, diag(k, 1, 1, 1), Jordan<Int>(k)), 2, Int(1)), PreconditionError);
    EXPECT_THROW(lcomp_move(element(k, 1, 1, diag(k, 1, 1, 1), Jordan<Int>::unit(k)), 2, Int(1)), PreconditionError);
    EXPECT_THROW(lcomp_move(element(k, 1, 1, diag(k, 1, 1, 1), Jordan<Int>(k)), 3, Int(1)), DomainError);
}

TEST(Reduction, ReducedInputIsAFixedPoint) {
    for (JordanKind k : kReducibleKinds) {
        auto x = element(k, 2, 4, diag(k, 2, 6, -8), Jordan<Int>(k));
        ASSERT_TRUE(is_diagonal_reduced(x));
        auto r = reduce_diagonal(x);
        EXPECT_EQ(r.element, x);
        EXPECT_TRUE(r.witness.empty());
    }
}

TEST(Reduction, PureBElementReduces) {
    for (JordanKind k : kReducibleKinds) {
        auto x = element(k, 0, 0, Jordan<Int>(k), Jordan<Int>::unit(k));
        auto r = reduce_diagonal(x);
        EXPECT_TRUE(is_diagonal_reduced(r.element));
        EXPECT_EQ(r.element.alpha, Int(1));
        EXPECT_EQ(apply_word(r.witness, x), r.element);
    }
}

TEST(Reduction, RandomElementsReduceWithGcdPreserved) {
    Rng rng(42);
    for (JordanKind k : kReducibleKinds) {
        for (int n = 0; n < 200; ++n) {
            auto x = Int(rng.uniform(1, 3)) * rng.freud(k, 10);
            if (x.is_zero()) continue;
            auto r = reduce_diagonal(x);
            ASSERT_TRUE(is_diagonal_reduced(r.element));
            ASSERT_EQ(r.element.alpha, gcd_of(x));
            ASSERT_EQ(apply_word(r.witness, x), r.element);
        }
    }
    EXPECT_THROW(reduce_diagonal(Freud<Int>(JordanKind::H3B)), PreconditionError);
    EXPECT_THROW(reduce_diagonal(rng.freud(JordanKind::H3F, 3)), DomainError);
}

TEST(Reduction, InvariantsOfExamples) {
    for (JordanKind k : kReducibleKinds) {
        Jordan<Int> zero(k);
        auto r1 = invariants(element(k, 1, 0, zero, zero));
        EXPECT_EQ(r1, (InvariantVector{1, 0, 0, 0}));
        auto r2 = invariants(element(k, 3, 0, diag(k, 6, 0, 0), zero));
        EXPECT_EQ(r2.d1, Int(3));
        EXPECT_EQ(r2.d2, Int(36));
        EXPECT_EQ(r2.d3, Int(0));
    }
}

TEST(Reduction, InvariantsAreOrbitInvariants) {
    Rng rng(43);
    for (JordanKind k : kReducibleKinds) {
        for (int n = 0; n < 60; ++n) {
            auto x = rng.freud(k, 6);
            auto inv = invariants(x);
            auto w = rng.word(k, 6, 2);
            ASSERT_EQ(invariants(apply_word(w, x)), inv) << kind_name(k);
        }
    }
}

TEST(Reduction, KnownProjectivityPair) {
    auto k = JordanKind::H3B;
    auto x1 = element(k, 1, 2, diag(k, 1, 1, 2), Jordan<Int>(k));
    auto x2 = element(k, 1, 2, diag(k, 1, 2, 2), Jordan<Int>(k));
    auto p1 = projectivity(x1), p2 = projectivity(x2);
    EXPECT_TRUE(p1.projective);
    EXPECT_FALSE(p2.projective);
    EXPECT_EQ(p1.cubic_gcd, Int(2));
    EXPECT_EQ(p2.cubic_gcd, Int(2));
}

TEST(Reduction, UnitElementIsProjectiveThroughTheFallback) {
    for (JordanKind k : kSplitKinds) {
        auto p = projectivity(element(k, 1, 0, Jordan<Int>::unit(k), Jordan<Int>(k)));
        EXPECT_TRUE(p.projective);
        EXPECT_EQ(p.cubic_gcd, Int(2));
        EXPECT_EQ(p.basis, ProjectivityBasis::ReducedRepresentative);
    }
}

TEST(Reduction, NonPrimitiveIsNotProjective) {
    Rng rng(44);
    for (JordanKind k : kReducibleKinds) {
        for (int n = 0; n < 50; ++n) {
            auto x = Int(2) * rng.freud(k, 6);
            if (x.is_zero()) continue;
            ASSERT_FALSE(is_projective(x));
        }
    }
}

TEST(Reduction, ProjectiveCanonicalForm) {
    Rng rng(45);
    for (JordanKind k : kReducibleKinds) {
        for (int n = 0; n < 200; ++n) {
            auto x = rng.freud(k, 6);
            if (!is_projective(x)) continue;
            auto c = projective_canonicalize(x);
            Int q = quartic_reduced(x);
            ASSERT_EQ(4 * c.k + c.epsilon * c.epsilon, q);
            ASSERT_EQ(c.epsilon, floor_mod(q, 4) == 1 ? 1 : 0);
            JordanKind wk = c.witness_kind;
            Freud<Int> src = wk == k ? x : embed_in_h3b(x);
            ASSERT_EQ(apply_word(c.witness, src), c.canonical);
            ASSERT_EQ(c.canonical, element(wk, 1, c.epsilon, Jordan<Int>::diagonal(wk, 1, 1, c.k), Jordan<Int>(wk)));
        }
    }
    EXPECT_THROW(projective_canonicalize(element(JordanKind::H3B, 1, 2, diag(JordanKind::H3B, 1, 2, 2),
                                                 Jordan<Int>(JordanKind::H3B))),
                 PreconditionError);
}

TEST(Reduction, OrbitLabels) {
    for (JordanKind k : kReducibleKinds) {
        Jordan<Int> zero(k);
        EXPECT_EQ(classify_orbit(Freud<Int>(k)).variant, OrbitLabel::Variant::Rank0);
        auto l1 = classify_orbit(element(k, 3, 0, zero, zero));
        EXPECT_EQ(l1.variant, OrbitLabel::Variant::Rank1);
        EXPECT_EQ(l1.d1, Int(3));
        auto l2 = classify_orbit(element(k, 2, 0, diag(k, 6, 0, 0), zero));
        EXPECT_EQ(l2.variant, OrbitLabel::Variant::Rank2);
        EXPECT_EQ(l2.d1, Int(2));
        EXPECT_EQ(l2.m, Int(6));
        auto l3 = classify_orbit(element(k, 1, 1, Jordan<Int>::unit(k), zero));
        EXPECT_EQ(l3.variant, OrbitLabel::Variant::Projective);
        EXPECT_EQ(l3.epsilon, 1);
        EXPECT_EQ(l3.k, Int(1));
        auto l4 = classify_orbit(element(k, 1, 0, diag(k, 1, 1, 0), zero));
        EXPECT_EQ(l4.variant, OrbitLabel::Variant::Projective);
        EXPECT_EQ(l4.epsilon, 0);
        EXPECT_EQ(l4.k, Int(0));
    }
}

TEST(Reduction, DegenerateCanonicalFormsAreOrbitInvariant) {
    Rng rng(46);
    for (JordanKind k : kReducibleKinds) {
        Jordan<Int> zero(k);
        for (auto base : {element(k, 3, 0, zero, zero), element(k, 2, 0, diag(k, 6, 0, 0), zero)}) {
            for (int n = 0; n < 20; ++n) {
                auto x = apply_word(rng.word(k, 5, 2), base);
                auto c = degenerate_canonicalize(x);
                ASSERT_EQ(c.representative, base) << kind_name(k);
                ASSERT_EQ(apply_word(c.witness, x), base);
            }
        }
    }
}

TEST(Reduction, FundamentalDiscriminants) {
    for (long n : {1, 5, 8, 12, 13, -3, -4, -7, -8, 1 - 4 * 6}) EXPECT_TRUE(is_fundamental_discriminant(Int(n))) << n;
    for (long n : {0, 4, 9, 16, 2, 3, 6, 7, 20, 25, 45, -12, -16}) EXPECT_FALSE(is_fundamental_discriminant(Int(n))) << n;
}
