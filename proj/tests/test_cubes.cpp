#include "fmz/cubes.hpp"
#include "fmz/poly.hpp"
#include "fmz/reduction.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace fmz;
using namespace fmz::test;

namespace {

// -R_i written out coefficient by coefficient.
BinaryQuadraticForm<Int> negated_rotation_form(const Freud<Int>& x, int i) {
    const auto& a = x.A;
    const auto& b = x.B;
    int j = (i + 1) % 3, k = (i + 2) % 3;
    Int xy = -a.diag(i) * b.diag(i) + a.diag(j) * b.diag(j) + a.diag(k) * b.diag(k) - x.alpha * x.beta;
    return {x.alpha * a.diag(i) - b.diag(j) * b.diag(k), xy, x.beta * b.diag(i) - a.diag(j) * a.diag(k)};
}

BinaryQuadraticForm<Int> negate(const BinaryQuadraticForm<Int>& f) { return {-f.a, -f.b, -f.c}; }

}  // namespace

TEST(Cubes, ZeroCubeGivesZeroForms) {
    for (const auto& f : slicing_forms(Cube<Int>{})) EXPECT_EQ(f, (BinaryQuadraticForm<Int>{0, 0, 0}));
    EXPECT_TRUE(correspondence_check(Freud<Int>(JordanKind::Diag3)));
}

TEST(Cubes, RotationFormsOfTheGoldenElement) {
    auto k = JordanKind::Diag3;
    auto x = element(k, 1, 1, Jordan<Int>::unit(k), Jordan<Int>(k));
    auto r = rotation_forms(x);
    EXPECT_EQ(r[0], (BinaryQuadraticForm<Int>{-1, 1, 1}));
    EXPECT_EQ(r[0].discriminant(), Int(5));
    EXPECT_EQ(slicing_forms(to_cube(x))[0], r[0]);
}

TEST(Cubes, RotationFormsMatchTheDisplayedCoefficients) {
    Rng rng(71);
    for (int n = 0; n < 300; ++n) {
        auto x = rng.freud(JordanKind::Diag3, 10);
        auto r = rotation_forms(x);
        for (int i = 0; i < 3; ++i) ASSERT_EQ(negate(r[i]), negated_rotation_form(x, i));
    }
}

TEST(Cubes, SlicingFormsEqualRotationFormsInOrder) {
    Rng rng(72);
    for (int n = 0; n < 500; ++n) {
        auto x = rng.freud(JordanKind::Diag3, 10);
        ASSERT_EQ(slicing_forms(to_cube(x)), rotation_forms(x));
        ASSERT_TRUE(correspondence_check(x));
    }
}

TEST(Cubes, DiscriminantIsTheQuarticSymbolically) {
    Freud<Poly> x(JordanKind::Diag3);
    x.alpha = Poly::variable(0);
    x.beta = Poly::variable(1);
    for (int i = 0; i < 3; ++i) {
        x.A.diag(i) = Poly::variable(2 + i);
        x.B.diag(i) = Poly::variable(5 + i);
    }
    Poly q = quartic_reduced(x);
    EXPECT_EQ(q.degree(), 4);
    for (const auto& f : rotation_forms(x)) EXPECT_EQ(f.discriminant(), q);
    auto cube = to_cube(x);
    for (const auto& f : slicing_forms(cube)) EXPECT_EQ(f.discriminant(), q);
}

TEST(Cubes, DiscriminantNumerically) {
    Rng rng(73);
    for (int n = 0; n < 500; ++n) {
        auto x = rng.freud(JordanKind::Diag3, 20);
        for (const auto& f : rotation_forms(x)) ASSERT_EQ(f.discriminant(), quartic_reduced(x));
    }
}

TEST(Cubes, VertexLabelsRoundTrip) {
    Rng rng(74);
    auto c = to_cube(rng.freud(JordanKind::Diag3, 9));
    EXPECT_EQ(from_vertex_labels(vertex_labels(c)), c);
    auto x = element(JordanKind::Diag3, 1, 2, diag(JordanKind::Diag3, 3, 4, 5), diag(JordanKind::Diag3, 6, 7, 8));
    // alpha at a, b2 at b, b3 at c, a1 at d, b1 at e, a3 at f, a2 at g, beta at h.
    EXPECT_EQ(vertex_labels(to_cube(x)), (std::array<Int, 8>{1, 7, 8, 3, 6, 5, 4, 2}));
}

TEST(Cubes, ProjectivityThroughPrimitiveForms) {
    Rng rng(75);
    int projective = 0;
    for (int n = 0; n < 500; ++n) {
        auto x = rng.freud(JordanKind::Diag3, 3);
        if (x.is_zero()) continue;
        bool prim = true;
        for (const auto& f : rotation_forms(x)) prim = prim && is_primitive(f);
        ASSERT_EQ(rotation_forms_primitive(x), prim);
        ASSERT_EQ(is_projective(x), prim);
        projective += prim;
    }
    EXPECT_GT(projective, 0);
}

TEST(Cubes, FormatsForms) {
    EXPECT_EQ(to_string(BinaryQuadraticForm<Int>{-1, 1, 1}), "(-1, 1, 1)");
}
