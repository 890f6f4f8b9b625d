#include "fmz/isomorphisms.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace fmz;
using namespace fmz::test;

namespace {

StructureMap<Int> diag3_negation() {
    Comp<Int> m = Comp<Int>::scalar(Algebra::F, Int(-1));
    return StructureMap<Int>(JordanKind::Diag3, {DiagUnits<Int>{{m, m, m}}});
}

Generator<Int> diag3_generator(Rng& rng) {
    auto k = JordanKind::Diag3;
    switch (rng.uniform(0, 3)) {
        case 0: return Phi<Int>{rng.jordan(k, 3)};
        case 1: return Psi<Int>{rng.jordan(k, 3)};
        case 2: return Tau{};
        default: return Struct<Int>{diag3_negation()};
    }
}

}  // namespace

TEST(Cube, EmbeddingOfBasisElements) {
    auto k = JordanKind::Diag3;
    Cube<Int> e111;
    e111.at(0, 0, 0) = 1;
    EXPECT_EQ(to_cube(element(k, 1, 0, Jordan<Int>(k), Jordan<Int>(k))), e111);
    Cube<Int> e212;
    e212.at(1, 0, 1) = 1;
    EXPECT_EQ(to_cube(element(k, 0, 0, diag(k, 0, 1, 0), Jordan<Int>(k))), e212);
}

TEST(Cube, RoundTrip) {
    Rng rng(61);
    for (int n = 0; n < 500; ++n) {
        auto x = rng.freud(JordanKind::Diag3, 20);
        ASSERT_EQ(from_cube(to_cube(x)), x);
    }
    EXPECT_THROW(to_cube(rng.freud(JordanKind::H3B, 2)), DomainError);
}

TEST(Cube, GeneratorImages) {
    auto k = JordanKind::Diag3;
    auto phi = cube_generator_image(Phi<Int>{diag(k, 1, 0, 0)});
    EXPECT_EQ(phi.m[0], (Matrix<Int>{{1, 1}, {0, 1}}));
    EXPECT_EQ(phi.m[1], Matrix<Int>::identity(2));
    EXPECT_EQ(phi.m[2], Matrix<Int>::identity(2));
    auto psi = cube_generator_image(Psi<Int>{diag(k, 0, 0, 1)});
    EXPECT_EQ(psi.m[0], Matrix<Int>::identity(2));
    EXPECT_EQ(psi.m[1], Matrix<Int>::identity(2));
    EXPECT_EQ(psi.m[2], (Matrix<Int>{{1, 0}, {1, 1}}));
}

TEST(Cube, Equivariance) {
    Rng rng(62);
    auto k = JordanKind::Diag3;
    StructureMap<Int> minus = diag3_negation();
    for (int n = 0; n < 500; ++n) {
        auto x = rng.freud(k, 10);
        Generator<Int> g;
        switch (n % 4) {
            case 0: g = Phi<Int>{rng.jordan(k, 3)}; break;
            case 1: g = Psi<Int>{rng.jordan(k, 3)}; break;
            case 2: g = Tau{}; break;
            default: g = Struct<Int>{minus}; break;
        }
        ASSERT_EQ(to_cube(apply_generator(g, x)), act(cube_generator_image(g), to_cube(x)));
    }
    for (int n = 0; n < 100; ++n) {
        auto x = rng.freud(k, 10);
        Word<Int> w;
        for (int t = 0; t < 5; ++t) w.push_back(diag3_generator(rng));
        ASSERT_EQ(to_cube(apply_word(w, x)), act(cube_word_image(w), to_cube(x)));
    }
}

TEST(Wedge, BasisEmbedding) {
    auto k = JordanKind::H3B;
    Matrix<Int> e12(3, 3);
    e12(0, 1) = 1;
    WedgeElement w = to_wedge(element(k, 0, 0, from_matrix3(e12), Jordan<Int>(k)));
    WedgeElement expected;
    expected.coords[3] = 1;
    EXPECT_EQ(w, expected);
}

TEST(Wedge, IdentityPairMapsToIdentity) {
    StructureMap<Int> s(JordanKind::H3B, {MatrixPair<Int>{Matrix<Int>::identity(3), Matrix<Int>::identity(3)}});
    EXPECT_EQ(wedge_generator_image(Struct<Int>{s}), Matrix<Int>::identity(6));
}

TEST(Wedge, ImagesHaveDeterminantOne) {
    Rng rng(63);
    for (int n = 0; n < 100; ++n) {
        auto g = rng.generator(JordanKind::H3B, 3);
        if (auto* s = std::get_if<Struct<Int>>(&g)) {
            bool has_transpose = false;
            for (const auto& mv : s->map.moves()) has_transpose = has_transpose || std::holds_alternative<Transpose>(mv);
            if (has_transpose) continue;
        }
        ASSERT_EQ(determinant(wedge_generator_image(g)), Int(1));
    }
}

TEST(Wedge, ExteriorCubeIsMultiplicative) {
    Rng rng(64);
    for (int n = 0; n < 20; ++n) {
        auto g = wedge_word_image(rng.word(JordanKind::H3B, 3, 2));
        auto h = wedge_word_image(rng.word(JordanKind::H3B, 3, 2));
        ASSERT_EQ(exterior_cube(g * h), exterior_cube(g) * exterior_cube(h));
    }
    EXPECT_EQ(exterior_cube(Matrix<Int>::identity(6)), Matrix<Int>::identity(20));
}

TEST(Wedge, Equivariance) {
    Rng rng(65);
    auto k = JordanKind::H3B;
    int checked = 0;
    for (int n = 0; n < 500; ++n) {
        auto x = rng.freud(k, 10);
        auto g = rng.generator(k, 3);
        if (auto* s = std::get_if<Struct<Int>>(&g)) {
            bool has_transpose = false;
            for (const auto& mv : s->map.moves()) has_transpose = has_transpose || std::holds_alternative<Transpose>(mv);
            if (has_transpose) {
                // The outer involution: transpose every matrix entry of both components.
                StructureMap<Int> t(k, {Transpose{}});
                auto y = apply_generator(Generator<Int>{Struct<Int>{t}}, x);
                ASSERT_EQ(to_wedge(y), wedge_transpose(to_wedge(x)));
                continue;
            }
        }
        ASSERT_EQ(to_wedge(apply_generator(g, x)), act(wedge_generator_image(g), to_wedge(x)));
        ++checked;
    }
    EXPECT_GT(checked, 300);
}

TEST(Wedge, RoundTripAndErrors) {
    Rng rng(66);
    auto x = rng.freud(JordanKind::H3B, 10);
    EXPECT_EQ(from_wedge(to_wedge(x)), x);
    EXPECT_THROW(to_wedge(rng.freud(JordanKind::H3H, 2)), DomainError);
}

TEST(MatrixPair, MovesAgreeWithTheirMatrixPairs) {
    Rng rng(67);
    auto k = JordanKind::H3B;
    for (int n = 0; n < 300; ++n) {
        auto s = rng.structure_map(k, 4, 3);
        bool has_transpose = false;
        for (const auto& mv : s.moves()) has_transpose = has_transpose || std::holds_alternative<Transpose>(mv);
        if (has_transpose) {
            EXPECT_THROW(as_matrix_pair(s), PreconditionError);
            continue;
        }
        auto p = as_matrix_pair(s);
        auto X = rng.jordan(k, 10);
        ASSERT_EQ(to_matrix3(s.apply(X)), p.left * to_matrix3(X) * inverse3(p.right));
    }
}
