#pragma once

#include "fmz/freudenthal.hpp"

#include <array>
#include <vector>

namespace fmz {

// An element of Z^2 (x) Z^2 (x) Z^2; entry (i, j, k) is the coefficient of
// e_i (x) e_j (x) e_k, indices 0-based.
template <class S>
struct Cube {
    std::array<S, 8> c{};

    Cube() { c.fill(S(0)); }

    static int index(int i, int j, int k) { return 4 * i + 2 * j + k; }
    S& at(int i, int j, int k) { return c[index(i, j, k)]; }
    const S& at(int i, int j, int k) const { return c[index(i, j, k)]; }

    friend bool operator==(const Cube&, const Cube&) = default;
};

namespace detail {

// Cube positions of alpha, beta, a_f and b_f.
inline constexpr int kAlphaCell = 0;
inline constexpr int kBetaCell = 7;
inline constexpr int a_cell(int f) { return 7 ^ (4 >> f); }
inline constexpr int b_cell(int f) { return 4 >> f; }

}  // namespace detail

template <class S>
Cube<S> to_cube(const Freud<S>& x) {
    if (x.kind() != JordanKind::Diag3) throw DomainError("cubes correspond to Diag3 elements");
    Cube<S> r;
    r.c[detail::kAlphaCell] = x.alpha;
    r.c[detail::kBetaCell] = x.beta;
    for (int f = 0; f < 3; ++f) {
        r.c[detail::a_cell(f)] = x.A.diag(f);
        r.c[detail::b_cell(f)] = x.B.diag(f);
    }
    return r;
}

template <class S>
Freud<S> from_cube(const Cube<S>& c) {
    Freud<S> x(JordanKind::Diag3);
    x.alpha = c.c[detail::kAlphaCell];
    x.beta = c.c[detail::kBetaCell];
    for (int f = 0; f < 3; ++f) {
        x.A.diag(f) = c.c[detail::a_cell(f)];
        x.B.diag(f) = c.c[detail::b_cell(f)];
    }
    return x;
}

// A triple of 2x2 matrices acting factorwise; defined up to the sign kernel.
struct CubeAction {
    std::array<Matrix<Int>, 3> m{Matrix<Int>::identity(2), Matrix<Int>::identity(2), Matrix<Int>::identity(2)};
};

CubeAction operator*(const CubeAction& g, const CubeAction& h);

Cube<Int> act(const CubeAction& g, const Cube<Int>& c);

// phi(a) -> upper unitriangular, psi(a) -> lower unitriangular, T(+-Id) -> +-I.
// Tau is sent to the image of phi(-1) psi(1) phi(-1).
CubeAction cube_generator_image(const Generator<Int>& g);

CubeAction cube_word_image(const Word<Int>& w);

// The 20 coordinates of an element of the third exterior power of Z^6 in the basis
// e1^e2^e3, f1^f2^f3, e_i ^ f_j*, f_i ^ e_j* (i, j = 1..3, row-major), where
// e_1* = e2^e3, e_2* = e3^e1, e_3* = e1^e2 and likewise for f.
struct WedgeElement {
    std::array<Int, 20> coords{};
    friend bool operator==(const WedgeElement&, const WedgeElement&) = default;
};

WedgeElement to_wedge(const Freud<Int>& x);
Freud<Int> from_wedge(const WedgeElement& w);

// 6x6 image acting on column vectors in the basis e1, e2, e3, f1, f2, f3:
// phi(C) -> [[I, C], [0, I]], psi(D) -> [[I, 0], [D, I]],
// (M -> L M R^-1) -> diag(det(R) L, det(L) R); tau goes through phi(-1) psi(1) phi(-1).
// Maps involving the transpose are outside the image.
Matrix<Int> wedge_generator_image(const Generator<Int>& g);

Matrix<Int> wedge_word_image(const Word<Int>& w);

// The 20x20 matrix of g in SL6 acting on the third exterior power.
Matrix<Int> exterior_cube(const Matrix<Int>& g);

WedgeElement act(const Matrix<Int>& g, const WedgeElement& w);

// The outer involution T(transpose): e_i ^ f_j* <-> e_j ^ f_i*, f_i ^ e_j* <-> f_j ^ e_i*.
WedgeElement wedge_transpose(const WedgeElement& w);

// (L, R) with M -> L M R^{-1} in the matrix model of H3B.
MatrixPair<Int> as_matrix_pair(const StructureMap<Int>& s);

}  // namespace fmz
