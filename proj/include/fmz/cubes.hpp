#pragma once

#include "fmz/isomorphisms.hpp"

#include <array>
#include <string>

namespace fmz {

// a x^2 + b x y + c y^2
template <class S>
struct BinaryQuadraticForm {
    S a, b, c;

    S discriminant() const { return b * b - S(4) * a * c; }

    friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

inline bool is_primitive(const BinaryQuadraticForm<Int>& f) {
    Int g = gcd(gcd(f.a, f.b), f.c);
    return g == 1;
}

// Vertex letters a..h of the slicing diagram, as cube cells (i, j, k): the front
// face (i = 0) is [[a, b], [c, d]] with j running left to right and k top to
// bottom; the back face (i = 1) is [[e, f], [g, h]]. Under to_cube this puts
// alpha at a, b2 at b, b3 at c, a1 at d, b1 at e, a3 at f, a2 at g, beta at h.
inline constexpr std::array<std::array<int, 3>, 8> kVertexCells{{
    {0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1},
}};

template <class S>
std::array<S, 8> vertex_labels(const Cube<S>& c) {
    std::array<S, 8> v;
    for (int n = 0; n < 8; ++n) v[n] = c.at(kVertexCells[n][0], kVertexCells[n][1], kVertexCells[n][2]);
    return v;
}

template <class S>
Cube<S> from_vertex_labels(const std::array<S, 8>& v) {
    Cube<S> c;
    for (int n = 0; n < 8; ++n) c.at(kVertexCells[n][0], kVertexCells[n][1], kVertexCells[n][2]) = v[n];
    return c;
}

namespace detail {

// -det(M x - N y) for 2x2 matrices given row-major.
template <class S>
BinaryQuadraticForm<S> slice_form(const std::array<S, 4>& m, const std::array<S, 4>& n) {
    S x2 = m[0] * m[3] - m[1] * m[2];
    S xy = m[1] * n[2] + n[1] * m[2] - m[0] * n[3] - n[0] * m[3];
    S y2 = n[0] * n[3] - n[1] * n[2];
    return {-x2, -xy, -y2};
}

}  // namespace detail

// Q_i(x, y) = -det(M_i x - N_i y) for the front/back, left/right and top/bottom slicings.
template <class S>
std::array<BinaryQuadraticForm<S>, 3> slicing_forms(const Cube<S>& cube) {
    auto [a, b, c, d, e, f, g, h] = vertex_labels(cube);
    return {
        detail::slice_form<S>({a, b, c, d}, {e, f, g, h}),
        detail::slice_form<S>({a, c, e, g}, {b, d, f, h}),
        detail::slice_form<S>({a, e, b, f}, {c, g, d, h}),
    };
}

// R_i, the negated diagonal entries of
// (alpha A - B#) x^2 - ((alpha beta - (A, B)) I + 2 A B) x y + (beta B - A#) y^2.
template <class S>
std::array<BinaryQuadraticForm<S>, 3> rotation_forms(const Freud<S>& x) {
    if (x.kind() != JordanKind::Diag3) throw DomainError("rotation forms need a Diag3 element");
    Jordan<S> As = sharp(x.A);
    Jordan<S> Bs = sharp(x.B);
    S m = x.alpha * x.beta - trace_form(x.A, x.B);
    std::array<BinaryQuadraticForm<S>, 3> r;
    for (int i = 0; i < 3; ++i) {
        S x2 = x.alpha * x.A.diag(i) - Bs.diag(i);
        S xy = -m - S(2) * x.A.diag(i) * x.B.diag(i);
        S y2 = x.beta * x.B.diag(i) - As.diag(i);
        r[i] = {-x2, -xy, -y2};
    }
    return r;
}

// True iff {R1, R2, R3} and {Q1, Q2, Q3} of to_cube(x) agree as multisets.
bool correspondence_check(const Freud<Int>& x);

// Projectivity of a Diag3 element through its three rotation forms.
bool rotation_forms_primitive(const Freud<Int>& x);

std::string to_string(const BinaryQuadraticForm<Int>& f);

}  // namespace fmz
