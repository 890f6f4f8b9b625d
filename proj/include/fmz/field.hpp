#pragma once

#include "fmz/freudenthal.hpp"

namespace fmz {

// Canonical forms over the rationals:
//   rank 1: (1, 0, 0, 0)            rank 2: (1, 0, diag(1,0,0), 0)
//   rank 3: (1, 0, diag(1,1,0), 0)  rank 4: (1, 0, diag(1,1,k), 0), k = -q(x)/8
struct FieldCanonical {
    Freud<Rat> canonical;
    int rank = 0;
    Rat k;
    Word<Rat> witness;
};

FieldCanonical field_canonicalize(const Freud<Rat>& x);

template <class T>
Matrix<T> convert_matrix(const Matrix<Int>& m) {
    Matrix<T> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) r(i, j) = T(m(i, j));
    }
    return r;
}

template <class T>
Comp<T> convert_comp(const Comp<Int>& c) {
    Comp<T> r(c.algebra());
    for (int i = 0; i < c.dim(); ++i) r[i] = T(c[i]);
    return r;
}

template <class T>
Jordan<T> convert_jordan(const Jordan<Int>& X) {
    std::vector<T> v;
    for (const auto& c : X.coords()) v.push_back(T(c));
    return Jordan<T>::from_coords(X.kind(), v);
}

template <class T>
Freud<T> convert_freud(const Freud<Int>& x) {
    return Freud<T>(T(x.alpha), T(x.beta), convert_jordan<T>(x.A), convert_jordan<T>(x.B));
}

template <class T>
StructureMap<T> convert_map(const StructureMap<Int>& s) {
    StructureMap<T> r(s.kind());
    for (const auto& mv : s.moves()) {
        std::visit(
            [&](const auto& m) {
                using M = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<M, DiagUnits<Int>>) {
                    r.then(DiagUnits<T>{{convert_comp<T>(m.u[0]), convert_comp<T>(m.u[1]), convert_comp<T>(m.u[2])}});
                } else if constexpr (std::is_same_v<M, Congruence<Int>>) {
                    r.then(Congruence<T>{m.i, m.j, convert_comp<T>(m.c)});
                } else if constexpr (std::is_same_v<M, MatrixPair<Int>>) {
                    r.then(MatrixPair<T>{convert_matrix<T>(m.left), convert_matrix<T>(m.right)});
                } else {
                    r.then(m);
                }
            },
            mv);
    }
    return r;
}

template <class T>
Word<T> convert_word(const Word<Int>& w) {
    Word<T> r;
    for (const auto& g : w) {
        std::visit(
            [&](const auto& gen) {
                using G = std::decay_t<decltype(gen)>;
                if constexpr (std::is_same_v<G, Phi<Int>>) {
                    r.push_back(Phi<T>{convert_jordan<T>(gen.C)});
                } else if constexpr (std::is_same_v<G, Psi<Int>>) {
                    r.push_back(Psi<T>{convert_jordan<T>(gen.D)});
                } else if constexpr (std::is_same_v<G, Struct<Int>>) {
                    r.push_back(Struct<T>{convert_map<T>(gen.map)});
                } else {
                    r.push_back(Tau{});
                }
            },
            g);
    }
    return r;
}

// Congruence word acting on diagonal elements as a_i -> t a_i, a_j -> a_j / t.
StructureMap<Rat> plane_scaling(JordanKind kind, int i, int j, const Rat& t);

}  // namespace fmz
