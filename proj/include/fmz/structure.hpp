#pragma once

#include "fmz/jordan.hpp"
#include "fmz/matrix.hpp"

#include <array>
#include <variant>
#include <vector>

namespace fmz {

// Elementary moves of the structure group. Each move s acts linearly on the
// Jordan algebra with N(s X) = lambda N(X).

// X_ij -> X_{sigma(i) sigma(j)} (0-based).
struct Permute {
    std::array<int, 3> sigma{0, 1, 2};
    friend bool operator==(const Permute&, const Permute&) = default;
};

// Hermitian kinds: X -> U X U* with U = diag(u). Diag3: a_i -> u_i a_i.
// Over O the only non-scalar unit allowed is +-negative_unit, and it must occur
// an even number of times; a single one does not preserve the norm up to a scalar.
template <class S>
struct DiagUnits {
    std::array<Comp<S>, 3> u;
    friend bool operator==(const DiagUnits&, const DiagUnits&) = default;
};

// X -> T X T* with T = I + c E_ij (0-based, i != j).
template <class S>
struct Congruence {
    int i = 0;
    int j = 1;
    Comp<S> c;
    friend bool operator==(const Congruence&, const Congruence&) = default;
};

// X -> -X, multiplier -1.
struct Negate {
    friend bool operator==(const Negate&, const Negate&) = default;
};

// Entrywise conjugation; only defined for commutative coefficients.
struct Transpose {
    friend bool operator==(const Transpose&, const Transpose&) = default;
};

// H3B viewed as 3x3 matrices: M -> left * M * right^{-1}.
template <class S>
struct MatrixPair {
    Matrix<S> left;
    Matrix<S> right;
    friend bool operator==(const MatrixPair&, const MatrixPair&) = default;
};

template <class S>
using Move = std::variant<Permute, DiagUnits<S>, Congruence<S>, Negate, Transpose, MatrixPair<S>>;

// H3B <-> 3x3 matrices: z = (M12, M21), x = (M23, M32), y = (M31, M13).
template <class S>
Matrix<S> to_matrix3(const Jordan<S>& X) {
    if (X.kind() != JordanKind::H3B) throw DomainError("matrix model needs an H3B element");
    Matrix<S> m(3, 3);
    for (int i = 0; i < 3; ++i) m(i, i) = X.diag(i);
    m(0, 1) = X.off(2)[0];
    m(1, 0) = X.off(2)[1];
    m(1, 2) = X.off(0)[0];
    m(2, 1) = X.off(0)[1];
    m(2, 0) = X.off(1)[0];
    m(0, 2) = X.off(1)[1];
    return m;
}

template <class S>
Jordan<S> from_matrix3(const Matrix<S>& m) {
    Jordan<S> X(JordanKind::H3B);
    for (int i = 0; i < 3; ++i) X.diag(i) = m(i, i);
    X.off(2)[0] = m(0, 1);
    X.off(2)[1] = m(1, 0);
    X.off(0)[0] = m(1, 2);
    X.off(0)[1] = m(2, 1);
    X.off(1)[0] = m(2, 0);
    X.off(1)[1] = m(0, 2);
    return X;
}

namespace detail {

template <class S>
Jordan<S> apply_move(const Permute& p, const Jordan<S>& X) {
    Jordan<S> r(X.kind());
    for (int i = 0; i < 3; ++i) r.diag(i) = X.diag(p.sigma[i]);
    if (X.kind() == JordanKind::Diag3) return r;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}}) {
        r.set_entry(i, j, X.entry(p.sigma[i], p.sigma[j]));
    }
    return r;
}

// 0 for +-1, 1 for +-(e0 - e3), -1 for anything else.
template <class S>
int octonion_unit_class(const Comp<S>& u) {
    for (int m : {1, 2, 4, 5, 6, 7}) {
        if (!is_zero(u[m])) return -1;
    }
    if (!(u[0] == S(1) || u[0] == S(-1))) return -1;
    if (u[3] == u[0]) return 0;
    if (u[3] == -u[0]) return 1;
    return -1;
}

template <class S>
Jordan<S> apply_move(const DiagUnits<S>& d, const Jordan<S>& X) {
    Jordan<S> r(X.kind());
    if (X.kind() == JordanKind::Diag3) {
        for (int i = 0; i < 3; ++i) r.diag(i) = d.u[i][0] * X.diag(i);
        return r;
    }
    if (X.kind() == JordanKind::H3O) {
        int odd = 0;
        for (const auto& u : d.u) {
            int c = octonion_unit_class(u);
            if (c < 0) throw DomainError("unsupported octonion unit in a diagonal move");
            odd += c;
        }
        if (odd % 2 != 0) throw DomainError("octonion diagonal moves need an even number of norm -1 units");
    }
    for (int i = 0; i < 3; ++i) r.diag(i) = d.u[i].norm() * X.diag(i);
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}}) {
        r.set_entry(i, j, (d.u[i] * X.entry(i, j)) * d.u[j].conj());
    }
    return r;
}

template <class S>
Jordan<S> apply_move(const Congruence<S>& m, const Jordan<S>& X) {
    if (X.kind() == JordanKind::Diag3) throw DomainError("congruence moves need a Hermitian kind");
    int i = m.i, j = m.j, k = 3 - m.i - m.j;
    Jordan<S> r = X;
    r.diag(i) = X.diag(i) + (m.c * X.entry(j, i)).trace() + m.c.norm() * X.diag(j);
    r.set_entry(i, j, X.entry(i, j) + m.c * X.diag(j));
    r.set_entry(i, k, X.entry(i, k) + m.c * X.entry(j, k));
    return r;
}

template <class S>
Jordan<S> apply_move(const Negate&, const Jordan<S>& X) {
    return -X;
}

template <class S>
Jordan<S> apply_move(const Transpose&, const Jordan<S>& X) {
    if (X.kind() == JordanKind::Diag3) return X;
    if (X.kind() != JordanKind::H3F && X.kind() != JordanKind::H3B) {
        throw DomainError("transpose is only a structure map for commutative coefficients");
    }
    Jordan<S> r = X;
    for (int s = 0; s < 3; ++s) r.off(s) = X.off(s).conj();
    return r;
}

template <class S>
Jordan<S> apply_move(const MatrixPair<S>& m, const Jordan<S>& X) {
    return from_matrix3(m.left * to_matrix3(X) * inverse3(m.right));
}

template <class S>
S move_multiplier(const Move<S>& mv, JordanKind kind) {
    if (auto* d = std::get_if<DiagUnits<S>>(&mv)) {
        S l(1);
        for (const auto& u : d->u) l *= kind == JordanKind::Diag3 ? u[0] : u.norm();
        return l;
    }
    if (std::holds_alternative<Negate>(mv)) return S(-1);
    if (auto* m = std::get_if<MatrixPair<S>>(&mv)) {
        S dl = determinant(m->left);
        S dr = determinant(m->right);
        if constexpr (ScalarTraits<S>::is_field) {
            return dl / dr;
        } else {
            return dl * dr;  // both are +-1
        }
    }
    return S(1);
}

template <class S>
Comp<S> scalar_inverse_unit(const Comp<S>& u) {
    Comp<S> r(u.algebra());
    if constexpr (ScalarTraits<S>::is_field) {
        r[0] = S(1) / u[0];
    } else {
        if (!(u[0] == S(1) || u[0] == S(-1))) throw PreconditionError("Diag3 scaling is not a unit");
        r[0] = u[0];
    }
    return r;
}

template <class S>
Move<S> move_inverse(const Move<S>& mv, JordanKind kind) {
    return std::visit(
        [&](const auto& m) -> Move<S> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Permute>) {
                Permute inv;
                for (int i = 0; i < 3; ++i) inv.sigma[m.sigma[i]] = i;
                return inv;
            } else if constexpr (std::is_same_v<T, DiagUnits<S>>) {
                DiagUnits<S> inv = m;
                for (auto& u : inv.u) u = kind == JordanKind::Diag3 ? scalar_inverse_unit(u) : comp_inverse(u);
                return inv;
            } else if constexpr (std::is_same_v<T, Congruence<S>>) {
                return Congruence<S>{m.i, m.j, -m.c};
            } else if constexpr (std::is_same_v<T, Negate> || std::is_same_v<T, Transpose>) {
                return m;
            } else {
                return MatrixPair<S>{inverse3(m.left), inverse3(m.right)};
            }
        },
        mv);
}

// The move s*^{-1}, where s* is the adjoint for the trace form.
template <class S>
Move<S> move_adjoint_inverse(const Move<S>& mv, JordanKind kind) {
    return std::visit(
        [&](const auto& m) -> Move<S> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Permute>) {
                return m;
            } else if constexpr (std::is_same_v<T, DiagUnits<S>>) {
                DiagUnits<S> r = m;
                for (auto& u : r.u) {
                    if (kind == JordanKind::Diag3) {
                        u = scalar_inverse_unit(u);
                    } else {
                        u = comp_inverse(u.conj());
                    }
                }
                return r;
            } else if constexpr (std::is_same_v<T, Congruence<S>>) {
                return Congruence<S>{m.j, m.i, -m.c.conj()};
            } else if constexpr (std::is_same_v<T, Negate> || std::is_same_v<T, Transpose>) {
                return m;
            } else {
                return MatrixPair<S>{m.right, m.left};
            }
        },
        mv);
}

}  // namespace detail

// A structure map as a sequence of moves, applied first to last.
template <class S>
class StructureMap {
public:
    StructureMap() : StructureMap(JordanKind::Diag3) {}
    explicit StructureMap(JordanKind kind) : kind_(kind) {}
    StructureMap(JordanKind kind, std::vector<Move<S>> moves) : kind_(kind), moves_(std::move(moves)) {}

    JordanKind kind() const { return kind_; }
    const std::vector<Move<S>>& moves() const { return moves_; }
    bool empty() const { return moves_.empty(); }

    StructureMap& then(const Move<S>& m) {
        moves_.push_back(m);
        return *this;
    }

    StructureMap& then(const StructureMap& other) {
        moves_.insert(moves_.end(), other.moves_.begin(), other.moves_.end());
        return *this;
    }

    Jordan<S> apply(const Jordan<S>& X) const {
        if (X.kind() != kind_) throw DomainError("structure map applied to the wrong kind");
        Jordan<S> r = X;
        for (const auto& m : moves_) {
            r = std::visit([&](const auto& mv) { return detail::apply_move(mv, r); }, m);
        }
        return r;
    }

    S multiplier() const {
        S l(1);
        for (const auto& m : moves_) l *= detail::move_multiplier(m, kind_);
        return l;
    }

    StructureMap inverse() const {
        StructureMap r(kind_);
        for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) r.moves_.push_back(detail::move_inverse(*it, kind_));
        return r;
    }

    StructureMap adjoint_inverse() const {
        StructureMap r(kind_);
        for (const auto& m : moves_) r.moves_.push_back(detail::move_adjoint_inverse(m, kind_));
        return r;
    }

    friend bool operator==(const StructureMap& a, const StructureMap& b) {
        return a.kind_ == b.kind_ && a.moves_ == b.moves_;
    }

private:
    JordanKind kind_;
    std::vector<Move<S>> moves_;
};

// A unit of norm -1 in the split composition algebra (none exists in F).
template <class S>
Comp<S> negative_unit(Algebra a) {
    Comp<S> u(a);
    switch (a) {
        case Algebra::F: throw DomainError("F has no unit of norm -1");
        case Algebra::B: u[0] = S(1); u[1] = S(-1); break;
        case Algebra::H:
        case Algebra::O: u[0] = S(1); u[3] = S(-1); break;
    }
    return u;
}

struct SmithForm {
    std::array<Int, 3> d;    // d1 | d2 | d3, all nonnegative
    Int multiplier;          // +1, or -1 exactly when N(A) < 0
    StructureMap<Int> witness;
};

struct InvariantFactors {
    Int d1, d2, d3;
};

// Diagonalizes an integral Hermitian matrix over B, H or O with norm-preserving
// moves only. The result is diag(d1, d2, d3) with d1 | d2 | d3, d1, d2 >= 0 and
// d3 carrying the sign of the norm.
std::pair<std::array<Int, 3>, StructureMap<Int>> diagonalize_norm_preserving(const Jordan<Int>& A);

SmithForm smith_normal_form(const Jordan<Int>& A);

// d1 = gcd(A), d1 d2 = gcd(A#), d1 d2 d3 = |N(A)|; zero past the rank.
InvariantFactors invariant_factors(const Jordan<Int>& A);

Int content(const Jordan<Int>& A);

}  // namespace fmz
