#pragma once

#include "fmz/structure.hpp"

#include <variant>
#include <vector>

namespace fmz {

// An element (alpha, beta, A, B) of the Freudenthal module F + F + J + J.
template <class S>
struct Freud {
    S alpha;
    S beta;
    Jordan<S> A;
    Jordan<S> B;

    Freud() : Freud(JordanKind::Diag3) {}
    explicit Freud(JordanKind k) : alpha(0), beta(0), A(k), B(k) {}
    Freud(S a, S b, Jordan<S> a_mat, Jordan<S> b_mat)
        : alpha(std::move(a)), beta(std::move(b)), A(std::move(a_mat)), B(std::move(b_mat)) {
        A.check_same(B);
    }

    JordanKind kind() const { return A.kind(); }
    int dim() const { return 2 + 2 * kind_dim(kind()); }

    static Freud basis(JordanKind k, int m) {
        std::vector<S> v(2 + 2 * kind_dim(k), S(0));
        v.at(m) = S(1);
        return from_coords(k, v);
    }

    static Freud from_coords(JordanKind k, const std::vector<S>& v) {
        int n = kind_dim(k);
        if (static_cast<int>(v.size()) != 2 + 2 * n) throw DomainError("wrong coordinate count for Freudenthal element");
        std::vector<S> a(v.begin() + 2, v.begin() + 2 + n);
        std::vector<S> b(v.begin() + 2 + n, v.end());
        return Freud(v[0], v[1], Jordan<S>::from_coords(k, a), Jordan<S>::from_coords(k, b));
    }

    std::vector<S> coords() const {
        std::vector<S> v{alpha, beta};
        for (auto& c : A.coords()) v.push_back(c);
        for (auto& c : B.coords()) v.push_back(c);
        return v;
    }

    bool is_zero() const { return fmz::is_zero(alpha) && fmz::is_zero(beta) && A.is_zero() && B.is_zero(); }

    Freud& operator+=(const Freud& o) {
        alpha += o.alpha;
        beta += o.beta;
        A += o.A;
        B += o.B;
        return *this;
    }

    Freud& operator-=(const Freud& o) {
        alpha -= o.alpha;
        beta -= o.beta;
        A -= o.A;
        B -= o.B;
        return *this;
    }

    Freud& operator*=(const S& s) {
        alpha *= s;
        beta *= s;
        A *= s;
        B *= s;
        return *this;
    }

    friend Freud operator+(Freud x, const Freud& y) { return x += y; }
    friend Freud operator-(Freud x, const Freud& y) { return x -= y; }
    friend Freud operator*(const S& s, Freud x) { return x *= s; }
    friend Freud operator-(Freud x) { return x *= S(-1); }

    friend bool operator==(const Freud& x, const Freud& y) {
        return x.alpha == y.alpha && x.beta == y.beta && x.A == y.A && x.B == y.B;
    }
    friend bool operator!=(const Freud& x, const Freud& y) { return !(x == y); }
};

// {x, y} = alpha delta - beta gamma + (A, D) - (B, C).
template <class S>
S symplectic(const Freud<S>& x, const Freud<S>& y) {
    return x.alpha * y.beta - x.beta * y.alpha + trace_form(x.A, y.B) - trace_form(x.B, y.A);
}

// q'(x) = -4(A#, B#) + 4 alpha N(A) + 4 beta N(B) + ((A, B) - alpha beta)^2; q = -2 q'.
template <class S>
S quartic_reduced(const Freud<S>& x) {
    S t = trace_form(x.A, x.B) - x.alpha * x.beta;
    return S(-4) * trace_form(sharp(x.A), sharp(x.B)) + S(4) * x.alpha * norm(x.A) + S(4) * x.beta * norm(x.B) + t * t;
}

template <class S>
S quartic(const Freud<S>& x) {
    S t = trace_form(x.A, x.B) - x.alpha * x.beta;
    return S(8) * trace_form(sharp(x.A), sharp(x.B)) - S(8) * x.alpha * norm(x.A) - S(8) * x.beta * norm(x.B) -
           S(2) * t * t;
}

// The cubic covariant T(x, x, x).
template <class S>
Freud<S> t_xxx(const Freud<S>& x) {
    const S& a = x.alpha;
    const S& b = x.beta;
    S ab = trace_form(x.A, x.B);
    S t = ab - a * b;
    Jordan<S> As = sharp(x.A);
    Jordan<S> Bs = sharp(x.B);
    Freud<S> r(x.kind());
    r.alpha = -a * a * b + a * ab - S(2) * norm(x.B);
    r.beta = a * b * b - b * ab + S(2) * norm(x.A);
    r.A = S(2) * cross(x.B, As) - S(2) * b * Bs - t * x.A;
    r.B = S(-2) * cross(x.A, Bs) + S(2) * a * As + t * x.B;
    return r;
}

// Q(x)(C) = alpha beta C + (C, B) A - (A x C) x B.
template <class S>
Jordan<S> quadratic_operator(const Freud<S>& x, const Jordan<S>& C) {
    return x.alpha * x.beta * C + trace_form(C, x.B) * x.A - cross(cross(x.A, C), x.B);
}

template <class S>
Matrix<S> quadratic_operator_matrix(const Freud<S>& x) {
    int n = kind_dim(x.kind());
    Matrix<S> m(n, n);
    for (int j = 0; j < n; ++j) {
        auto col = quadratic_operator(x, Jordan<S>::basis(x.kind(), j)).coords();
        for (int i = 0; i < n; ++i) m(i, j) = col[i];
    }
    return m;
}

// 3 T(x, x, y) + {x, y} x in closed form.
template <class S>
Freud<S> r1_form(const Freud<S>& x, const Freud<S>& y) {
    S m = S(3) * x.alpha * x.beta - trace_form(x.A, x.B);
    Jordan<S> u = x.alpha * x.A - sharp(x.B);
    Jordan<S> v = x.beta * x.B - sharp(x.A);
    Freud<S> swapped(x.beta, x.alpha, x.B, x.A);
    Freud<S> r(x.kind());
    r.alpha = -m * y.alpha + S(2) * trace_form(u, y.B);
    r.beta = m * y.beta - S(2) * trace_form(v, y.A);
    r.A = m * y.A - S(2) * cross(v, y.B) + S(2) * y.beta * u - S(2) * quadratic_operator(x, y.A);
    r.B = -m * y.B + S(2) * cross(u, y.A) - S(2) * y.alpha * v + S(2) * quadratic_operator(swapped, y.B);
    return r;
}

template <class S>
bool quadratic_rank_data_vanish(const Freud<S>& x) {
    if (!(x.alpha * x.A - sharp(x.B)).is_zero()) return false;
    if (!(x.beta * x.B - sharp(x.A)).is_zero()) return false;
    if (!is_zero(S(3) * x.alpha * x.beta - trace_form(x.A, x.B))) return false;
    for (int j = 0; j < kind_dim(x.kind()); ++j) {
        if (!quadratic_operator(x, Jordan<S>::basis(x.kind(), j)).is_zero()) return false;
    }
    return true;
}

template <class S>
int rank(const Freud<S>& x) {
    if (x.is_zero()) return 0;
    if (!is_zero(quartic_reduced(x))) return 4;
    if (!t_xxx(x).is_zero()) return 3;
    if (!quadratic_rank_data_vanish(x)) return 2;
    return 1;
}

// Generators of the automorphism group of the module.
template <class S>
struct Phi {
    Jordan<S> C;
    friend bool operator==(const Phi&, const Phi&) = default;
};

template <class S>
struct Psi {
    Jordan<S> D;
    friend bool operator==(const Psi&, const Psi&) = default;
};

template <class S>
struct Struct {
    StructureMap<S> map;
    friend bool operator==(const Struct&, const Struct&) = default;
};

struct Tau {
    friend bool operator==(const Tau&, const Tau&) = default;
};

template <class S>
using Generator = std::variant<Phi<S>, Psi<S>, Struct<S>, Tau>;

// Generators applied first to last.
template <class S>
using Word = std::vector<Generator<S>>;

namespace detail {

template <class S>
S divide_by_multiplier(const S& value, const S& lambda) {
    if constexpr (ScalarTraits<S>::is_field) {
        return value / lambda;
    } else {
        if (lambda == S(1)) return value;
        if (lambda == S(-1)) return -value;
        if (!divides(lambda, value)) throw PreconditionError("structure multiplier does not divide alpha");
        return exact_div(value, lambda);
    }
}

}  // namespace detail

template <class S>
Freud<S> apply_generator(const Generator<S>& g, const Freud<S>& x) {
    return std::visit(
        [&](const auto& gen) -> Freud<S> {
            using T = std::decay_t<decltype(gen)>;
            if constexpr (std::is_same_v<T, Phi<S>>) {
                const Jordan<S>& C = gen.C;
                x.A.check_same(C);
                Jordan<S> Cs = sharp(C);
                Freud<S> r = x;
                if (Cs.is_zero()) {
                    // Rank-one C: C# = 0 and N(C) = 0.
                    r.alpha = x.alpha + trace_form(x.B, C);
                    r.A = x.A + x.beta * C;
                    r.B = x.B + cross(x.A, C);
                    return r;
                }
                r.alpha = x.alpha + trace_form(x.B, C) + trace_form(x.A, Cs) + x.beta * norm(C);
                r.A = x.A + x.beta * C;
                r.B = x.B + cross(x.A, C) + x.beta * Cs;
                return r;
            } else if constexpr (std::is_same_v<T, Psi<S>>) {
                const Jordan<S>& D = gen.D;
                x.A.check_same(D);
                Jordan<S> Ds = sharp(D);
                Freud<S> r = x;
                r.beta = x.beta + trace_form(x.A, D) + trace_form(x.B, Ds) + x.alpha * norm(D);
                r.A = x.A + cross(x.B, D) + x.alpha * Ds;
                r.B = x.B + x.alpha * D;
                return r;
            } else if constexpr (std::is_same_v<T, Struct<S>>) {
                if (gen.map.kind() != x.kind()) throw DomainError("structure map of the wrong kind");
                S lambda = gen.map.multiplier();
                Freud<S> r(x.kind());
                r.alpha = detail::divide_by_multiplier(x.alpha, lambda);
                r.beta = lambda * x.beta;
                r.A = gen.map.apply(x.A);
                r.B = gen.map.adjoint_inverse().apply(x.B);
                return r;
            } else {
                return Freud<S>(-x.beta, x.alpha, -x.B, x.A);
            }
        },
        g);
}

template <class S>
Freud<S> apply_word(const Word<S>& w, Freud<S> x) {
    for (const auto& g : w) x = apply_generator(g, x);
    return x;
}

template <class S>
Generator<S> generator_inverse(const Generator<S>& g) {
    return std::visit(
        [](const auto& gen) -> Generator<S> {
            using T = std::decay_t<decltype(gen)>;
            if constexpr (std::is_same_v<T, Phi<S>>) {
                return Phi<S>{-gen.C};
            } else if constexpr (std::is_same_v<T, Psi<S>>) {
                return Psi<S>{-gen.D};
            } else if constexpr (std::is_same_v<T, Struct<S>>) {
                return Struct<S>{gen.map.inverse()};
            } else {
                return gen;
            }
        },
        g);
}

template <class S>
Word<S> word_inverse(const Word<S>& w) {
    Word<S> r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (std::holds_alternative<Tau>(*it)) {
            // tau^{-1} = tau^3
            r.insert(r.end(), 3, Tau{});
        } else {
            r.push_back(generator_inverse(*it));
        }
    }
    return r;
}

template <class S>
Word<S> concat(Word<S> a, const Word<S>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// -Id = tau^2.
template <class S>
Word<S> negation_word() {
    return {Tau{}, Tau{}};
}

}  // namespace fmz
