#include "fmz/field.hpp"

#include "fmz/reduction.hpp"

namespace fmz {

namespace {

Comp<Rat> split_diagonal_unit(Algebra a, const Rat& t) {
    // Norm t inside the diagonal subalgebra B of each split algebra.
    Comp<Rat> u(a);
    switch (a) {
        case Algebra::F: throw DomainError("plane scaling needs a split composition algebra");
        case Algebra::B: u[0] = t; u[1] = 1; break;
        case Algebra::H:
        case Algebra::O: u[0] = t; u[3] = 1; break;
    }
    return u;
}

class FieldReducer {
public:
    explicit FieldReducer(Freud<Rat> x) : x_(std::move(x)) {}

    const Freud<Rat>& element() const { return x_; }
    const Word<Rat>& word() const { return word_; }

    void apply(const Generator<Rat>& g) {
        x_ = apply_generator(g, x_);
        word_.push_back(g);
    }

    void apply(const Word<Rat>& w) {
        for (const auto& g : w) apply(g);
    }

    // (alpha, beta, A, B) -> (1, beta', A', 0).
    void normalize_left_column() {
        JordanKind k = x_.kind();
        if (x_.A.is_zero() && x_.B.is_zero()) {
            if (is_zero(x_.alpha)) apply(Tau{});
            apply(Psi<Rat>{Jordan<Rat>::basis(k, 0)});
        } else if (x_.B.is_zero()) {
            apply(Tau{});
        }
        if (x_.alpha != 1) {
            Jordan<Rat> C = rank_one_partner(x_.B);
            Rat s = (Rat(1) - x_.alpha) / trace_form(x_.B, C);
            apply(Phi<Rat>{s * C});
        }
        apply(Psi<Rat>{-x_.B});
    }

    // Diagonalizes A and scales it to diag(1,1,N), diag(1,1,0) or diag(1,0,0).
    void normalize_a() {
        if (x_.A.is_zero()) return;
        JordanKind k = x_.kind();
        Int den = 1;
        for (const auto& c : x_.A.coords()) den = lcm(den, Int(c.get_den()));
        std::vector<Int> scaled;
        for (const auto& c : x_.A.coords()) {
            Rat v = c * den;
            scaled.push_back(v.get_num());
        }
        auto [d, map] = diagonalize_norm_preserving(Jordan<Int>::from_coords(k, scaled));
        if (!map.empty()) apply(Struct<Rat>{convert_map<Rat>(map)});
        int r = 0;
        while (r < 3 && sgn(d[r]) != 0) ++r;
        auto p = [&](int i) { return x_.A.diag(i); };
        if (r >= 2) {
            scale(0, 2, Rat(1) / p(0));
            scale(1, 2, Rat(1) / p(1));
        } else if (r == 1) {
            scale(0, 1, Rat(1) / p(0));
        }
    }

    void lcomp(int slot, const Rat& c) {
        if (!is_zero(c)) apply(lcomp_word(x_, slot, c));
    }

private:
    void scale(int i, int j, const Rat& t) {
        if (t == 1) return;
        apply(Struct<Rat>{plane_scaling(x_.kind(), i, j, t)});
    }

    Jordan<Rat> rank_one_partner(const Jordan<Rat>& B) const {
        JordanKind k = B.kind();
        for (int i = 0; i < 3; ++i) {
            Jordan<Rat> E = Jordan<Rat>::basis(k, i);
            if (!is_zero(trace_form(B, E))) return E;
        }
        Algebra a = kind_algebra(k);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                for (int m = 0; m < algebra_dim(a); ++m) {
                    Comp<Rat> w = Comp<Rat>::basis(a, m);
                    Jordan<Rat> C = Jordan<Rat>::basis(k, i);
                    C.diag(j) = w.norm();
                    C.set_entry(i, j, w);
                    if (!sharp(C).is_zero()) continue;
                    if (!is_zero(trace_form(B, C))) return C;
                }
            }
        }
        throw InvariantError("no rank-one element pairs with a nonzero B");
    }

    Freud<Rat> x_;
    Word<Rat> word_;
};

}  // namespace

StructureMap<Rat> plane_scaling(JordanKind kind, int i, int j, const Rat& t) {
    if (is_zero(t)) throw PreconditionError("plane scaling by zero");
    Algebra a = kind_algebra(kind);
    Comp<Rat> u = split_diagonal_unit(a, t);
    Comp<Rat> u_inv = comp_inverse(u);
    Comp<Rat> one = Comp<Rat>::one(a);
    // diag(u, u^-1) = w(u) w(-1) with w(v) = E_ij(v) E_ji(-v^-1) E_ij(v); the
    // rightmost factor acts first.
    StructureMap<Rat> s(kind);
    s.then(Congruence<Rat>{i, j, -one});
    s.then(Congruence<Rat>{j, i, one});
    s.then(Congruence<Rat>{i, j, -one});
    s.then(Congruence<Rat>{i, j, u});
    s.then(Congruence<Rat>{j, i, -u_inv});
    s.then(Congruence<Rat>{i, j, u});
    return s;
}

FieldCanonical field_canonicalize(const Freud<Rat>& x) {
    JordanKind k = x.kind();
    if (k != JordanKind::H3B && k != JordanKind::H3H && k != JordanKind::H3O) {
        throw DomainError(std::string("field canonicalization is not available for ") + kind_name(k));
    }
    if (x.is_zero()) throw PreconditionError("cannot canonicalize the zero element");
    int rk = rank(x);
    FieldReducer r(x);
    r.normalize_left_column();
    auto beta = [&] { return r.element().beta; };
    auto rank_a = [&] { return jrank(r.element().A); };

    if (rk == 2) {
        r.normalize_a();
    } else if (rk == 3) {
        r.normalize_a();
        if (!is_zero(beta())) r.lcomp(2, beta() / 2);
        r.normalize_a();
    } else if (rk == 4) {
        if (!is_zero(beta()) && rank_a() <= 1) {
            r.normalize_a();
            r.lcomp(1, Rat(1) / beta());
            if (is_zero(r.element().A.diag(0))) r.lcomp(0, Rat(1) / beta());
        }
        r.normalize_a();
        if (!is_zero(beta())) r.lcomp(2, beta() / 2);
        r.normalize_a();
    }

    FieldCanonical out;
    out.canonical = r.element();
    out.rank = rk;
    out.witness = r.word();
    out.k = rk == 4 ? Rat(-quartic(x) / 8) : Rat(0);

    Freud<Rat> expected(k);
    expected.alpha = 1;
    if (rk >= 2) expected.A.diag(0) = 1;
    if (rk >= 3) expected.A.diag(1) = 1;
    if (rk == 4) expected.A.diag(2) = out.k;
    if (out.canonical != expected) throw InvariantError("field canonicalization missed the canonical form");
    if (apply_word(out.witness, x) != out.canonical) throw InvariantError("field witness does not replay");
    return out;
}

}  // namespace fmz
