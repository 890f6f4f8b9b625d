#include "fmz/reduction.hpp"

namespace fmz {

namespace {

Int quotient_into_range(const Int& w, const Int& v) {
    // q with w - q v in [0, |v|)
    Int q = floor_div(w, abs(v));
    return sgn(v) < 0 ? Int(-q) : q;
}

bool divides_all(const Int& d, const Jordan<Int>& A) {
    for (const auto& c : A.coords()) {
        if (!divides(d, c)) return false;
    }
    return true;
}

class Reducer {
public:
    explicit Reducer(Freud<Int> x) : x_(std::move(x)) {}

    const Freud<Int>& element() const { return x_; }
    const Word<Int>& word() const { return word_; }

    void apply(const Generator<Int>& g) {
        x_ = apply_generator(g, x_);
        word_.push_back(g);
    }

    void apply(const Word<Int>& w) {
        for (const auto& g : w) apply(g);
    }

    void tau() { apply(Tau{}); }
    void tau_inverse() { apply(Word<Int>{Tau{}, Tau{}, Tau{}}); }
    void negate() { apply(negation_word<Int>()); }

    // Puts A into the norm-preserving diagonal form; alpha and beta are untouched.
    void diagonalize_a() {
        if (x_.A.is_zero()) return;
        auto [d, map] = diagonalize_norm_preserving(x_.A);
        if (!map.empty()) apply(Struct<Int>{map});
    }

    void diagonalize_b() {
        auto [d, map] = diagonalize_norm_preserving(x_.B);
        if (!map.empty()) apply(Struct<Int>{map.adjoint_inverse()});
    }

    // (RED1) (alpha, beta, A, B) -> (g, *, *, 0) with 0 < g <= min(|alpha|, gcd B).
    void red1() {
        for (;;) {
            if (sgn(x_.alpha) != 0) reduce_b_mod_alpha();
            if (x_.B.is_zero()) break;
            diagonalize_b();
            Int b1 = x_.B.diag(0);
            // alpha + b1 c lands in {1, ..., b1}
            Int c = -floor_div(x_.alpha - 1, b1);
            if (sgn(c) != 0) apply(Phi<Int>{c * Jordan<Int>::basis(x_.kind(), 0)});
        }
        if (sgn(x_.alpha) < 0) negate();
        if (sgn(x_.alpha) == 0) throw InvariantError("left column vanished during reduction");
    }

    // (RED2) for (alpha, beta, A, 0) with alpha > 0 not dividing gcd(beta, A):
    // leaves a nonzero right column whose smallest entry is below alpha.
    void red2() {
        diagonalize_a();
        const Int alpha = x_.alpha;
        Int a1 = x_.A.diag(0);
        Int d3 = -floor_div(a1 - 1, alpha);
        Jordan<Int> D = Jordan<Int>::diagonal(x_.kind(), 0, 1, d3);
        apply(Psi<Int>{D});
        if (x_.A.diag(0) == alpha) {
            // alpha | A now, so alpha does not divide beta; reduce beta mod alpha.
            Int c = -floor_div(x_.beta, alpha);
            if (sgn(c) != 0) apply(Psi<Int>{c * Jordan<Int>::basis(x_.kind(), 0)});
        }
    }

    // Mirror images: conjugate by tau.
    void red3() {
        tau_inverse();
        red1();
        tau();
    }

    void red4() {
        tau_inverse();
        red2();
        tau();
    }

    void reduce_hermitian() {
        if (sgn(x_.alpha) == 0 && x_.B.is_zero()) tau();
        for (int guard = 0;; ++guard) {
            if (guard > 100000) throw InvariantError("reduction loop did not terminate");
            red1();
            if (divides(x_.alpha, x_.beta) && divides_all(x_.alpha, x_.A)) break;
            red2();
            red3();
            if (divides(x_.beta, x_.alpha) && divides_all(x_.beta, x_.B)) {
                tau_inverse();
                break;
            }
            red4();
        }
        if (!x_.A.is_diagonal()) diagonalize_a();
    }

    // Diag3 through the 2x2x2 cube picture: position p is a 3-bit mask, bit f
    // set meaning index 2 along factor f. alpha sits at 0, beta at 7, B_f at
    // bit f alone and A_f at the complement of bit f.
    Int cube(int p) const {
        if (p == 0) return x_.alpha;
        if (p == 7) return x_.beta;
        for (int f = 0; f < 3; ++f) {
            if (p == (1 << f)) return x_.B.diag(f);
            if (p == (7 ^ (1 << f))) return x_.A.diag(f);
        }
        throw InvariantError("bad cube position");
    }

    // c[p without f] += a c[p with f]
    void upper(int f, const Int& a) { apply(Phi<Int>{a * Jordan<Int>::basis(JordanKind::Diag3, f)}); }
    // c[p with f] += a c[p without f]
    void lower(int f, const Int& a) { apply(Psi<Int>{a * Jordan<Int>::basis(JordanKind::Diag3, f)}); }

    // (v0, v1) -> (v1, -v0) along factor f.
    void swap_factor(int f) {
        upper(f, 1);
        lower(f, -1);
        upper(f, 1);
    }

    void reduce_diag3() {
        for (int guard = 0;; ++guard) {
            if (guard > 100000) throw InvariantError("cube reduction did not terminate");
            int best = -1;
            Int best_mag;
            for (int p = 0; p < 8; ++p) {
                Int v = abs(cube(p));
                if (sgn(v) != 0 && (best < 0 || v < best_mag)) {
                    best = p;
                    best_mag = v;
                }
            }
            if (best < 0) throw PreconditionError("cannot reduce the zero element");
            if (best != 0) {
                for (int f = 0; f < 3; ++f) {
                    if (best & (1 << f)) swap_factor(f);
                }
                continue;
            }
            Int v = cube(0);
            bool leftover = false;
            for (int f = 0; f < 3; ++f) {
                Int q = quotient_into_range(cube(1 << f), v);
                if (sgn(q) != 0) lower(f, -q);
                if (sgn(cube(1 << f)) != 0) leftover = true;
            }
            if (leftover) continue;
            int far = -1;
            for (int p : {3, 5, 6, 7}) {
                if (!divides(v, cube(p))) {
                    far = p;
                    break;
                }
            }
            if (far < 0) break;
            for (int f = 0; f < 3; ++f) {
                if (far & (1 << f)) {
                    upper(f, 1);
                    break;
                }
            }
        }
        if (sgn(x_.alpha) < 0) negate();
    }

private:
    void reduce_b_mod_alpha() {
        const Int& alpha = x_.alpha;
        auto b = x_.B.coords();
        std::vector<Int> d(b.size());
        bool any = false;
        for (std::size_t i = 0; i < b.size(); ++i) {
            d[i] = -quotient_into_range(b[i], alpha);
            if (sgn(d[i]) != 0) any = true;
        }
        if (any) apply(Psi<Int>{Jordan<Int>::from_coords(x_.kind(), d)});
    }

    Freud<Int> x_;
    Word<Int> word_;
};

void require_reducible_kind(JordanKind k) {
    if (k == JordanKind::H3F) throw DomainError("reduction is not available for H3F");
}

Int gcd_of(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& c : v) g = gcd(g, c);
    return g;
}

Int gcd_of(const Matrix<Int>& m) {
    Int g = 0;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) g = gcd(g, m(i, j));
    }
    return g;
}

bool primitive(const Int& a, const Int& b, const Int& c) { return gcd(gcd(a, b), c) == 1; }

bool diag3_forms_primitive(const Freud<Int>& x) {
    const Int& al = x.alpha;
    const Int& be = x.beta;
    const Int &a1 = x.A.diag(0), &a2 = x.A.diag(1), &a3 = x.A.diag(2);
    const Int &b1 = x.B.diag(0), &b2 = x.B.diag(1), &b3 = x.B.diag(2);
    Int ab = al * be;
    return primitive(al * a1 - b2 * b3, -a1 * b1 + a2 * b2 + a3 * b3 - ab, be * b1 - a2 * a3) &&
           primitive(al * a2 - b3 * b1, a1 * b1 - a2 * b2 + a3 * b3 - ab, be * b2 - a3 * a1) &&
           primitive(al * a3 - b1 * b2, a1 * b1 + a2 * b2 - a3 * b3 - ab, be * b3 - a1 * a2);
}

bool reduced_projective(const Freud<Int>& r) {
    const Int& al = r.alpha;
    Int ab = al * r.beta;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        if (!primitive(al * r.A.diag(i), ab, r.A.diag(j) * r.A.diag(k))) return false;
    }
    return true;
}

Move<Int> embed_move(const Move<Int>& m) {
    if (auto* d = std::get_if<DiagUnits<Int>>(&m)) {
        DiagUnits<Int> r;
        for (int i = 0; i < 3; ++i) {
            // A unit of B with norm u_i acts on the diagonal as u_i does on Diag3.
            r.u[i] = Comp<Int>(Algebra::B, {1, d->u[i][0], 0, 0, 0, 0, 0, 0});
        }
        return r;
    }
    if (std::holds_alternative<Permute>(m) || std::holds_alternative<Negate>(m)) return m;
    throw DomainError("move has no H3B counterpart");
}

Word<Int> embed_word(const Word<Int>& w) {
    Word<Int> r;
    for (const auto& g : w) {
        std::visit(
            [&](const auto& gen) {
                using T = std::decay_t<decltype(gen)>;
                if constexpr (std::is_same_v<T, Phi<Int>>) {
                    r.push_back(Phi<Int>{embed_diagonal(gen.C, JordanKind::H3B)});
                } else if constexpr (std::is_same_v<T, Psi<Int>>) {
                    r.push_back(Psi<Int>{embed_diagonal(gen.D, JordanKind::H3B)});
                } else if constexpr (std::is_same_v<T, Struct<Int>>) {
                    StructureMap<Int> s(JordanKind::H3B);
                    for (const auto& m : gen.map.moves()) s.then(embed_move(m));
                    r.push_back(Struct<Int>{s});
                } else {
                    r.push_back(gen);
                }
            },
            g);
    }
    return r;
}

}  // namespace

bool is_diagonal_reduced(const Freud<Int>& x) {
    if (sgn(x.alpha) <= 0 || !x.B.is_zero() || !x.A.is_diagonal()) return false;
    if (!divides(x.alpha, x.beta)) return false;
    for (int i = 0; i < 3; ++i) {
        if (!divides(x.alpha, x.A.diag(i))) return false;
    }
    return true;
}

DiagonalReduced reduce_diagonal(const Freud<Int>& x) {
    require_reducible_kind(x.kind());
    if (x.is_zero()) throw PreconditionError("cannot reduce the zero element");
    if (is_diagonal_reduced(x)) return {x, {}};
    Reducer r(x);
    if (x.kind() == JordanKind::Diag3) {
        r.reduce_diag3();
    } else {
        r.reduce_hermitian();
    }
    DiagonalReduced out{r.element(), r.word()};
    if (!is_diagonal_reduced(out.element)) throw InvariantError("reduction did not reach a diagonal reduced element");
    if (apply_word(out.witness, x) != out.element) throw InvariantError("reduction witness does not replay");
    return out;
}

Int content(const Freud<Int>& x) { return gcd_of(x.coords()); }

InvariantVector invariants(const Freud<Int>& x) {
    InvariantVector v;
    v.d1 = content(x);
    Int g = abs(Int(3 * x.alpha * x.beta - trace_form(x.A, x.B)));
    g = gcd(g, Int(2) * content(x.alpha * x.A - sharp(x.B)));
    g = gcd(g, Int(2) * content(x.beta * x.B - sharp(x.A)));
    g = gcd(g, Int(2) * gcd_of(quadratic_operator_matrix(x)));
    v.d2 = g;
    v.d3 = content(t_xxx(x));
    v.d4 = quartic_reduced(x);
    return v;
}

Int alt_d2(const Freud<Int>& x) {
    Int g = content(x.alpha * x.A - sharp(x.B));
    g = gcd(g, content(x.beta * x.B - sharp(x.A)));
    return gcd(g, gcd_of(quadratic_operator_matrix(x)));
}

ProjectivityResult projectivity(const Freud<Int>& x) {
    ProjectivityResult r;
    Freud<Int> t = t_xxx(x);
    r.cubic_gcd = content(t);
    if (x.kind() == JordanKind::Diag3) {
        r.basis = ProjectivityBasis::BinaryForms;
        r.projective = diag3_forms_primitive(x);
        return r;
    }
    require_reducible_kind(x.kind());
    if (t.is_zero()) {
        r.basis = ProjectivityBasis::CubicZero;
        return r;
    }
    if (r.cubic_gcd == 1) {
        r.basis = ProjectivityBasis::CubicGcdOne;
        r.projective = true;
        return r;
    }
    if (r.cubic_gcd >= 3) {
        r.basis = ProjectivityBasis::CubicGcdLarge;
        return r;
    }
    r.basis = ProjectivityBasis::ReducedRepresentative;
    r.representative_dependent = true;
    r.projective = reduced_projective(reduce_diagonal(x).element);
    return r;
}

Freud<Int> embed_in_h3b(const Freud<Int>& x) {
    return Freud<Int>(x.alpha, x.beta, embed_diagonal(x.A, JordanKind::H3B), embed_diagonal(x.B, JordanKind::H3B));
}

ProjectiveCanonical projective_canonicalize(const Freud<Int>& x) {
    if (!is_projective(x)) throw PreconditionError("element is not projective");
    DiagonalReduced red = reduce_diagonal(x);
    Freud<Int> start = red.element;
    Word<Int> prefix = red.witness;
    JordanKind kind = x.kind();
    if (kind == JordanKind::Diag3) {
        start = embed_in_h3b(start);
        prefix = embed_word(prefix);
        kind = JordanKind::H3B;
    }
    if (start.alpha != 1) throw InvariantError("projective element reduced to a non-primitive form");
    Reducer r(start);
    r.diagonalize_a();
    auto lcomp = [&](const Int& c) {
        if (sgn(c) != 0) r.apply(lcomp_word(r.element(), 2, c));
    };
    if (r.element().A.diag(0) != 1) {
        lcomp(1);
        r.diagonalize_a();
    }
    if (r.element().A.diag(1) != 1) {
        lcomp(1);
        r.diagonalize_a();
    }
    if (r.element().A.diag(0) != 1 || r.element().A.diag(1) != 1) {
        throw InvariantError("projective canonicalization could not normalize the diagonal");
    }
    lcomp(floor_div(r.element().beta, 2));

    ProjectiveCanonical out;
    out.canonical = r.element();
    out.epsilon = out.canonical.beta.get_si();
    out.k = out.canonical.A.diag(2);
    out.witness = concat(prefix, r.word());
    out.witness_kind = kind;
    Int q = quartic_reduced(x);
    if (4 * out.k + out.epsilon * out.epsilon != q) throw InvariantError("canonical form does not match the norm");
    Freud<Int> source = x.kind() == JordanKind::Diag3 ? embed_in_h3b(x) : x;
    if (apply_word(out.witness, source) != out.canonical) throw InvariantError("canonicalization witness does not replay");
    return out;
}

DegenerateCanonical degenerate_canonicalize(const Freud<Int>& x) {
    int rk = rank(x);
    if (rk != 1 && rk != 2) throw PreconditionError("element is not of rank 1 or 2");
    DiagonalReduced red = reduce_diagonal(x);
    Reducer r(red.element);
    if (rk == 2) {
        if (x.kind() == JordanKind::Diag3) {
            int slot = 0;
            while (sgn(r.element().A.diag(slot)) == 0) ++slot;
            if (slot != 0) {
                Permute p;
                std::swap(p.sigma[0], p.sigma[slot]);
                r.apply(Struct<Int>{StructureMap<Int>(JordanKind::Diag3, {p})});
            }
            if (sgn(r.element().A.diag(0)) < 0) {
                auto f = [](int s) { return Comp<Int>(Algebra::F, {s, 0, 0, 0, 0, 0, 0, 0}); };
                r.apply(Struct<Int>{StructureMap<Int>(JordanKind::Diag3, {DiagUnits<Int>{{f(-1), f(-1), f(1)}}})});
            }
        } else {
            r.diagonalize_a();
        }
    }
    DegenerateCanonical out{r.element(), concat(red.witness, r.word())};
    const auto& e = out.representative;
    bool shape = sgn(e.beta) == 0 && e.B.is_zero() && sgn(e.A.diag(1)) == 0 && sgn(e.A.diag(2)) == 0 &&
                 e.A.is_diagonal() && (rk == 1 ? sgn(e.A.diag(0)) == 0 : sgn(e.A.diag(0)) > 0);
    if (!shape) throw InvariantError("degenerate element did not reach its canonical shape");
    return out;
}

bool operator==(const OrbitLabel& a, const OrbitLabel& b) {
    if (a.variant != b.variant) return false;
    switch (a.variant) {
        case OrbitLabel::Variant::Rank0: return true;
        case OrbitLabel::Variant::Rank1: return a.d1 == b.d1;
        case OrbitLabel::Variant::Rank2: return a.d1 == b.d1 && a.m == b.m;
        case OrbitLabel::Variant::Projective: return a.epsilon == b.epsilon && a.k == b.k;
        case OrbitLabel::Variant::Unclassified: return a.invariants == b.invariants;
    }
    return false;
}

std::string variant_name(OrbitLabel::Variant v) {
    switch (v) {
        case OrbitLabel::Variant::Rank0: return "Rank0";
        case OrbitLabel::Variant::Rank1: return "Rank1";
        case OrbitLabel::Variant::Rank2: return "Rank2";
        case OrbitLabel::Variant::Projective: return "Projective";
        case OrbitLabel::Variant::Unclassified: return "Unclassified";
    }
    return "?";
}

OrbitLabel classify_orbit(const Freud<Int>& x) {
    require_reducible_kind(x.kind());
    OrbitLabel label;
    int rk = rank(x);
    if (rk == 0) return label;
    InvariantVector inv = invariants(x);
    if (rk == 1) {
        label.variant = OrbitLabel::Variant::Rank1;
        label.d1 = inv.d1;
        Freud<Int> rep(x.kind());
        rep.alpha = inv.d1;
        label.representative = rep;
        return label;
    }
    if (rk == 2) {
        label.variant = OrbitLabel::Variant::Rank2;
        label.d1 = inv.d1;
        if (!divides(2 * inv.d1, inv.d2)) throw InvariantError("rank-2 invariants are not compatible");
        label.m = exact_div(inv.d2, 2 * inv.d1);
        Freud<Int> rep(x.kind());
        rep.alpha = inv.d1;
        rep.A.diag(0) = label.m;
        label.representative = rep;
        return label;
    }
    if (is_projective(x)) {
        ProjectiveCanonical pc = projective_canonicalize(x);
        label.variant = OrbitLabel::Variant::Projective;
        label.epsilon = pc.epsilon;
        label.k = pc.k;
        label.representative = pc.canonical;
        return label;
    }
    label.variant = OrbitLabel::Variant::Unclassified;
    label.invariants = inv;
    label.representative = reduce_diagonal(x).element;
    return label;
}

bool is_fundamental_discriminant(const Int& n) {
    Int r4 = floor_mod(n, 4);
    if (r4 == 1) return is_squarefree(n);
    if (r4 != 0) return false;
    Int k = exact_div(n, 4);
    Int k4 = floor_mod(k, 4);
    return (k4 == 2 || k4 == 3) && is_squarefree(k);
}

}  // namespace fmz
