#pragma once

#include "fmz/freudenthal.hpp"

#include <optional>
#include <string>

namespace fmz {

// (alpha, beta, diag(a1, a2, a3), 0) with alpha > 0 dividing beta and every a_i.
struct DiagonalReduced {
    Freud<Int> element;
    Word<Int> witness;
};

bool is_diagonal_reduced(const Freud<Int>& x);

DiagonalReduced reduce_diagonal(const Freud<Int>& x);

// The two-generator word phi(c E_slot) psi(D) taking (alpha, beta, diag(a), 0) to
// the element where only beta and a_slot change (slot is 0-based).
template <class S>
Word<S> lcomp_word(const Freud<S>& x, int slot, const S& c) {
    if (slot < 0 || slot > 2) throw DomainError("lcomp slot must be 0, 1 or 2");
    if (!x.B.is_zero() || !x.A.is_diagonal()) throw PreconditionError("lcomp needs (alpha, beta, diag(a), 0)");
    if (is_zero(x.alpha)) throw PreconditionError("lcomp needs alpha != 0");
    Jordan<S> E = Jordan<S>::basis(x.kind(), slot);
    Jordan<S> C = c * E;
    Jordan<S> pushed = cross(x.A, C);
    Jordan<S> D(x.kind());
    if constexpr (ScalarTraits<S>::is_field) {
        D = (S(-1) / x.alpha) * pushed;
    } else {
        for (int i = 0; i < 3; ++i) {
            if (!divides(x.alpha, pushed.diag(i))) throw PreconditionError("lcomp divisibility condition fails");
            D.diag(i) = -exact_div(pushed.diag(i), x.alpha);
        }
    }
    return {Phi<S>{C}, Psi<S>{D}};
}

template <class S>
Freud<S> lcomp_move(const Freud<S>& x, int slot, const S& c) {
    return apply_word(lcomp_word(x, slot, c), x);
}

struct InvariantVector {
    Int d1, d2, d3, d4;
    friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

Int content(const Freud<Int>& x);

InvariantVector invariants(const Freud<Int>& x);

// gcd of alpha A - B#, beta B - A# and Q(x); a possibly finer companion of d2.
Int alt_d2(const Freud<Int>& x);

enum class ProjectivityBasis {
    CubicGcdOne,       // gcd T(x,x,x) = 1
    CubicGcdLarge,     // gcd T(x,x,x) >= 3
    CubicZero,         // T(x,x,x) = 0
    BinaryForms,       // Diag3: the three associated binary forms
    ReducedRepresentative,  // gcd T = 2: the reduced representative is tested
};

struct ProjectivityResult {
    bool projective = false;
    Int cubic_gcd;
    ProjectivityBasis basis = ProjectivityBasis::CubicZero;
    // Set when the answer rests on the single representative produced by
    // reduce_diagonal (gcd T = 2 on a Hermitian kind).
    bool representative_dependent = false;
};

ProjectivityResult projectivity(const Freud<Int>& x);

inline bool is_projective(const Freud<Int>& x) { return projectivity(x).projective; }

struct ProjectiveCanonical {
    int epsilon = 0;
    Int k;
    Freud<Int> canonical;
    // Acts on the input, or on its image in H3B when the input is Diag3.
    Word<Int> witness;
    JordanKind witness_kind = JordanKind::H3B;
};

ProjectiveCanonical projective_canonicalize(const Freud<Int>& x);

// Freudenthal element over Diag3 viewed inside the H3B module.
Freud<Int> embed_in_h3b(const Freud<Int>& x);

struct OrbitLabel {
    enum class Variant { Rank0, Rank1, Rank2, Projective, Unclassified };
    Variant variant = Variant::Rank0;
    Int d1, m;                // Rank1 / Rank2
    int epsilon = 0;          // Projective
    Int k;                    // Projective
    InvariantVector invariants;          // Unclassified
    std::optional<Freud<Int>> representative;

    friend bool operator==(const OrbitLabel& a, const OrbitLabel& b);
};

std::string variant_name(OrbitLabel::Variant v);

OrbitLabel classify_orbit(const Freud<Int>& x);

// Canonical representative of a rank 1 or rank 2 element, with a word reaching it.
struct DegenerateCanonical {
    Freud<Int> representative;
    Word<Int> witness;
};

DegenerateCanonical degenerate_canonicalize(const Freud<Int>& x);

bool is_fundamental_discriminant(const Int& n);

}  // namespace fmz
