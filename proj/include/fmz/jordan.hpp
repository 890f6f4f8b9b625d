#pragma once

#include "fmz/composition.hpp"

#include <array>
#include <string>
#include <vector>

namespace fmz {

// Diag3 is the diagonal algebra F^3; H3X are 3x3 Hermitian matrices over X.
enum class JordanKind { Diag3, H3F, H3B, H3H, H3O };

constexpr Algebra kind_algebra(JordanKind k) {
    switch (k) {
        case JordanKind::Diag3:
        case JordanKind::H3F: return Algebra::F;
        case JordanKind::H3B: return Algebra::B;
        case JordanKind::H3H: return Algebra::H;
        case JordanKind::H3O: return Algebra::O;
    }
    return Algebra::F;
}

constexpr int kind_dim(JordanKind k) {
    return k == JordanKind::Diag3 ? 3 : 3 + 3 * algebra_dim(kind_algebra(k));
}

const char* kind_name(JordanKind k);
JordanKind parse_kind(const std::string& name);

// Element laid out as
//   [[ a    z    y* ]
//    [ z*   b    x  ]
//    [ y    x*   c  ]]
// with off-diagonal slots stored in the order x, y, z. Slot x sits at (2,3),
// y at (3,1) and z at (1,2); the transposed positions hold conjugates.
template <class S>
class Jordan {
public:
    Jordan() : Jordan(JordanKind::Diag3) {}

    explicit Jordan(JordanKind k) : kind_(k) {
        for (auto& d : d_) d = S(0);
        for (auto& o : off_) o = Comp<S>(kind_algebra(k));
    }

    static Jordan zero(JordanKind k) { return Jordan(k); }

    static Jordan unit(JordanKind k) {
        Jordan r(k);
        for (auto& d : r.d_) d = S(1);
        return r;
    }

    static Jordan diagonal(JordanKind k, const S& a, const S& b, const S& c) {
        Jordan r(k);
        r.d_ = {a, b, c};
        return r;
    }

    static Jordan basis(JordanKind k, int m) {
        std::vector<S> v(kind_dim(k), S(0));
        if (m < 0 || m >= kind_dim(k)) throw DomainError("Jordan basis index out of range");
        v[m] = S(1);
        return from_coords(k, v);
    }

    static Jordan from_coords(JordanKind k, const std::vector<S>& v) {
        if (static_cast<int>(v.size()) != kind_dim(k)) throw DomainError("wrong coordinate count for Jordan element");
        Jordan r(k);
        for (int i = 0; i < 3; ++i) r.d_[i] = v[i];
        if (k == JordanKind::Diag3) return r;
        int cd = algebra_dim(kind_algebra(k));
        for (int s = 0; s < 3; ++s) {
            for (int m = 0; m < cd; ++m) r.off_[s][m] = v[3 + s * cd + m];
        }
        return r;
    }

    std::vector<S> coords() const {
        std::vector<S> v;
        v.reserve(kind_dim(kind_));
        for (const auto& d : d_) v.push_back(d);
        if (kind_ == JordanKind::Diag3) return v;
        for (const auto& o : off_) {
            for (int m = 0; m < o.dim(); ++m) v.push_back(o[m]);
        }
        return v;
    }

    JordanKind kind() const { return kind_; }
    Algebra algebra() const { return kind_algebra(kind_); }
    int dim() const { return kind_dim(kind_); }

    const S& diag(int i) const { return d_[i]; }
    S& diag(int i) { return d_[i]; }

    // Off-diagonal slots: 0 = x, 1 = y, 2 = z.
    const Comp<S>& off(int s) const { return off_[s]; }
    Comp<S>& off(int s) { return off_[s]; }

    // Matrix entry (i, j), 0-based.
    Comp<S> entry(int i, int j) const {
        if (i == j) return Comp<S>::scalar(algebra(), d_[i]);
        auto [slot, stored] = slot_of(i, j);
        return stored ? off_[slot] : off_[slot].conj();
    }

    // Sets entry (i, j) with i != j; the mirrored entry becomes the conjugate.
    void set_entry(int i, int j, const Comp<S>& w) {
        auto [slot, stored] = slot_of(i, j);
        off_[slot] = stored ? w : w.conj();
    }

    bool is_zero() const {
        for (const auto& d : d_) {
            if (!fmz::is_zero(d)) return false;
        }
        if (kind_ == JordanKind::Diag3) return true;
        for (const auto& o : off_) {
            if (!o.is_zero()) return false;
        }
        return true;
    }

    bool is_diagonal() const {
        if (kind_ == JordanKind::Diag3) return true;
        for (const auto& o : off_) {
            if (!o.is_zero()) return false;
        }
        return true;
    }

    Jordan& operator+=(const Jordan& o) {
        check_same(o);
        for (int i = 0; i < 3; ++i) d_[i] += o.d_[i];
        if (kind_ != JordanKind::Diag3) {
            for (int i = 0; i < 3; ++i) off_[i] += o.off_[i];
        }
        return *this;
    }

    Jordan& operator-=(const Jordan& o) {
        check_same(o);
        for (int i = 0; i < 3; ++i) d_[i] -= o.d_[i];
        if (kind_ != JordanKind::Diag3) {
            for (int i = 0; i < 3; ++i) off_[i] -= o.off_[i];
        }
        return *this;
    }

    Jordan& operator*=(const S& s) {
        for (auto& d : d_) d *= s;
        if (kind_ != JordanKind::Diag3) {
            for (auto& o : off_) o *= s;
        }
        return *this;
    }

    friend Jordan operator+(Jordan a, const Jordan& b) { return a += b; }
    friend Jordan operator-(Jordan a, const Jordan& b) { return a -= b; }
    friend Jordan operator*(const S& s, Jordan a) { return a *= s; }
    friend Jordan operator*(Jordan a, const S& s) { return a *= s; }
    friend Jordan operator-(Jordan a) { return a *= S(-1); }

    friend bool operator==(const Jordan& a, const Jordan& b) {
        if (a.kind_ != b.kind_) return false;
        for (int i = 0; i < 3; ++i) {
            if (!(a.d_[i] == b.d_[i])) return false;
        }
        if (a.kind_ == JordanKind::Diag3) return true;
        for (int i = 0; i < 3; ++i) {
            if (a.off_[i] != b.off_[i]) return false;
        }
        return true;
    }

    friend bool operator!=(const Jordan& a, const Jordan& b) { return !(a == b); }

    void check_same(const Jordan& o) const {
        if (kind_ != o.kind_) throw DomainError("mixed Jordan kinds");
    }

private:
    static std::pair<int, bool> slot_of(int i, int j) {
        // (1,2) -> z, (2,3) -> x, (3,1) -> y in 1-based positions.
        if (i == 0 && j == 1) return {2, true};
        if (i == 1 && j == 0) return {2, false};
        if (i == 1 && j == 2) return {0, true};
        if (i == 2 && j == 1) return {0, false};
        if (i == 2 && j == 0) return {1, true};
        if (i == 0 && j == 2) return {1, false};
        throw DomainError("not an off-diagonal position");
    }

    JordanKind kind_;
    std::array<S, 3> d_;
    std::array<Comp<S>, 3> off_;
};

template <class S>
S trace(const Jordan<S>& A) {
    return A.diag(0) + A.diag(1) + A.diag(2);
}

template <class S>
S norm(const Jordan<S>& A) {
    const S& a = A.diag(0);
    const S& b = A.diag(1);
    const S& c = A.diag(2);
    S r = a * b * c;
    if (A.kind() == JordanKind::Diag3) return r;
    const auto& x = A.off(0);
    const auto& y = A.off(1);
    const auto& z = A.off(2);
    r -= a * x.norm();
    r -= b * y.norm();
    r -= c * z.norm();
    r += ((x * y) * z).trace();
    return r;
}

template <class S>
Jordan<S> sharp(const Jordan<S>& A) {
    const S& a = A.diag(0);
    const S& b = A.diag(1);
    const S& c = A.diag(2);
    Jordan<S> r(A.kind());
    if (A.kind() == JordanKind::Diag3) {
        r.diag(0) = b * c;
        r.diag(1) = c * a;
        r.diag(2) = a * b;
        return r;
    }
    const auto& x = A.off(0);
    const auto& y = A.off(1);
    const auto& z = A.off(2);
    r.diag(0) = b * c - x.norm();
    r.diag(1) = a * c - y.norm();
    r.diag(2) = a * b - z.norm();
    r.off(0) = z.conj() * y.conj() - a * x;
    r.off(1) = x.conj() * z.conj() - b * y;
    r.off(2) = y.conj() * x.conj() - c * z;
    return r;
}

template <class S>
Jordan<S> cross(const Jordan<S>& X, const Jordan<S>& Y) {
    return sharp(X + Y) - sharp(X) - sharp(Y);
}

// (X, Y) = tr(X o Y); on off-diagonal slots this is t(x conj(x')).
template <class S>
S trace_form(const Jordan<S>& X, const Jordan<S>& Y) {
    X.check_same(Y);
    S r = X.diag(0) * Y.diag(0) + X.diag(1) * Y.diag(1) + X.diag(2) * Y.diag(2);
    if (X.kind() == JordanKind::Diag3) return r;
    for (int s = 0; s < 3; ++s) r += norm_pairing(X.off(s), Y.off(s));
    return r;
}

// S(X) = tr(X#).
template <class S>
S spur(const Jordan<S>& X) {
    return trace(sharp(X));
}

// Bilinear spur S(X, Y) = tr(X) tr(Y) - (X, Y).
template <class S>
S spur_form(const Jordan<S>& X, const Jordan<S>& Y) {
    return trace(X) * trace(Y) - trace_form(X, Y);
}

// 2{X, Y, Z} = (X, Y) Z + (Z, Y) X - (X x Z) x Y.
template <class S>
Jordan<S> triple_doubled(const Jordan<S>& X, const Jordan<S>& Y, const Jordan<S>& Z) {
    return trace_form(X, Y) * Z + trace_form(Z, Y) * X - cross(cross(X, Z), Y);
}

template <class S>
Jordan<S> jordan_product(const Jordan<S>& X, const Jordan<S>& Y) {
    static_assert(ScalarTraits<S>::is_field, "the Jordan product needs 1/2");
    Jordan<S> r = cross(X, Y) + trace(X) * Y + trace(Y) * X - spur_form(X, Y) * Jordan<S>::unit(X.kind());
    return r * S(1, 2);
}

// Rank in the sense of the cubic norm: 0 for zero, 1 when X# = 0,
// 2 when N(X) = 0, otherwise 3.
template <class S>
int jrank(const Jordan<S>& X) {
    if (X.is_zero()) return 0;
    if (sharp(X).is_zero()) return 1;
    if (is_zero(norm(X))) return 2;
    return 3;
}

// Diag3 sits inside H3F as the diagonal matrices.
template <class S>
Jordan<S> embed_diagonal(const Jordan<S>& A, JordanKind target) {
    if (!A.is_diagonal()) throw DomainError("only diagonal elements can be re-embedded");
    return Jordan<S>::diagonal(target, A.diag(0), A.diag(1), A.diag(2));
}

}  // namespace fmz
