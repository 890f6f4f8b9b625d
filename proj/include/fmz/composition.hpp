#pragma once

#include "fmz/error.hpp"
#include "fmz/scalar.hpp"

#include <array>
#include <string>

namespace fmz {

// Split composition algebras over the integers: F (the scalars), B (F + F),
// H (2x2 matrices) and O (Cayley-Dickson double of H).
enum class Algebra { F, B, H, O };

constexpr int algebra_dim(Algebra a) {
    switch (a) {
        case Algebra::F: return 1;
        case Algebra::B: return 2;
        case Algebra::H: return 4;
        case Algebra::O: return 8;
    }
    return 0;
}

const char* algebra_name(Algebra a);
Algebra parse_algebra(const std::string& name);

namespace detail {

template <class S>
using Quat = std::array<S, 4>;

// 2x2 matrices stored row-major as [a, b, c, d].
template <class S>
Quat<S> quat_mul(const Quat<S>& p, const Quat<S>& q) {
    return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
            p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]};
}

template <class S>
Quat<S> quat_conj(const Quat<S>& p) {
    return {p[3], -p[1], -p[2], p[0]};
}

template <class S>
Quat<S> quat_add(const Quat<S>& p, const Quat<S>& q) {
    return {p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]};
}

template <class S>
Quat<S> quat_sub(const Quat<S>& p, const Quat<S>& q) {
    return {p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]};
}

}  // namespace detail

template <class S>
class Comp {
public:
    Comp() : Comp(Algebra::F) {}

    explicit Comp(Algebra a) : alg_(a) {
        for (auto& c : c_) c = S(0);
    }

    Comp(Algebra a, const std::array<S, 8>& coords) : alg_(a), c_(coords) {
        for (int i = algebra_dim(a); i < 8; ++i) c_[i] = S(0);
    }

    static Comp one(Algebra a) {
        Comp r(a);
        r.c_[0] = S(1);
        if (a == Algebra::B) r.c_[1] = S(1);
        if (a == Algebra::H || a == Algebra::O) r.c_[3] = S(1);
        return r;
    }

    static Comp scalar(Algebra a, const S& s) {
        Comp r = one(a);
        for (int i = 0; i < r.dim(); ++i) r.c_[i] *= s;
        return r;
    }

    static Comp basis(Algebra a, int m) {
        if (m < 0 || m >= algebra_dim(a)) throw DomainError("basis index out of range");
        Comp r(a);
        r.c_[m] = S(1);
        return r;
    }

    Algebra algebra() const { return alg_; }
    int dim() const { return algebra_dim(alg_); }

    const S& operator[](int i) const { return c_[i]; }
    S& operator[](int i) { return c_[i]; }
    const std::array<S, 8>& raw() const { return c_; }

    bool is_zero() const {
        for (int i = 0; i < dim(); ++i) {
            if (!fmz::is_zero(c_[i])) return false;
        }
        return true;
    }

    Comp conj() const {
        Comp r(alg_);
        switch (alg_) {
            case Algebra::F: r.c_[0] = c_[0]; break;
            case Algebra::B: r.c_[0] = c_[1]; r.c_[1] = c_[0]; break;
            case Algebra::H: r.set_quat(0, detail::quat_conj(quat(0))); break;
            case Algebra::O:
                r.set_quat(0, detail::quat_conj(quat(0)));
                for (int i = 4; i < 8; ++i) r.c_[i] = -c_[i];
                break;
        }
        return r;
    }

    S norm() const {
        switch (alg_) {
            case Algebra::F: return c_[0] * c_[0];
            case Algebra::B: return c_[0] * c_[1];
            case Algebra::H: return c_[0] * c_[3] - c_[1] * c_[2];
            case Algebra::O: return c_[0] * c_[3] - c_[1] * c_[2] + c_[4] * c_[7] - c_[5] * c_[6];
        }
        return S(0);
    }

    S trace() const {
        switch (alg_) {
            case Algebra::F: return S(2) * c_[0];
            case Algebra::B: return c_[0] + c_[1];
            case Algebra::H:
            case Algebra::O: return c_[0] + c_[3];
        }
        return S(0);
    }

    Comp& operator+=(const Comp& o) {
        check_same(o);
        for (int i = 0; i < dim(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    Comp& operator-=(const Comp& o) {
        check_same(o);
        for (int i = 0; i < dim(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    Comp& operator*=(const S& s) {
        for (int i = 0; i < dim(); ++i) c_[i] *= s;
        return *this;
    }

    friend Comp operator+(Comp a, const Comp& b) { return a += b; }
    friend Comp operator-(Comp a, const Comp& b) { return a -= b; }
    friend Comp operator*(const S& s, Comp a) { return a *= s; }
    friend Comp operator*(Comp a, const S& s) { return a *= s; }

    friend Comp operator-(Comp a) {
        for (int i = 0; i < a.dim(); ++i) a.c_[i] = -a.c_[i];
        return a;
    }

    friend Comp operator*(const Comp& x, const Comp& y) {
        x.check_same(y);
        Comp r(x.alg_);
        switch (x.alg_) {
            case Algebra::F: r.c_[0] = x.c_[0] * y.c_[0]; break;
            case Algebra::B:
                r.c_[0] = x.c_[0] * y.c_[0];
                r.c_[1] = x.c_[1] * y.c_[1];
                break;
            case Algebra::H: r.set_quat(0, detail::quat_mul(x.quat(0), y.quat(0))); break;
            case Algebra::O: {
                // (a + bv)(c + dv) = (ac - conj(d) b) + (da + b conj(c)) v
                auto a = x.quat(0), b = x.quat(4), c = y.quat(0), d = y.quat(4);
                r.set_quat(0, detail::quat_sub(detail::quat_mul(a, c),
                                               detail::quat_mul(detail::quat_conj(d), b)));
                r.set_quat(4, detail::quat_add(detail::quat_mul(d, a),
                                               detail::quat_mul(b, detail::quat_conj(c))));
                break;
            }
        }
        return r;
    }

    friend bool operator==(const Comp& x, const Comp& y) {
        if (x.alg_ != y.alg_) return false;
        for (int i = 0; i < x.dim(); ++i) {
            if (!(x.c_[i] == y.c_[i])) return false;
        }
        return true;
    }

    friend bool operator!=(const Comp& x, const Comp& y) { return !(x == y); }

private:
    detail::Quat<S> quat(int off) const { return {c_[off], c_[off + 1], c_[off + 2], c_[off + 3]}; }

    void set_quat(int off, const detail::Quat<S>& q) {
        for (int i = 0; i < 4; ++i) c_[off + i] = q[i];
    }

    void check_same(const Comp& o) const {
        if (alg_ != o.alg_) throw DomainError("mixed composition algebras");
    }

    Algebra alg_;
    std::array<S, 8> c_;
};

// Bilinear form of the norm: n(x + y) - n(x) - n(y) = t(x conj(y)).
template <class S>
S norm_pairing(const Comp<S>& x, const Comp<S>& y) {
    return (x * y.conj()).trace();
}

// Unit with inverse in the same ring; over the integers the norm must be +-1.
template <class S>
Comp<S> comp_inverse(const Comp<S>& u) {
    S n = u.norm();
    if (is_zero(n)) throw PreconditionError("composition element is not invertible");
    Comp<S> c = u.conj();
    if constexpr (ScalarTraits<S>::is_field) {
        for (int i = 0; i < c.dim(); ++i) c[i] /= n;
    } else {
        if (!(n == S(1) || n == S(-1))) throw PreconditionError("composition element is not a unit");
        c *= n;
    }
    return c;
}

}  // namespace fmz
