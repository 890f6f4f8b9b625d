#pragma once

#include <gmpxx.h>

#include <string>

namespace fmz {

using Int = mpz_class;
using Rat = mpq_class;

enum class ScalarDomain { Int, Rat };

template <class S>
struct ScalarTraits {
    static constexpr bool is_field = false;
};

template <>
struct ScalarTraits<Int> {
    static constexpr bool is_field = false;
    static constexpr ScalarDomain domain = ScalarDomain::Int;
};

template <>
struct ScalarTraits<Rat> {
    static constexpr bool is_field = true;
    static constexpr ScalarDomain domain = ScalarDomain::Rat;
};

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

template <class T, class U>
bool is_zero(const __gmp_expr<T, U>& x) {
    return sgn(x) == 0;
}

template <class S>
bool is_zero(const S& x) {
    return x == S(0);
}

// Floor division and the matching nonnegative remainder (for b > 0).
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_mod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& n) {
    if (sgn(d) == 0) return sgn(n) == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

Int parse_int(const std::string& text);
Rat parse_rat(const std::string& text);

bool is_squarefree(const Int& n);

}  // namespace fmz
