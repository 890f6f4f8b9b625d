#pragma once

#include "fmz/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace fmz {

// Sparse multivariate polynomial with integer coefficients.
class Poly {
public:
    using Exponents = std::vector<int>;

    Poly() = default;
    Poly(int c) : Poly(Int(c)) {}
    Poly(const Int& c);

    static Poly variable(int i);

    const std::map<Exponents, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    Int evaluate(const std::vector<Int>& point) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(Poly a);

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Variables print as x0, x1, ... unless names are given.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void add_term(Exponents e, const Int& c);

    std::map<Exponents, Int> terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace fmz
