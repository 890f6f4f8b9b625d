#include "fmz/poly.hpp"

#include <algorithm>
#include <sstream>

#include "fmz/error.hpp"

namespace fmz {

namespace {

void trim(Poly::Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

Poly::Poly(const Int& c) {
    if (sgn(c) != 0) terms_[{}] = c;
}

Poly Poly::variable(int i) {
    Poly p;
    Exponents e(i + 1, 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

Int Poly::evaluate(const std::vector<Int>& point) const {
    Int total = 0;
    for (const auto& [e, c] : terms_) {
        Int t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= point.size()) throw DomainError("polynomial evaluated at too few coordinates");
            Int p;
            mpz_pow_ui(p.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
            t *= p;
        }
        total += t;
    }
    return total;
}

void Poly::add_term(Exponents e, const Int& c) {
    if (sgn(c) == 0) return;
    trim(e);
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Poly::Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

Poly operator-(Poly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int mag = abs(c);
        out << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool constant = e.empty();
        if (mag != 1 || constant) out << mag.get_str();
        bool need_star = mag != 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << '*';
            out << (i < names.size() ? names[i] : "x" + std::to_string(i));
            if (e[i] > 1) out << '^' << e[i];
            need_star = true;
        }
        first = false;
    }
    return out.str();
}

}  // namespace fmz
