#include "fmz/scalar.hpp"

#include "fmz/error.hpp"

#include <cctype>

namespace fmz {

namespace {

bool valid_integer_text(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Int parse_int(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (!valid_integer_text(s)) throw ParseError("not an integer: '" + text + "'");
    return Int(s, 10);
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    std::string den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw ParseError("denominator must be unsigned: '" + text + "'");
    }
    Int den = parse_int(den_text);
    if (sgn(den) == 0) throw ParseError("zero denominator: '" + text + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

bool is_squarefree(const Int& n) {
    Int m = abs(n);
    if (sgn(m) == 0) return false;
    // Trial division is enough for the magnitudes the census and tests use.
    for (Int p = 2; p * p <= m; ++p) {
        if (divides(p, m)) {
            m /= p;
            if (divides(p, m)) return false;
        }
    }
    return true;
}

}  // namespace fmz
