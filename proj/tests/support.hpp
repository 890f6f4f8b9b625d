#pragma once

#include "fmz/io.hpp"
#include "fmz/random.hpp"

#include <ostream>

#include <array>

namespace fmz::test {

inline constexpr std::array<JordanKind, 5> kAllKinds{JordanKind::Diag3, JordanKind::H3F, JordanKind::H3B,
                                                     JordanKind::H3H, JordanKind::H3O};
inline constexpr std::array<JordanKind, 4> kReducibleKinds{JordanKind::Diag3, JordanKind::H3B, JordanKind::H3H,
                                                           JordanKind::H3O};
inline constexpr std::array<JordanKind, 3> kSplitKinds{JordanKind::H3B, JordanKind::H3H, JordanKind::H3O};
inline constexpr std::array<Algebra, 4> kAlgebras{Algebra::F, Algebra::B, Algebra::H, Algebra::O};

inline Freud<Int> element(JordanKind k, int alpha, int beta, const Jordan<Int>& A, const Jordan<Int>& B) {
    return Freud<Int>(Int(alpha), Int(beta), A, B);
}

inline Jordan<Int> diag(JordanKind k, long a, long b, long c) {
    return Jordan<Int>::diagonal(k, Int(a), Int(b), Int(c));
}

}  // namespace fmz::test

namespace fmz {

// Readable gtest failure messages.
inline void PrintTo(const Comp<Int>& x, std::ostream* os) {
    *os << "[";
    for (int i = 0; i < x.dim(); ++i) *os << (i ? "," : "") << x[i];
    *os << "]";
}
inline void PrintTo(const Jordan<Int>& X, std::ostream* os) { *os << jordan_to_json(X).dump(); }
inline void PrintTo(const Freud<Int>& x, std::ostream* os) { *os << to_json(x).dump(); }
inline void PrintTo(const Freud<Rat>& x, std::ostream* os) { *os << to_json(x).dump(); }
inline void PrintTo(const InvariantVector& v, std::ostream* os) { *os << to_json(v).dump(); }
inline void PrintTo(const Cube<Int>& c, std::ostream* os) { *os << to_json(c).dump(); }
inline void PrintTo(const WedgeElement& w, std::ostream* os) { *os << to_json(w).dump(); }
inline void PrintTo(const BinaryQuadraticForm<Int>& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const Matrix<Int>& m, std::ostream* os) {
    *os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        *os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) *os << (j ? " " : "") << m(i, j);
    }
    *os << "]";
}

}  // namespace fmz
