#include "fmz/isomorphisms.hpp"

#include <algorithm>

namespace fmz {

namespace {

Matrix<Int> upper(const Int& a) { return Matrix<Int>{{Int(1), a}, {Int(0), Int(1)}}; }
Matrix<Int> lower(const Int& a) { return Matrix<Int>{{Int(1), Int(0)}, {a, Int(1)}}; }

CubeAction scalar_action(int sign) {
    CubeAction g;
    g.m[0] = Int(sign) * g.m[0];
    return g;
}

Word<Int> tau_word(JordanKind k) {
    Jordan<Int> one = Jordan<Int>::unit(k);
    return {Phi<Int>{-one}, Psi<Int>{one}, Phi<Int>{-one}};
}

// +1 or -1 when the map is +-Id on Diag3, 0 otherwise.
int diag3_sign(const StructureMap<Int>& s) {
    int sign = 0;
    for (int f = 0; f < 3; ++f) {
        Jordan<Int> E = Jordan<Int>::basis(JordanKind::Diag3, f);
        Jordan<Int> img = s.apply(E);
        int here = img == E ? 1 : img == -E ? -1 : 0;
        if (here == 0 || (sign != 0 && here != sign)) return 0;
        sign = here;
    }
    return sign;
}

struct Monomial {
    std::array<int, 3> idx;  // sorted vector indices, e = 0..2, f = 3..5
    int sign;
};

Monomial monomial(int a, int b, int c) {
    std::array<int, 3> v{a, b, c};
    int sign = 1;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (v[i] > v[j]) sign = -sign;
        }
    }
    std::sort(v.begin(), v.end());
    return {v, sign};
}

const std::array<Monomial, 20>& wedge_basis() {
    static const std::array<Monomial, 20> basis = [] {
        std::array<Monomial, 20> b{};
        b[0] = monomial(0, 1, 2);
        b[1] = monomial(3, 4, 5);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                int p = (j + 1) % 3, q = (j + 2) % 3;
                b[2 + 3 * i + j] = monomial(i, 3 + p, 3 + q);
                b[11 + 3 * i + j] = monomial(3 + i, p, q);
            }
        }
        return b;
    }();
    return basis;
}

Int minor3(const Matrix<Int>& g, const std::array<int, 3>& rows, const std::array<int, 3>& cols) {
    Matrix<Int> m(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m(i, j) = g(rows[i], cols[j]);
    }
    return determinant(m);
}

Matrix<Int> elementary(int i, int j, const Int& c) {
    Matrix<Int> m = Matrix<Int>::identity(3);
    m(i, j) += c;
    return m;
}

Matrix<Int> diagonal3(const Int& a, const Int& b, const Int& c) {
    Matrix<Int> m(3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

void require_unit(const Int& v) {
    if (v != 1 && v != -1) throw PreconditionError("structure data is not unimodular");
}

}  // namespace

CubeAction operator*(const CubeAction& g, const CubeAction& h) {
    CubeAction r;
    for (int f = 0; f < 3; ++f) r.m[f] = g.m[f] * h.m[f];
    return r;
}

Cube<Int> act(const CubeAction& g, const Cube<Int>& c) {
    Cube<Int> r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                Int s = 0;
                for (int p = 0; p < 2; ++p) {
                    for (int q = 0; q < 2; ++q) {
                        for (int t = 0; t < 2; ++t) s += g.m[0](i, p) * g.m[1](j, q) * g.m[2](k, t) * c.at(p, q, t);
                    }
                }
                r.at(i, j, k) = s;
            }
        }
    }
    return r;
}

CubeAction cube_generator_image(const Generator<Int>& g) {
    return std::visit(
        [](const auto& gen) -> CubeAction {
            using T = std::decay_t<decltype(gen)>;
            CubeAction r;
            if constexpr (std::is_same_v<T, Phi<Int>>) {
                if (gen.C.kind() != JordanKind::Diag3) throw DomainError("cube images need Diag3 generators");
                for (int f = 0; f < 3; ++f) r.m[f] = upper(gen.C.diag(f));
            } else if constexpr (std::is_same_v<T, Psi<Int>>) {
                if (gen.D.kind() != JordanKind::Diag3) throw DomainError("cube images need Diag3 generators");
                for (int f = 0; f < 3; ++f) r.m[f] = lower(gen.D.diag(f));
            } else if constexpr (std::is_same_v<T, Struct<Int>>) {
                if (gen.map.kind() != JordanKind::Diag3) throw DomainError("cube images need Diag3 generators");
                int sign = diag3_sign(gen.map);
                if (sign == 0) throw PreconditionError("only T(+Id) and T(-Id) have cube images");
                r = scalar_action(sign);
            } else {
                r = cube_word_image(tau_word(JordanKind::Diag3));
            }
            return r;
        },
        g);
}

CubeAction cube_word_image(const Word<Int>& w) {
    CubeAction r;
    for (const auto& g : w) r = cube_generator_image(g) * r;
    return r;
}

WedgeElement to_wedge(const Freud<Int>& x) {
    if (x.kind() != JordanKind::H3B) throw DomainError("the exterior-cube model needs an H3B element");
    WedgeElement w;
    w.coords[0] = x.alpha;
    w.coords[1] = x.beta;
    Matrix<Int> a = to_matrix3(x.A);
    Matrix<Int> b = to_matrix3(x.B);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            w.coords[2 + 3 * i + j] = a(i, j);
            w.coords[11 + 3 * i + j] = b(i, j);
        }
    }
    return w;
}

Freud<Int> from_wedge(const WedgeElement& w) {
    Matrix<Int> a(3, 3), b(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            a(i, j) = w.coords[2 + 3 * i + j];
            b(i, j) = w.coords[11 + 3 * i + j];
        }
    }
    return Freud<Int>(w.coords[0], w.coords[1], from_matrix3(a), from_matrix3(b));
}

MatrixPair<Int> as_matrix_pair(const StructureMap<Int>& s) {
    if (s.kind() != JordanKind::H3B) throw DomainError("matrix pairs describe H3B structure maps");
    Matrix<Int> L = Matrix<Int>::identity(3);
    Matrix<Int> R = Matrix<Int>::identity(3);
    for (const auto& mv : s.moves()) {
        Matrix<Int> l, r;
        std::visit(
            [&](const auto& m) {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, Permute>) {
                    Matrix<Int> p(3, 3);
                    for (int i = 0; i < 3; ++i) p(i, m.sigma[i]) = 1;
                    l = p;
                    r = p;
                } else if constexpr (std::is_same_v<T, DiagUnits<Int>>) {
                    for (const auto& u : m.u) {
                        require_unit(u[0]);
                        require_unit(u[1]);
                    }
                    l = diagonal3(m.u[0][0], m.u[1][0], m.u[2][0]);
                    r = diagonal3(m.u[0][1], m.u[1][1], m.u[2][1]);
                } else if constexpr (std::is_same_v<T, Congruence<Int>>) {
                    l = elementary(m.i, m.j, m.c[0]);
                    r = elementary(m.j, m.i, -m.c[1]);
                } else if constexpr (std::is_same_v<T, Negate>) {
                    l = Int(-1) * Matrix<Int>::identity(3);
                    r = Matrix<Int>::identity(3);
                } else if constexpr (std::is_same_v<T, Transpose>) {
                    throw PreconditionError("the transpose lies outside the connected structure group");
                } else {
                    require_unit(determinant(m.left));
                    require_unit(determinant(m.right));
                    l = m.left;
                    r = m.right;
                }
            },
            mv);
        L = l * L;
        R = r * R;
    }
    return {L, R};
}

Matrix<Int> wedge_generator_image(const Generator<Int>& g) {
    auto block = [](const Matrix<Int>& tl, const Matrix<Int>& tr, const Matrix<Int>& bl, const Matrix<Int>& br) {
        Matrix<Int> m(6, 6);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                m(i, j) = tl(i, j);
                m(i, j + 3) = tr(i, j);
                m(i + 3, j) = bl(i, j);
                m(i + 3, j + 3) = br(i, j);
            }
        }
        return m;
    };
    const Matrix<Int> I = Matrix<Int>::identity(3);
    const Matrix<Int> Z(3, 3);
    return std::visit(
        [&](const auto& gen) -> Matrix<Int> {
            using T = std::decay_t<decltype(gen)>;
            if constexpr (std::is_same_v<T, Phi<Int>>) {
                return block(I, to_matrix3(gen.C), Z, I);
            } else if constexpr (std::is_same_v<T, Psi<Int>>) {
                return block(I, Z, to_matrix3(gen.D), I);
            } else if constexpr (std::is_same_v<T, Struct<Int>>) {
                MatrixPair<Int> p = as_matrix_pair(gen.map);
                return block(determinant(p.right) * p.left, Z, Z, determinant(p.left) * p.right);
            } else {
                return wedge_word_image(tau_word(JordanKind::H3B));
            }
        },
        g);
}

Matrix<Int> wedge_word_image(const Word<Int>& w) {
    Matrix<Int> r = Matrix<Int>::identity(6);
    for (const auto& g : w) r = wedge_generator_image(g) * r;
    return r;
}

Matrix<Int> exterior_cube(const Matrix<Int>& g) {
    if (g.rows() != 6 || g.cols() != 6) throw DomainError("exterior cube needs a 6x6 matrix");
    const auto& basis = wedge_basis();
    Matrix<Int> w(20, 20);
    for (int t = 0; t < 20; ++t) {
        for (int s = 0; s < 20; ++s) {
            w(t, s) = basis[t].sign * basis[s].sign * minor3(g, basis[t].idx, basis[s].idx);
        }
    }
    return w;
}

WedgeElement act(const Matrix<Int>& g, const WedgeElement& w) {
    std::vector<Int> v(w.coords.begin(), w.coords.end());
    std::vector<Int> r = exterior_cube(g).apply(v);
    WedgeElement out;
    std::copy(r.begin(), r.end(), out.coords.begin());
    return out;
}

WedgeElement wedge_transpose(const WedgeElement& w) {
    WedgeElement r = w;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r.coords[2 + 3 * i + j] = w.coords[2 + 3 * j + i];
            r.coords[11 + 3 * i + j] = w.coords[11 + 3 * j + i];
        }
    }
    return r;
}

}  // namespace fmz
