#include "fmz/selftest.hpp"

#include "fmz/cubes.hpp"
#include "fmz/io.hpp"
#include "fmz/poly.hpp"
#include "fmz/random.hpp"
#include "fmz/reduction.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace fmz {

namespace {

using Check = std::function<std::optional<std::string>(Rng&, int)>;

struct Identity {
    const char* suite;
    const char* name;
    Check run;
};

constexpr JordanKind kAllKinds[] = {JordanKind::Diag3, JordanKind::H3F, JordanKind::H3B, JordanKind::H3H,
                                    JordanKind::H3O};
constexpr JordanKind kReducible[] = {JordanKind::Diag3, JordanKind::H3B, JordanKind::H3H, JordanKind::H3O};
constexpr JordanKind kHermitianSplit[] = {JordanKind::H3B, JordanKind::H3H, JordanKind::H3O};
constexpr Algebra kAlgebras[] = {Algebra::F, Algebra::B, Algebra::H, Algebra::O};

std::string show(const Freud<Int>& x) { return to_json(x).dump(); }

std::string show(JordanKind k, const Jordan<Int>& X) {
    return std::string(kind_name(k)) + " " + jordan_to_json(X).dump();
}

// Runs `body` on `samples` random elements of every kind; returns the first failure.
template <class Kinds, class Body>
std::optional<std::string> for_kinds(const Kinds& kinds, int samples, Body body) {
    for (JordanKind k : kinds) {
        for (int n = 0; n < samples; ++n) {
            if (auto f = body(k)) return f;
        }
    }
    return std::nullopt;
}

std::vector<Identity> identities() {
    std::vector<Identity> ids;

    ids.push_back({"composition", "n(xy) = n(x) n(y)", [](Rng& rng, int samples) -> std::optional<std::string> {
        for (Algebra a : kAlgebras) {
            for (int n = 0; n < samples; ++n) {
                auto x = rng.comp(a, 10), y = rng.comp(a, 10);
                if ((x * y).norm() != x.norm() * y.norm()) return std::string(algebra_name(a));
            }
        }
        return std::nullopt;
    }});
    ids.push_back({"composition", "conj(xy) = conj(y) conj(x)", [](Rng& rng, int samples) -> std::optional<std::string> {
        for (Algebra a : kAlgebras) {
            for (int n = 0; n < samples; ++n) {
                auto x = rng.comp(a, 10), y = rng.comp(a, 10);
                if ((x * y).conj() != y.conj() * x.conj()) return std::string(algebra_name(a));
            }
        }
        return std::nullopt;
    }});
    ids.push_back({"composition", "x conj(x) = n(x)", [](Rng& rng, int samples) -> std::optional<std::string> {
        for (Algebra a : kAlgebras) {
            for (int n = 0; n < samples; ++n) {
                auto x = rng.comp(a, 10);
                if (x * x.conj() != Comp<Int>::scalar(a, x.norm())) return std::string(algebra_name(a));
            }
        }
        return std::nullopt;
    }});

    ids.push_back({"jordan", "(A#)# = N(A) A", [](Rng& rng, int samples) {
        return for_kinds(kAllKinds, samples, [&](JordanKind k) -> std::optional<std::string> {
            auto A = rng.jordan(k, 10);
            if (sharp(sharp(A)) != norm(A) * A) return show(k, A);
            return std::nullopt;
        });
    }});
    ids.push_back({"jordan", "(A, A#) = 3 N(A)", [](Rng& rng, int samples) {
        return for_kinds(kAllKinds, samples, [&](JordanKind k) -> std::optional<std::string> {
            auto A = rng.jordan(k, 10);
            if (trace_form(A, sharp(A)) != 3 * norm(A)) return show(k, A);
            return std::nullopt;
        });
    }});
    ids.push_back({"jordan", "(X, Y) = tr X tr Y - S(X, Y)", [](Rng& rng, int samples) {
        return for_kinds(kAllKinds, samples, [&](JordanKind k) -> std::optional<std::string> {
            auto X = rng.jordan(k, 10), Y = rng.jordan(k, 10);
            Int s = spur(X + Y) - spur(X) - spur(Y);
            if (trace_form(X, Y) != trace(X) * trace(Y) - s) return show(k, X);
            return std::nullopt;
        });
    }});

    ids.push_back({"structure", "N(s X) = lambda N(X)", [](Rng& rng, int samples) {
        return for_kinds(kAllKinds, samples, [&](JordanKind k) -> std::optional<std::string> {
            auto s = rng.structure_map(k, 3, 3);
            auto X = rng.jordan(k, 10);
            if (norm(s.apply(X)) != s.multiplier() * norm(X)) return show(k, X);
            return std::nullopt;
        });
    }});
    ids.push_back({"structure", "(s X, s*^-1 Y) = (X, Y)", [](Rng& rng, int samples) {
        return for_kinds(kAllKinds, samples, [&](JordanKind k) -> std::optional<std::string> {
            auto s = rng.structure_map(k, 3, 3);
            auto X = rng.jordan(k, 10), Y = rng.jordan(k, 10);
            if (trace_form(s.apply(X), s.adjoint_inverse().apply(Y)) != trace_form(X, Y)) return show(k, X);
            return std::nullopt;
        });
    }});
    ids.push_back({"structure", "Smith form replays to the invariant factors", [](Rng& rng, int samples) {
        return for_kinds(kHermitianSplit, samples, [&](JordanKind k) -> std::optional<std::string> {
            auto A = rng.jordan(k, 10);
            SmithForm f = smith_normal_form(A);
            InvariantFactors inv = invariant_factors(A);
            Jordan<Int> D = Jordan<Int>::diagonal(k, f.d[0], f.d[1], f.d[2]);
            if (f.witness.apply(A) != D) return show(k, A);
            if (f.d[0] != inv.d1 || f.d[1] != inv.d2 || f.d[2] != inv.d3) return show(k, A);
            return std::nullopt;
        });
    }});

    ids.push_back({"freudenthal", "tau^2 = -Id", [](Rng& rng, int samples) {
        return for_kinds(kAllKinds, samples, [&](JordanKind k) -> std::optional<std::string> {
            auto x = rng.freud(k, 10);
            if (apply_word(negation_word<Int>(), x) != -x) return show(x);
            return std::nullopt;
        });
    }});
    ids.push_back({"freudenthal", "phi(-1) psi(1) phi(-1) = tau", [](Rng& rng, int samples) {
        return for_kinds(kAllKinds, samples, [&](JordanKind k) -> std::optional<std::string> {
            auto x = rng.freud(k, 10);
            Jordan<Int> one = Jordan<Int>::unit(k);
            Word<Int> w{Phi<Int>{-one}, Psi<Int>{one}, Phi<Int>{-one}};
            if (apply_word(w, x) != apply_generator(Generator<Int>{Tau{}}, x)) return show(x);
            return std::nullopt;
        });
    }});
    ids.push_back({"freudenthal", "generators preserve {x, y} and q'", [](Rng& rng, int samples) {
        return for_kinds(kAllKinds, samples, [&](JordanKind k) -> std::optional<std::string> {
            auto x = rng.freud(k, 5), y = rng.freud(k, 5);
            auto g = rng.generator(k, 2);
            auto gx = apply_generator(g, x), gy = apply_generator(g, y);
            if (symplectic(gx, gy) != symplectic(x, y)) return show(x);
            if (quartic_reduced(gx) != quartic_reduced(x)) return show(x);
            return std::nullopt;
        });
    }});
    ids.push_back({"freudenthal", "q = -2 q'", [](Rng& rng, int samples) {
        return for_kinds(kAllKinds, samples, [&](JordanKind k) -> std::optional<std::string> {
            auto x = rng.freud(k, 10);
            if (quartic(x) != -2 * quartic_reduced(x)) return show(x);
            return std::nullopt;
        });
    }});

    ids.push_back({"reduction", "q'(x) = 0 or 1 mod 4", [](Rng& rng, int samples) {
        return for_kinds(kReducible, samples, [&](JordanKind k) -> std::optional<std::string> {
            auto x = rng.freud(k, 10);
            Int r = floor_mod(quartic_reduced(x), 4);
            if (r != 0 && r != 1) return show(x);
            return std::nullopt;
        });
    }});
    ids.push_back({"reduction", "diagonal reduction replays with alpha = gcd", [](Rng& rng, int samples) {
        return for_kinds(kReducible, samples, [&](JordanKind k) -> std::optional<std::string> {
            auto x = rng.freud(k, 10);
            DiagonalReduced r = reduce_diagonal(x);
            if (!is_diagonal_reduced(r.element) || r.element.alpha != content(x)) return show(x);
            if (apply_word(r.witness, x) != r.element) return show(x);
            return std::nullopt;
        });
    }});
    ids.push_back({"reduction", "projective canonical form has 4k + eps^2 = q'", [](Rng& rng, int samples) {
        return for_kinds(kReducible, samples, [&](JordanKind k) -> std::optional<std::string> {
            auto x = rng.freud(k, 10);
            if (!is_projective(x)) return std::nullopt;
            ProjectiveCanonical c = projective_canonicalize(x);
            if (4 * c.k + c.epsilon * c.epsilon != quartic_reduced(x)) return show(x);
            return std::nullopt;
        });
    }});
    ids.push_back({"reduction", "(1,2,diag(1,1,2),0) projective, (1,2,diag(1,2,2),0) not",
                   [](Rng&, int) -> std::optional<std::string> {
                       Freud<Int> x(JordanKind::H3B);
                       x.alpha = 1;
                       x.beta = 2;
                       x.A = Jordan<Int>::diagonal(JordanKind::H3B, 1, 1, 2);
                       Freud<Int> y = x;
                       y.A.diag(1) = 2;
                       if (!is_projective(x)) return show(x);
                       if (is_projective(y)) return show(y);
                       return std::nullopt;
                   }});

    ids.push_back({"isomorphisms", "cube map is equivariant", [](Rng& rng, int samples) -> std::optional<std::string> {
        for (int n = 0; n < samples; ++n) {
            auto x = rng.freud(JordanKind::Diag3, 10);
            Generator<Int> g = rng.coin() ? Generator<Int>{Phi<Int>{rng.jordan(JordanKind::Diag3, 3)}}
                                          : Generator<Int>{Psi<Int>{rng.jordan(JordanKind::Diag3, 3)}};
            if (to_cube(apply_generator(g, x)) != act(cube_generator_image(g), to_cube(x))) return show(x);
            if (from_cube(to_cube(x)) != x) return show(x);
        }
        return std::nullopt;
    }});
    ids.push_back({"isomorphisms", "wedge map is equivariant", [](Rng& rng, int samples) -> std::optional<std::string> {
        for (int n = 0; n < samples; ++n) {
            auto x = rng.freud(JordanKind::H3B, 10);
            auto g = rng.generator(JordanKind::H3B, 2);
            if (to_wedge(apply_generator(g, x)) != act(wedge_generator_image(g), to_wedge(x))) return show(x);
            if (from_wedge(to_wedge(x)) != x) return show(x);
        }
        return std::nullopt;
    }});

    ids.push_back({"cubes", "disc(R_i) = q' as polynomials", [](Rng&, int) -> std::optional<std::string> {
        Freud<Poly> x(JordanKind::Diag3);
        x.alpha = Poly::variable(0);
        x.beta = Poly::variable(1);
        for (int i = 0; i < 3; ++i) {
            x.A.diag(i) = Poly::variable(2 + i);
            x.B.diag(i) = Poly::variable(5 + i);
        }
        Poly q = quartic_reduced(x);
        auto r = rotation_forms(x);
        for (int i = 0; i < 3; ++i) {
            if (r[i].discriminant() != q) return "R" + std::to_string(i + 1);
        }
        return std::nullopt;
    }});
    ids.push_back({"cubes", "rotation forms equal slicing forms", [](Rng& rng, int samples) -> std::optional<std::string> {
        for (int n = 0; n < samples; ++n) {
            auto x = rng.freud(JordanKind::Diag3, 10);
            if (!correspondence_check(x)) return show(x);
        }
        return std::nullopt;
    }});

    return ids;
}

}  // namespace

const std::vector<std::string>& selftest_suites() {
    static const std::vector<std::string> suites{"composition", "jordan",       "structure", "freudenthal",
                                                 "reduction",   "isomorphisms", "cubes"};
    return suites;
}

std::vector<SelftestCheck> run_selftest(const std::vector<std::string>& suites, std::uint64_t seed, int samples) {
    for (const auto& s : suites) {
        const auto& known = selftest_suites();
        if (std::find(known.begin(), known.end(), s) == known.end()) throw DomainError("unknown selftest suite \"" + s + "\"");
    }
    std::vector<SelftestCheck> out;
    Rng rng(seed);
    for (const auto& id : identities()) {
        if (!suites.empty() && std::find(suites.begin(), suites.end(), id.suite) == suites.end()) continue;
        SelftestCheck c{id.suite, id.name, true, ""};
        try {
            if (auto f = id.run(rng, samples)) {
                c.passed = false;
                c.detail = *f;
            }
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = e.what();
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace fmz
