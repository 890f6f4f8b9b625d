#include "fmz/random.hpp"

#include <algorithm>

namespace fmz {

long Rng::uniform(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(engine_);
}

Comp<Int> Rng::comp(Algebra a, long height) {
    Comp<Int> c(a);
    for (int m = 0; m < algebra_dim(a); ++m) c[m] = coefficient(height);
    return c;
}

Jordan<Int> Rng::jordan(JordanKind k, long height) {
    std::vector<Int> v(kind_dim(k));
    for (auto& c : v) c = coefficient(height);
    return Jordan<Int>::from_coords(k, v);
}

Freud<Int> Rng::freud(JordanKind k, long height) {
    Int a = coefficient(height);
    Int b = coefficient(height);
    Jordan<Int> A = jordan(k, height);
    Jordan<Int> B = jordan(k, height);
    return Freud<Int>(a, b, A, B);
}

Freud<Rat> Rng::freud_rat(JordanKind k, long height) {
    std::vector<Rat> v(2 + 2 * kind_dim(k));
    for (auto& c : v) {
        Rat r(coefficient(height), Int(uniform(1, height > 0 ? height : 1)));
        r.canonicalize();
        c = r;
    }
    return Freud<Rat>::from_coords(k, v);
}

Comp<Int> Rng::unit(Algebra a) {
    Comp<Int> u = Comp<Int>::one(a);
    if (a != Algebra::F && coin()) u = negative_unit<Int>(a);
    if (coin()) u = Int(-1) * u;
    return u;
}

StructureMap<Int> Rng::structure_map(JordanKind k, int moves, long height) {
    StructureMap<Int> s(k);
    Algebra a = kind_algebra(k);
    for (int n = 0; n < moves; ++n) {
        long choice = uniform(0, k == JordanKind::Diag3 ? 1 : 2);
        if (choice == 0) {
            Permute p;
            std::shuffle(p.sigma.begin(), p.sigma.end(), engine_);
            s.then(p);
        } else if (choice == 1) {
            DiagUnits<Int> d{{unit(a), unit(a), unit(a)}};
            if (a == Algebra::O) {
                // Norm -1 units only in pairs over the octonions.
                Comp<Int> neg = negative_unit<Int>(a);
                for (auto& u : d.u) u = coin() ? Comp<Int>::one(a) : Int(-1) * Comp<Int>::one(a);
                if (coin()) {
                    int i = static_cast<int>(uniform(0, 2));
                    d.u[i] = neg;
                    d.u[(i + 1) % 3] = neg;
                }
            }
            s.then(d);
        } else {
            int i = static_cast<int>(uniform(0, 2));
            int j = (i + static_cast<int>(uniform(1, 2))) % 3;
            s.then(Congruence<Int>{i, j, comp(a, height)});
        }
    }
    return s;
}

Generator<Int> Rng::generator(JordanKind k, long height) {
    switch (uniform(0, 3)) {
        case 0: return Phi<Int>{jordan(k, height)};
        case 1: return Psi<Int>{jordan(k, height)};
        case 2: return Struct<Int>{structure_map(k, 2, height)};
        default: return Tau{};
    }
}

Word<Int> Rng::word(JordanKind k, int length, long height) {
    Word<Int> w;
    for (int n = 0; n < length; ++n) w.push_back(generator(k, height));
    return w;
}

}  // namespace fmz
