#include "fmz/structure.hpp"

#include <optional>

namespace fmz {

namespace {

// For the split bases used here every basis vector e_p has norm zero and
// t(e_p conj(w)) = sign * w_m for exactly one coordinate m.
struct Pairing {
    int partner;
    int sign;
};

Pairing pairing_for_coordinate(Algebra a, int m) {
    for (int p = 0; p < algebra_dim(a); ++p) {
        Int v = norm_pairing(Comp<Int>::basis(a, p), Comp<Int>::basis(a, m));
        if (sgn(v) != 0) return {p, sgn(v)};
    }
    throw InvariantError("degenerate norm pairing");
}

// Quotient q with w - q v in [0, |v|).
Int reduce_quotient(const Int& w, const Int& v) {
    Int q = floor_div(w, abs(v));
    return sgn(v) < 0 ? Int(-q) : q;
}

class Diagonalizer {
public:
    explicit Diagonalizer(const Jordan<Int>& A) : X_(A), map_(A.kind()), alg_(A.algebra()) {}

    std::pair<std::array<Int, 3>, StructureMap<Int>> run() {
        clear_block({0, 1, 2});
        clear_block({1, 2});
        fix_signs();
        return {{X_.diag(0), X_.diag(1), X_.diag(2)}, map_};
    }

private:
    void apply(const Move<Int>& m) {
        X_ = std::visit([&](const auto& mv) { return detail::apply_move(mv, X_); }, m);
        map_.then(m);
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        Permute p;
        std::swap(p.sigma[i], p.sigma[j]);
        apply(p);
    }

    void congruence(int i, int j, const Comp<Int>& c) { apply(Congruence<Int>{i, j, c}); }

    struct Candidate {
        Int magnitude;
        int i = -1, j = -1, coord = -1;  // j == -1 marks a diagonal entry
    };

    std::optional<Candidate> smallest(const std::vector<int>& block, int pivot) const {
        std::optional<Candidate> best;
        auto offer = [&](const Int& v, int i, int j, int m) {
            if (sgn(v) == 0) return;
            Int mag = abs(v);
            if (!best || mag < best->magnitude) best = Candidate{mag, i, j, m};
        };
        // Ties keep the earliest offer: pivot, other diagonals, then off-diagonals.
        offer(X_.diag(pivot), pivot, -1, -1);
        for (int i : block) offer(X_.diag(i), i, -1, -1);
        for (int i : block) {
            for (int j : block) {
                if (i >= j) continue;
                Comp<Int> w = X_.entry(i, j);
                for (int m = 0; m < w.dim(); ++m) offer(w[m], i, j, m);
            }
        }
        return best;
    }

    // Moves coordinate m of X_ij onto the diagonal at position i, or leaves a
    // strictly smaller diagonal remainder there.
    void lift_to_diagonal(int i, int j, int m) {
        Int w = X_.entry(i, j)[m];
        Pairing pr = pairing_for_coordinate(alg_, m);
        Comp<Int> e = Comp<Int>::basis(alg_, pr.partner);
        // a_i + k * sign * w reduced into [0, |w|)
        Int q = reduce_quotient(X_.diag(i), w);
        Int k = -q * pr.sign;
        if (sgn(k) != 0) congruence(i, j, k * e);
        if (sgn(X_.diag(i)) == 0) congruence(i, j, Int(pr.sign) * e);
    }

    void clear_block(const std::vector<int>& block) {
        int p = block.front();
        for (;;) {
            auto cand = smallest(block, p);
            if (!cand) return;
            if (cand->j != -1) {
                lift_to_diagonal(cand->i, cand->j, cand->coord);
                continue;
            }
            if (cand->i != p) {
                swap_rows(p, cand->i);
                continue;
            }
            if (reduce_pivot_row(block, p)) continue;
            if (spread_nondivisible(block, p)) continue;
            return;
        }
    }

    // Reduces the pivot row modulo the pivot. Returns true when a nonzero
    // remainder (smaller than the pivot) is left behind.
    bool reduce_pivot_row(const std::vector<int>& block, int p) {
        Int v = X_.diag(p);
        bool leftover = false;
        for (int j : block) {
            if (j == p) continue;
            Comp<Int> w = X_.entry(p, j);
            Comp<Int> q(alg_);
            bool any = false;
            for (int m = 0; m < w.dim(); ++m) {
                q[m] = reduce_quotient(w[m], v);
                if (sgn(q[m]) != 0) any = true;
            }
            // Congruence(j, p, c) adds conj(c) * v to X_pj.
            if (any) congruence(j, p, -q.conj());
            if (!X_.entry(p, j).is_zero()) leftover = true;
        }
        return leftover;
    }

    // With the pivot row clear, pushes an entry of the remaining block that the
    // pivot does not divide into the pivot row.
    bool spread_nondivisible(const std::vector<int>& block, int p) {
        Int v = X_.diag(p);
        std::vector<int> rest;
        for (int j : block) {
            if (j != p) rest.push_back(j);
        }
        for (int j : rest) {
            if (!divides(v, X_.diag(j))) {
                congruence(p, j, Comp<Int>::basis(alg_, 0));
                return true;
            }
        }
        if (rest.size() == 2) {
            int j = rest[0], k = rest[1];
            Comp<Int> w = X_.entry(j, k);
            for (int b = 0; b < w.dim(); ++b) {
                Comp<Int> e = Comp<Int>::basis(alg_, b);
                Comp<Int> moved = e * w;
                for (int m = 0; m < moved.dim(); ++m) {
                    if (!divides(v, moved[m])) {
                        congruence(p, j, e);
                        return true;
                    }
                }
            }
        }
        return false;
    }

    void fix_signs() {
        Comp<Int> one = Comp<Int>::one(alg_);
        Comp<Int> neg = negative_unit<Int>(alg_);
        bool n0 = sgn(X_.diag(0)) < 0;
        bool n1 = sgn(X_.diag(1)) < 0;
        if (n0 && n1) {
            apply(DiagUnits<Int>{{neg, neg, one}});
        } else if (n0) {
            apply(DiagUnits<Int>{{neg, one, neg}});
        } else if (n1) {
            apply(DiagUnits<Int>{{one, neg, neg}});
        }
    }

    Jordan<Int> X_;
    StructureMap<Int> map_;
    Algebra alg_;
};

void require_smith_kind(JordanKind k) {
    if (k != JordanKind::H3B && k != JordanKind::H3H && k != JordanKind::H3O) {
        throw DomainError(std::string("Smith normal form is not available for ") + kind_name(k));
    }
}

}  // namespace

std::pair<std::array<Int, 3>, StructureMap<Int>> diagonalize_norm_preserving(const Jordan<Int>& A) {
    require_smith_kind(A.kind());
    auto result = Diagonalizer(A).run();
    if (result.second.apply(A) != Jordan<Int>::diagonal(A.kind(), result.first[0], result.first[1], result.first[2])) {
        throw InvariantError("diagonalization witness does not reproduce the diagonal form");
    }
    return result;
}

SmithForm smith_normal_form(const Jordan<Int>& A) {
    auto [d, map] = diagonalize_norm_preserving(A);
    Int lambda = 1;
    if (sgn(d[2]) < 0) {
        // -X, then flip the first two entries back with a pair of norm -1 units.
        Comp<Int> one = Comp<Int>::one(A.algebra());
        Comp<Int> neg = negative_unit<Int>(A.algebra());
        map.then(Negate{});
        map.then(DiagUnits<Int>{{neg, neg, one}});
        d[2] = -d[2];
        lambda = -1;
    }
    return {d, lambda, map};
}

Int content(const Jordan<Int>& A) {
    Int g = 0;
    for (const auto& c : A.coords()) g = gcd(g, c);
    return g;
}

InvariantFactors invariant_factors(const Jordan<Int>& A) {
    require_smith_kind(A.kind());
    Int g1 = content(A);
    Int g2 = content(sharp(A));
    Int n = abs(norm(A));
    InvariantFactors f{g1, 0, 0};
    if (sgn(g1) != 0 && sgn(g2) != 0) {
        f.d2 = exact_div(g2, g1);
        f.d3 = exact_div(n, g2);
    }
    return f;
}

}  // namespace fmz
