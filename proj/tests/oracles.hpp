#pragma once

// Independent reference implementations used only by the tests.

#include "fmz/freudenthal.hpp"
#include "fmz/matrix.hpp"

#include <array>
#include <utility>

namespace fmz::oracle {

// Forward-mode dual number v + d eps with eps^2 = 0: evaluating a polynomial at
// (x + e_i eps) yields its exact partial derivative in direction i.
struct Dual {
    Int v;
    Int d;

    Dual() : v(0), d(0) {}
    Dual(int c) : v(c), d(0) {}
    Dual(Int value, Int deriv = 0) : v(std::move(value)), d(std::move(deriv)) {}

    Dual& operator+=(const Dual& o) {
        v += o.v;
        d += o.d;
        return *this;
    }
    Dual& operator-=(const Dual& o) {
        v -= o.v;
        d -= o.d;
        return *this;
    }
    Dual& operator*=(const Dual& o) {
        d = v * o.d + d * o.v;
        v *= o.v;
        return *this;
    }
    friend Dual operator+(Dual a, const Dual& b) { return a += b; }
    friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
    friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
    friend Dual operator-(const Dual& a) { return Dual(-a.v, -a.d); }
    friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v && a.d == b.d; }
};

// Partial derivatives of q' at x, one coordinate at a time.
inline std::vector<Int> quartic_gradient(const Freud<Int>& x) {
    auto c = x.coords();
    std::vector<Int> g;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::vector<Dual> v;
        for (std::size_t j = 0; j < c.size(); ++j) v.emplace_back(c[j], Int(i == j ? 1 : 0));
        g.push_back(quartic_reduced(Freud<Dual>::from_coords(x.kind(), v)).d);
    }
    return g;
}

// Classical Smith normal form of an integer matrix by row and column elimination.
inline std::vector<Int> smith_diagonal(Matrix<Int> m) {
    int rows = m.rows(), cols = m.cols();
    int n = std::min(rows, cols);
    for (int t = 0; t < n; ++t) {
        for (;;) {
            // Smallest nonzero entry of the remaining block becomes the pivot.
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i) {
                for (int j = t; j < cols; ++j) {
                    if (sgn(m(i, j)) != 0 && (pi < 0 || abs(m(i, j)) < abs(m(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi < 0) break;
            for (int j = 0; j < cols; ++j) std::swap(m(t, j), m(pi, j));
            for (int i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pj));
            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                Int q = floor_div(m(i, t), m(t, t));
                for (int j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
                if (sgn(m(i, t)) != 0) clean = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                Int q = floor_div(m(t, j), m(t, t));
                for (int i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
                if (sgn(m(t, j)) != 0) clean = false;
            }
            if (!clean) continue;
            // The pivot must divide the rest of the block.
            int bi = -1;
            for (int i = t + 1; i < rows && bi < 0; ++i) {
                for (int j = t + 1; j < cols; ++j) {
                    if (!divides(m(t, t), m(i, j))) {
                        bi = i;
                        break;
                    }
                }
            }
            if (bi < 0) break;
            for (int j = t; j < cols; ++j) m(t, j) += m(bi, j);
        }
    }
    std::vector<Int> d;
    for (int t = 0; t < n; ++t) d.push_back(abs(m(t, t)));
    return d;
}

}  // namespace fmz::oracle
