#pragma once

#include "fmz/error.hpp"
#include "fmz/scalar.hpp"

#include <utility>
#include <vector>

namespace fmz {

// Small dense matrix with exact entries.
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, S(0)) {}

    Matrix(std::initializer_list<std::initializer_list<S>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_) throw DomainError("ragged matrix literal");
            for (const auto& v : row) a_.push_back(v);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        }
        return t;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw DomainError("matrix shape mismatch");
        Matrix r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i) {
            for (int k = 0; k < x.cols_; ++k) {
                if (is_zero(x(i, k))) continue;
                for (int j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        }
        return r;
    }

    friend Matrix operator+(Matrix x, const Matrix& y) {
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }

    friend Matrix operator*(const S& s, Matrix x) {
        for (auto& v : x.a_) v *= s;
        return x;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw DomainError("vector length mismatch");
        std::vector<S> r(rows_, S(0));
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        }
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<S> a_;
};

// Fraction-free elimination; every division is exact, so it works over Int too.
template <class S>
S determinant(Matrix<S> m) {
    int n = m.rows();
    if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
    if (n == 0) return S(1);
    S sign(1);
    S prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (is_zero(m(k, k))) {
            int p = k + 1;
            while (p < n && is_zero(m(p, k))) ++p;
            if (p == n) return S(0);
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                S t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = t / prev;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

template <class S>
Matrix<S> adjugate3(const Matrix<S>& m) {
    Matrix<S> r(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            int i1 = (j + 1) % 3, i2 = (j + 2) % 3;
            int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
            r(i, j) = m(i1, j1) * m(i2, j2) - m(i1, j2) * m(i2, j1);
        }
    }
    return r;
}

// Inverse of a 3x3 matrix; over the integers the determinant must be +-1.
template <class S>
Matrix<S> inverse3(const Matrix<S>& m) {
    S d = determinant(m);
    if (is_zero(d)) throw PreconditionError("singular matrix");
    Matrix<S> adj = adjugate3(m);
    if constexpr (ScalarTraits<S>::is_field) {
        return (S(1) / d) * adj;
    } else {
        if (!(d == S(1) || d == S(-1))) throw PreconditionError("matrix is not unimodular");
        return d * adj;
    }
}

}  // namespace fmz
