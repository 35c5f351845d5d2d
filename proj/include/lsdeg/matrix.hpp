#pragma once

#include "lsdeg/errors.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace lsdeg {

// Dense row-major matrix over an exact field S.
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    S& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const S& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw DimensionMismatch("matrix product");
        Matrix z(x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i)
            for (size_t k = 0; k < x.cols_; ++k) {
                const S& xik = x(i, k);
                if (is_zero(xik)) continue;
                for (size_t j = 0; j < y.cols_; ++j)
                    if (!is_zero(y(k, j))) z(i, j) += xik * y(k, j);
            }
        return z;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix-vector product");
        std::vector<S> out(rows_, S(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!is_zero(v[j]) && !is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    S trace() const {
        S s(0);
        for (size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
        return s;
    }

    bool is_zero_matrix() const {
        for (const auto& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }

    void append_row(const std::vector<S>& row) {
        if (rows_ == 0 && cols_ == 0) cols_ = row.size();
        if (row.size() != cols_) throw DimensionMismatch("row length");
        a_.insert(a_.end(), row.begin(), row.end());
        ++rows_;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<S> a_;
};

// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<size_t> rref(Matrix<S>& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        S inv = S(1) / m(r, c);
        for (size_t j = c; j < m.cols(); ++j)
            if (!is_zero(m(r, j))) m(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            S f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class S>
size_t rank(Matrix<S> m) {
    return rref(m).size();
}

// Basis of {v : m v = 0}.
template <class S>
std::vector<std::vector<S>> nullspace(Matrix<S> m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<S>> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> v(m.cols(), S(0));
        v[f] = S(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    size_t n = m.rows();
    Matrix<S> aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = S(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix<S> inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

template <class S>
S determinant(Matrix<S> m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    size_t n = m.rows();
    S det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return S(0);
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        S inv = S(1) / m(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            S f = m(i, c) * inv;
            for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

}  // namespace lsdeg
