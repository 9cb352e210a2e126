#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

#include "hermsq/error.hpp"

namespace hermsq {

template <class T>
bool is_zero_value(const T& x) {
    return x == T{};
}

/// Dense row-major matrix over a ring T (T{} is zero, T(1) is one).
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) throw DimensionMismatch("matrix data size does not match shape");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n, const T& one = T(1)) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    static Matrix scalar(std::size_t n, const T& c) { return identity(n, c); }

    static Matrix unit(std::size_t n, std::size_t i, std::size_t j, const T& c = T(1)) {
        Matrix m(n, n);
        m(i, j) = c;
        return m;
    }

    static Matrix diagonal(const std::vector<T>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const { return data_; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!is_zero_value(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class F>
    auto map(F&& f) const {
        using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    T trace() const {
        if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
        T t{};
        for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] + o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] - o.data_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero_value(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (is_zero_value(bkj)) continue;
                    c(i, j) = c(i, j) + aik * bkj;
                }
            }
        return c;
    }

    /// Left scalar multiplication c * M.
    friend Matrix scale(const T& c, Matrix m) {
        for (auto& x : m.data_) x = c * x;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_symmetric() const { return is_square() && *this == transpose(); }

  private:
    void same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Inverse over a field by Gauss-Jordan elimination.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix<T> a = m, inv = Matrix<T>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero_value(a(piv, col))) ++piv;
        if (piv == n) throw SingularMatrix("matrix is singular");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        T p = T(1) / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = a(col, j) * p;
            inv(col, j) = inv(col, j) * p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero_value(a(r, col))) continue;
            T f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!is_zero_value(a(col, j))) a(r, j) = a(r, j) - f * a(col, j);
                if (!is_zero_value(inv(col, j))) inv(r, j) = inv(r, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Determinant over a field by Gaussian elimination.
template <class T>
T determinant(Matrix<T> a) {
    if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    std::size_t n = a.rows();
    T det = T(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero_value(a(piv, col))) ++piv;
        if (piv == n) return T{};
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det = det * a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (is_zero_value(a(r, col))) continue;
            T f = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(r, j) = a(r, j) - f * a(col, j);
        }
    }
    return det;
}

/// Basis of the right null space {v : m v = 0}, one vector per free column in increasing order.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> a) {
    std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && is_zero_value(a(piv, c))) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
        T p = T(1) / a(r, c);
        for (std::size_t j = 0; j < cols; ++j) a(r, j) = a(r, j) * p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero_value(a(i, c))) continue;
            T f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
        std::vector<T> v(cols);
        v[free] = T(1);
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hermsq
