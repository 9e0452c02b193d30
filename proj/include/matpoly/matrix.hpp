/*
   Copyright 2026 The matpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MATPOLY_MATRIX_HPP
#define MATPOLY_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace matpoly {

/// Dense row-major matrix over a coefficient ring. Used for the constant
/// coefficient matrices P_k of a matrix polynomial and for evaluations.
template <Ring T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, zero_of<T>()) {}
    explicit Matrix(std::size_t n) : Matrix(n, n) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            fail(Errc::dimension_mismatch, "matrix data size mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix I(n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = one_of<T>();
        return I;
    }

    /// Matrix unit E_ij.
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
        Matrix E(n);
        E(i, j) = one_of<T>();
        return E;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!matpoly::is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const {
        T s = zero_of<T>();
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
            s = s + (*this)(i, i);
        return s;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] = data_[k] + o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] = data_[k] - o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& c) {
        for (auto& x : data_) x = x * c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) x = zero_of<T>() - x;
        return a;
    }
    friend Matrix operator*(Matrix a, const T& c) { return a *= c; }
    friend Matrix operator*(const T& c, Matrix a) {
        for (auto& x : a.data_) x = c * x;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            fail(Errc::dimension_mismatch, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (matpoly::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) = c(i, j) + aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    const std::vector<T>& data() const noexcept { return data_; }

  private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            fail(Errc::dimension_mismatch, "matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Determinant of a small square matrix over a field by Gaussian elimination.
template <Field T>
T determinant(Matrix<T> a) {
    if (!a.square()) fail(Errc::dimension_mismatch, "determinant of non-square");
    const std::size_t n = a.rows();
    T det = one_of<T>();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) return zero_of<T>();
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = zero_of<T>() - det;
        }
        det = det * a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(a(r, c))) continue;
            T f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(r, j) = a(r, j) - f * a(c, j);
        }
    }
    return det;
}

/// Inverse by Gauss-Jordan elimination; throws on singular input.
/// Row rank by Gaussian elimination; exact on exact fields.
template <ExactField T>
std::size_t rank(Matrix<T> a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && is_zero(a(p, c))) ++p;
        if (p == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (is_zero(a(i, c))) continue;
            const T f = a(i, c) / a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
        }
        ++r;
    }
    return r;
}

template <Field T>
Matrix<T> inverse(Matrix<T> a) {
    if (!a.square()) fail(Errc::dimension_mismatch, "inverse of non-square");
    const std::size_t n = a.rows();
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) fail(Errc::invalid_argument, "singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(p, j), a(c, j));
            std::swap(inv(p, j), inv(c, j));
        }
        const T piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) = a(c, j) / piv;
            inv(c, j) = inv(c, j) / piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || is_zero(a(r, c))) continue;
            const T f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) = a(r, j) - f * a(c, j);
                inv(r, j) = inv(r, j) - f * inv(c, j);
            }
        }
    }
    return inv;
}

} // namespace matpoly

#endif // MATPOLY_MATRIX_HPP
