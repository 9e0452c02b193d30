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

#ifndef MATPOLY_MATPOLY_HPP
#define MATPOLY_MATPOLY_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace matpoly {

/// Square matrix with polynomial entries, stored entry-wise.
template <Ring T>
class MatPoly {
  public:
    MatPoly() = default;
    explicit MatPoly(std::size_t m) : m_(m), e_(m * m) {
        if (m == 0) fail(Errc::invalid_argument, "matrix polynomial of size 0");
    }

    static MatPoly identity(std::size_t m) { return scalar(m, Poly<T>::one()); }

    /// p(z)·I
    static MatPoly scalar(std::size_t m, const Poly<T>& p) {
        MatPoly M(m);
        for (std::size_t i = 0; i < m; ++i) M(i, i) = p;
        return M;
    }

    static MatPoly diagonal(const std::vector<Poly<T>>& d) {
        MatPoly M(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) M(i, i) = d[i];
        return M;
    }

    /// Σ_k C_k z^k from ascending coefficient matrices.
    static MatPoly from_coefficients(std::span<const Matrix<T>> coeffs) {
        if (coeffs.empty()) fail(Errc::invalid_argument, "no coefficient matrices");
        const std::size_t m = coeffs.front().rows();
        MatPoly M(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                std::vector<T> c(coeffs.size(), zero_of<T>());
                for (std::size_t k = 0; k < coeffs.size(); ++k) {
                    if (coeffs[k].rows() != m || coeffs[k].cols() != m)
                        fail(Errc::dimension_mismatch, "coefficient matrix shape");
                    c[k] = coeffs[k](i, j);
                }
                M(i, j) = Poly<T>(std::move(c));
            }
        return M;
    }

    /// Constant matrix polynomial.
    static MatPoly from_matrix(const Matrix<T>& A) {
        return from_coefficients(std::span<const Matrix<T>>(&A, 1));
    }

    std::size_t size() const noexcept { return m_; }

    Poly<T>& operator()(std::size_t i, std::size_t j) { return e_[i * m_ + j]; }
    const Poly<T>& operator()(std::size_t i, std::size_t j) const { return e_[i * m_ + j]; }

    /// Maximum entry degree (−∞ for the zero matrix).
    Degree degree() const {
        Degree d = Degree::neg_inf();
        for (const auto& p : e_) d = std::max(d, p.degree());
        return d;
    }

    bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }

    /// Ascending coefficient matrices C_0 … C_deg; a single zero matrix for 0.
    std::vector<Matrix<T>> coefficient_matrices() const {
        const Degree d = degree();
        const std::size_t count = d.is_neg_inf() ? 1 : static_cast<std::size_t>(d.value()) + 1;
        std::vector<Matrix<T>> out(count, Matrix<T>(m_));
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < m_; ++j) {
                const auto& p = (*this)(i, j);
                for (std::size_t k = 0; k < p.size(); ++k) out[k](i, j) = p.coeff(k);
            }
        return out;
    }

    Matrix<T> eval(const T& z0) const {
        Matrix<T> out(m_);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < m_; ++j) out(i, j) = (*this)(i, j)(z0);
        return out;
    }

    /// Minor on the given (sorted, distinct) row and column index sets.
    Poly<T> minor(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

    MatPoly transpose() const {
        MatPoly t(m_);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < m_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    MatPoly& operator+=(const MatPoly& o) {
        check_same(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    MatPoly& operator-=(const MatPoly& o) {
        check_same(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    friend MatPoly operator+(MatPoly a, const MatPoly& b) { return a += b; }
    friend MatPoly operator-(MatPoly a, const MatPoly& b) { return a -= b; }

    friend MatPoly operator*(const MatPoly& a, const MatPoly& b) {
        a.check_same(b);
        const std::size_t m = a.m_;
        MatPoly c(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) {
                const auto& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < m; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend MatPoly operator*(const Poly<T>& p, MatPoly a) {
        for (auto& x : a.e_) x = p * x;
        return a;
    }

    friend bool operator==(const MatPoly& a, const MatPoly& b) {
        return a.m_ == b.m_ && a.e_ == b.e_;
    }

  private:
    void check_same(const MatPoly& o) const {
        if (m_ != o.m_) fail(Errc::dimension_mismatch, "matrix polynomial size mismatch");
    }

    std::size_t m_ = 0;
    std::vector<Poly<T>> e_;
};

namespace detail {

// Laplace expansion along the first row of the submatrix picked by rows/cols.
template <Ring T>
Poly<T> cofactor_det(const MatPoly<T>& M, std::vector<std::size_t>& rows,
                     std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 0) return Poly<T>::one();
    if (k == 1) return M(rows[0], cols[0]);
    if (k == 2)
        return M(rows[0], cols[0]) * M(rows[1], cols[1]) -
               M(rows[0], cols[1]) * M(rows[1], cols[0]);
    const std::size_t r0 = rows.front();
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    Poly<T> acc;
    for (std::size_t c = 0; c < k; ++c) {
        const Poly<T>& a = M(r0, cols[c]);
        if (a.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(k - 1);
        for (std::size_t j = 0; j < k; ++j)
            if (j != c) sub_cols.push_back(cols[j]);
        Poly<T> term = a * cofactor_det(M, sub_rows, sub_cols);
        if (c % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

} // namespace detail

template <Ring T>
Poly<T> MatPoly<T>::minor(std::span<const std::size_t> rows,
                          std::span<const std::size_t> cols) const {
    if (rows.size() != cols.size()) fail(Errc::dimension_mismatch, "non-square minor");
    for (auto r : rows)
        if (r >= m_) fail(Errc::index_out_of_range, "minor row index");
    for (auto c : cols)
        if (c >= m_) fail(Errc::index_out_of_range, "minor column index");
    std::vector<std::size_t> r(rows.begin(), rows.end()), c(cols.begin(), cols.end());
    return detail::cofactor_det(*this, r, c);
}

/// Determinant by cofactor expansion; valid over any commutative ring.
template <Ring T>
Poly<T> det_cofactor(const MatPoly<T>& M) {
    std::vector<std::size_t> idx(M.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    auto cols = idx;
    return detail::cofactor_det(M, idx, cols);
}

/// Fraction-free Bareiss elimination over F[z]; every division is exact.
template <ExactField T>
Poly<T> det_bareiss(MatPoly<T> M) {
    const std::size_t m = M.size();
    Poly<T> prev = Poly<T>::one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (M(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < m && M(p, k).is_zero()) ++p;
            if (p == m) return {};
            for (std::size_t j = 0; j < m; ++j) std::swap(M(k, j), M(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < m; ++i)
            for (std::size_t j = k + 1; j < m; ++j)
                M(i, j) = exact_quotient(M(k, k) * M(i, j) - M(i, k) * M(k, j), prev);
        prev = M(k, k);
    }
    return negate ? -M(m - 1, m - 1) : M(m - 1, m - 1);
}

namespace detail {

// Numeric determinant for m > 4: sample det at roots of unity on a circle
// and recover the coefficients with an inverse DFT.
inline Poly<Complex> det_interpolate(const MatPoly<Complex>& M) {
    const Degree dd = M.degree();
    if (dd.is_neg_inf()) return {};
    const std::size_t m = M.size();
    const std::size_t N = m * static_cast<std::size_t>(dd.value()) + 1;
    std::vector<Complex> samples(N);
    for (std::size_t k = 0; k < N; ++k) {
        const Complex w = std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(N));
        samples[k] = determinant(M.eval(w));
    }
    std::vector<Complex> c(N);
    for (std::size_t j = 0; j < N; ++j) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < N; ++k)
            acc += samples[k] * std::polar(1.0, -2.0 * std::numbers::pi * double(j * k) / double(N));
        c[j] = acc / double(N);
    }
    return Poly<Complex>(std::move(c));
}

} // namespace detail

/// Determinant polynomial. Cofactor expansion for m ≤ 4; above that Bareiss on
/// exact fields and interpolation on complex doubles.
template <Ring T>
Poly<T> det(const MatPoly<T>& M) {
    if (M.size() <= 4) return det_cofactor(M);
    if constexpr (ExactField<T>)
        return det_bareiss(M);
    else if constexpr (std::is_same_v<T, Complex>)
        return detail::det_interpolate(M);
    else
        return det_cofactor(M);
}

/// True when M = z^n·I + lower-order terms.
template <Ring T>
bool is_monic_of_degree(const MatPoly<T>& M, std::size_t n) {
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M.size(); ++j) {
            const auto& p = M(i, j);
            if (i == j) {
                if (p.degree() != Degree(static_cast<std::int64_t>(n)) || !(p.leading() == one_of<T>()))
                    return false;
            } else if (p.degree() >= Degree(static_cast<std::int64_t>(n))) {
                return false;
            }
        }
    return true;
}

/// Degree n of a monic P ∈ P_n, or a not-monic error.
template <Ring T>
std::size_t monic_degree(const MatPoly<T>& M) {
    const Degree d = M.degree();
    if (d.is_neg_inf() || !is_monic_of_degree(M, static_cast<std::size_t>(d.value())))
        fail(Errc::not_monic, "matrix polynomial is not monic");
    return static_cast<std::size_t>(d.value());
}

} // namespace matpoly

#endif // MATPOLY_MATPOLY_HPP
