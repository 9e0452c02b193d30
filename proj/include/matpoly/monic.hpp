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

#ifndef MATPOLY_MONIC_HPP
#define MATPOLY_MONIC_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "matpoly.hpp"

namespace matpoly {

/// A point of M_n: I + P_1 z^{-1} + … + P_n z^{-n}. Only P_1…P_n are stored;
/// P_0 is the identity and coefficients past n read as zero.
template <Ring T>
class MonicZinv {
  public:
    MonicZinv() = default;
    MonicZinv(std::size_t m, std::vector<Matrix<T>> coeffs) : m_(m), c_(std::move(coeffs)) {
        for (const auto& C : c_)
            if (C.rows() != m_ || C.cols() != m_)
                fail(Errc::dimension_mismatch, "coefficient matrix shape");
    }

    static MonicZinv identity(std::size_t m, std::size_t n) {
        return MonicZinv(m, std::vector<Matrix<T>>(n, Matrix<T>(m)));
    }

    std::size_t size() const noexcept { return m_; }
    /// Number of stored coefficients, i.e. the n of M_n this point lives in.
    std::size_t order() const noexcept { return c_.size(); }

    /// P_k with P_0 = I and P_k = 0 for k > n.
    Matrix<T> coeff(std::size_t k) const {
        if (k == 0) return Matrix<T>::identity(m_);
        if (k > c_.size()) return Matrix<T>(m_);
        return c_[k - 1];
    }
    const std::vector<Matrix<T>>& coeffs() const noexcept { return c_; }
    std::vector<Matrix<T>>& coeffs() noexcept { return c_; }

    /// Embeds into M_{n'} for n' ≥ n by zero padding.
    MonicZinv padded(std::size_t n) const {
        MonicZinv out = *this;
        while (out.c_.size() < n) out.c_.emplace_back(m_);
        return out;
    }

    friend bool operator==(const MonicZinv& a, const MonicZinv& b) {
        if (a.m_ != b.m_) return false;
        const std::size_t n = std::max(a.order(), b.order());
        for (std::size_t k = 1; k <= n; ++k)
            if (!(a.coeff(k) == b.coeff(k))) return false;
        return true;
    }

  private:
    std::size_t m_ = 0;
    std::vector<Matrix<T>> c_;
};

/// P(z) ↦ z^n P(z), taking M_n to the monic degree-n polynomials in z.
template <Ring T>
MatPoly<T> zinv_to_z(const MonicZinv<T>& P, std::size_t n) {
    const std::size_t m = P.size();
    std::size_t last = P.order();
    while (last > 0 && P.coeff(last).is_zero()) --last;
    if (last > n) fail(Errc::degree_exceeded, "z^{-1} degree exceeds n");
    std::vector<Matrix<T>> asc(n + 1, Matrix<T>(m));
    for (std::size_t k = 0; k <= n; ++k) asc[n - k] = P.coeff(k);
    return MatPoly<T>::from_coefficients(asc);
}

/// Inverse of zinv_to_z for a monic M of degree n.
template <Ring T>
MonicZinv<T> z_to_zinv(const MatPoly<T>& M, std::size_t n) {
    if (!is_monic_of_degree(M, n)) fail(Errc::not_monic, "expected monic polynomial of degree n");
    const auto asc = M.coefficient_matrices();
    std::vector<Matrix<T>> c;
    for (std::size_t k = 1; k <= n; ++k) c.push_back(asc[n - k]);
    return MonicZinv<T>(M.size(), std::move(c));
}

} // namespace matpoly

#endif // MATPOLY_MONIC_HPP
