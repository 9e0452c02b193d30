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

#ifndef MATPOLY_SMITH_HPP
#define MATPOLY_SMITH_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matpoly.hpp"

namespace matpoly {

/// M = U·D·V with U, V unimodular over F[z] and D = diag(d_1, …, d_m),
/// d_{i+1} | d_i, each d_i monic or zero.
template <ExactField T>
struct SmithForm {
    MatPoly<T> U;
    MatPoly<T> D;
    MatPoly<T> V;
    std::vector<Poly<T>> invariants;
};

namespace detail {

// Elimination state; keeps M_in = U·W·V after every elementary operation.
template <ExactField T>
class SmithEliminator {
  public:
    explicit SmithEliminator(const MatPoly<T>& M)
        : m_(M.size()), W_(M), U_(MatPoly<T>::identity(m_)), V_(MatPoly<T>::identity(m_)) {}

    SmithForm<T> run() {
        for (std::size_t t = 0; t < m_; ++t)
            if (!reduce_block(t)) break;
        reverse_order();
        SmithForm<T> out{U_, W_, V_, {}};
        for (std::size_t i = 0; i < m_; ++i) out.invariants.push_back(W_(i, i));
        return out;
    }

  private:
    // row_i -= q·row_j
    void row_sub(std::size_t i, std::size_t j, const Poly<T>& q) {
        for (std::size_t c = 0; c < m_; ++c) W_(i, c) -= q * W_(j, c);
        for (std::size_t r = 0; r < m_; ++r) U_(r, j) += q * U_(r, i);
    }
    // col_j -= q·col_i
    void col_sub(std::size_t j, std::size_t i, const Poly<T>& q) {
        for (std::size_t r = 0; r < m_; ++r) W_(r, j) -= q * W_(r, i);
        for (std::size_t c = 0; c < m_; ++c) V_(i, c) += q * V_(j, c);
    }
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < m_; ++c) std::swap(W_(i, c), W_(j, c));
        for (std::size_t r = 0; r < m_; ++r) std::swap(U_(r, i), U_(r, j));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m_; ++r) std::swap(W_(r, i), W_(r, j));
        for (std::size_t c = 0; c < m_; ++c) std::swap(V_(i, c), V_(j, c));
    }
    void scale_row(std::size_t i, const T c) {
        const T inv = one_of<T>() / c;
        for (std::size_t k = 0; k < m_; ++k) W_(i, k) *= inv;
        for (std::size_t r = 0; r < m_; ++r) U_(r, i) *= c;
    }

    // Smallest-degree nonzero entry of the trailing block, row-major ties.
    std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Degree best_deg = Degree::neg_inf();
        for (std::size_t i = t; i < m_; ++i)
            for (std::size_t j = t; j < m_; ++j) {
                const auto& p = W_(i, j);
                if (p.is_zero()) continue;
                if (!best || p.degree() < best_deg) {
                    best = {i, j};
                    best_deg = p.degree();
                }
            }
        return best;
    }

    // Returns false when the trailing block is entirely zero.
    bool reduce_block(std::size_t t) {
        for (;;) {
            auto pivot = find_pivot(t);
            if (!pivot) return false;
            swap_rows(t, pivot->first);
            swap_cols(t, pivot->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < m_; ++i) {
                if (W_(i, t).is_zero()) continue;
                auto [q, r] = divmod(W_(i, t), W_(t, t));
                row_sub(i, t, q);
                if (!r.is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < m_; ++j) {
                if (W_(t, j).is_zero()) continue;
                auto [q, r] = divmod(W_(t, j), W_(t, t));
                col_sub(j, t, q);
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;

            bool divisible = true;
            for (std::size_t i = t + 1; i < m_ && divisible; ++i)
                for (std::size_t j = t + 1; j < m_; ++j)
                    if (!divides(W_(t, t), W_(i, j))) {
                        // row_t += row_i brings the offending entry into row t.
                        row_sub(t, i, Poly<T>::constant(T(-1)));
                        divisible = false;
                        break;
                    }
            if (!divisible) continue;

            scale_row(t, W_(t, t).leading());
            return true;
        }
    }

    // Elimination leaves d'_1 | d'_2 | … with zeros last; flip to d_{i+1} | d_i.
    void reverse_order() {
        for (std::size_t i = 0; i < m_ / 2; ++i) {
            swap_rows(i, m_ - 1 - i);
            swap_cols(i, m_ - 1 - i);
        }
    }

    std::size_t m_;
    MatPoly<T> W_;
    MatPoly<T> U_;
    MatPoly<T> V_;
};

inline void for_each_combination(std::size_t n, std::size_t r,
                                 const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    for (;;) {
        f(idx);
        std::size_t k = r;
        while (k > 0 && idx[k - 1] == n - r + k - 1) --k;
        if (k == 0) return;
        ++idx[k - 1];
        for (std::size_t j = k; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

/// Smith normal form over F[z] by Euclidean elimination. Pivots are the
/// smallest-degree entries of the trailing block; the diagonal is reversed at
/// the end so that d_{i+1} divides d_i, which puts zero invariants first.
template <ExactField T>
SmithForm<T> smith_normal_form(const MatPoly<T>& M) {
    return detail::SmithEliminator<T>(M).run();
}

template <ExactField T>
std::vector<Poly<T>> invariant_polynomials(const MatPoly<T>& M) {
    return smith_normal_form(M).invariants;
}

/// Monic gcd of all r×r minors, computed directly; zero if they all vanish.
/// Independent of the elimination above and used to check it.
template <ExactField T>
Poly<T> minor_gcd_oracle(const MatPoly<T>& M, std::size_t r) {
    const std::size_t m = M.size();
    if (r < 1 || r > m) fail(Errc::index_out_of_range, "minor size out of range");
    Poly<T> g;
    detail::for_each_combination(m, r, [&](const std::vector<std::size_t>& rows) {
        detail::for_each_combination(m, r, [&](const std::vector<std::size_t>& cols) {
            Poly<T> minor = M.minor(rows, cols);
            if (minor.is_zero()) return;
            g = g.is_zero() ? monic(minor) : gcd(g, minor);
        });
    });
    return g;
}

} // namespace matpoly

#endif // MATPOLY_SMITH_HPP
