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

#ifndef MATPOLY_POISSON_HPP
#define MATPOLY_POISSON_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "coord_polynomial.hpp"
#include "monic.hpp"

namespace matpoly {

/// The coordinate function t_ij^{(r)} on M_n: entry (i, j) of P_r.
/// i and j are 0-based; r is the z^{-1} order.
struct CoordIndex {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t r = 1;
    friend bool operator==(const CoordIndex&, const CoordIndex&) = default;
};

/// Element of T⁻_n, the tangent space of M_n: coefficients of z^{-1} … z^{-n}.
template <Ring T>
struct TangentVector {
    std::vector<Matrix<T>> coeffs;

    /// ⟨v, dt_ij^{(s)}⟩
    T pair(const CoordIndex& b) const {
        if (b.r == 0 || b.r > coeffs.size()) return zero_of<T>();
        return coeffs[b.r - 1](b.i, b.j);
    }
    friend bool operator==(const TangentVector&, const TangentVector&) = default;
};

/// Element of T⁺: Σ_r A_{-r} z^r, stored with coeffs[r] = A_{-r}.
template <Ring T>
struct PlusPolyMat {
    std::vector<Matrix<T>> coeffs;
    friend bool operator==(const PlusPolyMat&, const PlusPolyMat&) = default;
};

/// Finite Laurent matrix polynomial Σ_k C_k z^k, lowest power `low`.
template <Ring T>
class LaurentMatPoly {
  public:
    LaurentMatPoly(std::size_t m, long low, std::vector<Matrix<T>> c)
        : m_(m), low_(low), c_(std::move(c)) {}

    static LaurentMatPoly from(const MonicZinv<T>& P) {
        const std::size_t n = P.order();
        std::vector<Matrix<T>> c;
        for (std::size_t k = n + 1; k-- > 0;) c.push_back(P.coeff(k));
        return LaurentMatPoly(P.size(), -static_cast<long>(n), std::move(c));
    }
    static LaurentMatPoly from(std::size_t m, const PlusPolyMat<T>& A) {
        if (A.coeffs.empty()) return LaurentMatPoly(m, 0, {Matrix<T>(m)});
        return LaurentMatPoly(m, 0, A.coeffs);
    }

    long low() const noexcept { return low_; }
    long high() const noexcept { return low_ + static_cast<long>(c_.size()) - 1; }

    Matrix<T> coeff(long k) const {
        if (k < low_ || k > high()) return Matrix<T>(m_);
        return c_[static_cast<std::size_t>(k - low_)];
    }

    /// Projection onto non-negative powers of z.
    LaurentMatPoly plus() const {
        std::vector<Matrix<T>> c;
        for (long k = 0; k <= std::max(high(), 0L); ++k) c.push_back(coeff(k));
        return LaurentMatPoly(m_, 0, std::move(c));
    }

    friend LaurentMatPoly operator*(const LaurentMatPoly& a, const LaurentMatPoly& b) {
        std::vector<Matrix<T>> c(a.c_.size() + b.c_.size() - 1, Matrix<T>(a.m_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return LaurentMatPoly(a.m_, a.low_ + b.low_, std::move(c));
    }

    friend LaurentMatPoly operator-(const LaurentMatPoly& a, const LaurentMatPoly& b) {
        const long lo = std::min(a.low_, b.low_), hi = std::max(a.high(), b.high());
        std::vector<Matrix<T>> c;
        for (long k = lo; k <= hi; ++k) c.push_back(a.coeff(k) - b.coeff(k));
        return LaurentMatPoly(a.m_, lo, std::move(c));
    }

    /// The element of T⁻_n this represents, or nullopt if it has any
    /// non-zero coefficient outside z^{-1} … z^{-n}.
    std::optional<TangentVector<T>> to_tangent(std::size_t n) const {
        for (long k = low_; k <= high(); ++k) {
            const bool inside = k <= -1 && k >= -static_cast<long>(n);
            if (!inside && !coeff(k).is_zero()) return std::nullopt;
        }
        TangentVector<T> v;
        for (std::size_t s = 1; s <= n; ++s) v.coeffs.push_back(coeff(-static_cast<long>(s)));
        return v;
    }

  private:
    std::size_t m_;
    long low_;
    std::vector<Matrix<T>> c_;
};

namespace detail {

template <Ring T>
void check_index(const MonicZinv<T>& P, const CoordIndex& a) {
    if (a.i >= P.size() || a.j >= P.size() || a.r == 0 || a.r > P.order())
        fail(Errc::index_out_of_range, "coordinate index out of range");
}

} // namespace detail

/// {t_ij^{(r)}, t_kl^{(s)}}(P) =
///   Σ_{q=max(r,s)}^{r+s-1} t_kj^{(r+s-q-1)} t_il^{(q)} − t_kj^{(q)} t_il^{(r+s-q-1)}
/// with t^{(0)} = I and t^{(q)} = 0 past the order of P.
template <Ring T>
T bracket_tt(const MonicZinv<T>& P, const CoordIndex& a, const CoordIndex& b) {
    detail::check_index(P, a);
    detail::check_index(P, b);
    const std::size_t r = a.r, s = b.r;
    T acc = zero_of<T>();
    for (std::size_t q = std::max(r, s); q <= r + s - 1; ++q) {
        const std::size_t p = r + s - q - 1;
        const Matrix<T> Pp = P.coeff(p), Pq = P.coeff(q);
        acc = acc + Pp(b.i, a.j) * Pq(a.i, b.j) - Pq(b.i, a.j) * Pp(a.i, b.j);
    }
    return acc;
}

/// Variable numbering for t_ij^{(q)}, q = 0 … n.
inline std::uint32_t t_variable(std::size_t m, std::size_t i, std::size_t j, std::size_t q) {
    return static_cast<std::uint32_t>((q * m + i) * m + j);
}

/// Values of every t_ij^{(q)}, q = 0 … n, at P (t^{(0)} = I).
template <Ring T>
std::vector<T> coordinate_values(const MonicZinv<T>& P) {
    const std::size_t m = P.size(), n = P.order();
    std::vector<T> v((n + 1) * m * m, zero_of<T>());
    for (std::size_t q = 0; q <= n; ++q) {
        const Matrix<T> C = P.coeff(q);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) v[t_variable(m, i, j, q)] = C(i, j);
    }
    return v;
}

inline CoordPolynomial coordinate_function(std::size_t m, const CoordIndex& a) {
    return CoordPolynomial::variable(t_variable(m, a.i, a.j, a.r));
}

/// The bracket {t_a, t_b} on M_n as a quadratic polynomial in the t's, with
/// t^{(0)} kept symbolic and t^{(q)}, q > n, dropped.
inline CoordPolynomial bracket_polynomial(std::size_t m, std::size_t n, const CoordIndex& a,
                                          const CoordIndex& b) {
    const std::size_t r = a.r, s = b.r;
    CoordPolynomial acc;
    for (std::size_t q = std::max(r, s); q <= r + s - 1 && q <= n; ++q) {
        const std::size_t p = r + s - q - 1;
        const auto t = [&](std::size_t i, std::size_t j, std::size_t ord) {
            return CoordPolynomial::variable(t_variable(m, i, j, ord));
        };
        acc += t(b.i, a.j, p) * t(a.i, b.j, q);
        acc -= t(b.i, a.j, q) * t(a.i, b.j, p);
    }
    return acc;
}

/// Substitutes t^{(0)} = I, leaving a polynomial in the coordinates of M_n.
inline CoordPolynomial specialize_monic(const CoordPolynomial& f, std::size_t m, std::size_t n) {
    std::vector<CoordPolynomial> subs((n + 1) * m * m);
    for (std::size_t q = 0; q <= n; ++q)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const auto v = t_variable(m, i, j, q);
                subs[v] = q == 0 ? CoordPolynomial(i == j ? 1L : 0L) : CoordPolynomial::variable(v);
            }
    return f.substitute(subs);
}

/// {f, g}(P) for polynomial functions f, g of the coordinates of M_n,
/// expanded by the chain rule through bracket_tt.
template <Ring T>
T bracket_functions(const MonicZinv<T>& P, const CoordPolynomial& f, const CoordPolynomial& g) {
    const std::size_t m = P.size();
    const auto values = coordinate_values(P);
    const std::span<const T> vals(values);
    const auto index_of = [&](std::uint32_t v) {
        const std::size_t q = v / (m * m), rest = v % (m * m);
        if (q == 0) fail(Errc::invalid_argument, "function depends on t^{(0)}; specialize first");
        if (q > P.order()) fail(Errc::index_out_of_range, "function depends on t^{(q)} past n");
        return CoordIndex{rest / m, rest % m, q};
    };
    T acc = zero_of<T>();
    const auto fv = f.support(), gv = g.support();
    std::vector<T> dg;
    for (auto v : gv) dg.push_back(g.derivative(v).eval(vals));
    for (auto u : fv) {
        const T df = f.derivative(u).eval(vals);
        if (is_zero(df)) continue;
        const CoordIndex a = index_of(u);
        for (std::size_t k = 0; k < gv.size(); ++k) {
            if (is_zero(dg[k])) continue;
            acc = acc + df * dg[k] * bracket_tt(P, a, index_of(gv[k]));
        }
    }
    return acc;
}

/// Hamiltonian vector field ξ_ij^{(r)} of t_ij^{(r)} at P:
///   coefficient of z^{-s} = Σ_q P_{s+r-1-q} E_ji P_q − P_q E_ji P_{s+r-1-q},
///   q from max(s, r) to min(n, r+s-1).
template <Ring T>
TangentVector<T> hamiltonian_field(const MonicZinv<T>& P, const CoordIndex& a) {
    detail::check_index(P, a);
    const std::size_t m = P.size(), n = P.order(), r = a.r;
    const Matrix<T> E = Matrix<T>::unit(m, a.j, a.i);
    TangentVector<T> v;
    for (std::size_t s = 1; s <= n; ++s) {
        Matrix<T> V(m);
        for (std::size_t q = std::max(s, r); q <= std::min(n, r + s - 1); ++q) {
            const std::size_t p = s + r - 1 - q;
            V += P.coeff(p) * E * P.coeff(q) - P.coeff(q) * E * P.coeff(p);
        }
        v.coeffs.push_back(std::move(V));
    }
    return v;
}

/// ξ_A = Σ_r Σ_ij (A_{-r})_{ji} ξ_ij^{(r+1)}, evaluated in closed form:
///   coefficient of z^{-s} = Σ_r Σ_q P_{s+r-q} A_{-r} P_q − P_q A_{-r} P_{s+r-q}.
/// Terms with r ≥ n vanish identically.
template <Ring T>
TangentVector<T> hamiltonian_field(const MonicZinv<T>& P, const PlusPolyMat<T>& A) {
    const std::size_t m = P.size(), n = P.order();
    TangentVector<T> v;
    for (std::size_t s = 1; s <= n; ++s) {
        Matrix<T> V(m);
        for (std::size_t r = 0; r < std::min(n, A.coeffs.size()); ++r) {
            const Matrix<T>& Ar = A.coeffs[r];
            for (std::size_t q = std::max(s, r + 1); q <= std::min(n, r + s); ++q) {
                const std::size_t p = s + r - q;
                V += P.coeff(p) * Ar * P.coeff(q) - P.coeff(q) * Ar * P.coeff(p);
            }
        }
        v.coeffs.push_back(std::move(V));
    }
    return v;
}

/// Dressing field X_A(P) = (PA)₊P − P(AP)₊. Always lies in T⁻_n.
template <Ring T>
TangentVector<T> dressing_field(const MonicZinv<T>& P, const PlusPolyMat<T>& A) {
    const std::size_t m = P.size(), n = P.order();
    const auto LP = LaurentMatPoly<T>::from(P);
    const auto LA = LaurentMatPoly<T>::from(m, A);
    const auto X = (LP * LA).plus() * LP - LP * (LA * LP).plus();
    TangentVector<T> v;
    for (std::size_t s = 1; s <= n; ++s) v.coeffs.push_back(X.coeff(-static_cast<long>(s)));
    return v;
}

template <Ring T>
struct CosetSolution {
    PlusPolyMat<T> A;
    PlusPolyMat<T> C;
};

/// Given B ∈ T⁺_{n-1}, the unique A ∈ T⁺_{n-1} with (PA)₊ = B, solved from the
/// top power of z down, and C = (AP)₊. Then BP − PC = X_A(P).
template <Ring T>
CosetSolution<T> coset_solve(const MonicZinv<T>& P, const PlusPolyMat<T>& B) {
    const std::size_t m = P.size(), n = P.order();
    if (B.coeffs.size() > n) fail(Errc::degree_exceeded, "B must have degree at most n-1");
    const auto Bk = [&](std::size_t k) { return k < B.coeffs.size() ? B.coeffs[k] : Matrix<T>(m); };
    std::vector<Matrix<T>> A(n, Matrix<T>(m));
    for (std::size_t k = n; k-- > 0;) {
        Matrix<T> rhs = Bk(k);
        for (std::size_t i = 1; k + i < n; ++i) rhs -= P.coeff(i) * A[k + i];
        A[k] = std::move(rhs);
    }
    std::vector<Matrix<T>> C(n, Matrix<T>(m));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; k + i < n; ++i) C[k] += A[k + i] * P.coeff(i);
    return {PlusPolyMat<T>{std::move(A)}, PlusPolyMat<T>{std::move(C)}};
}

/// B·P − P·C as a Laurent matrix polynomial.
template <Ring T>
LaurentMatPoly<T> coset_difference(const MonicZinv<T>& P, const PlusPolyMat<T>& B,
                                   const PlusPolyMat<T>& C) {
    const std::size_t m = P.size();
    const auto LP = LaurentMatPoly<T>::from(P);
    return LaurentMatPoly<T>::from(m, B) * LP - LP * LaurentMatPoly<T>::from(m, C);
}

/// Coefficient of z^{mn-s} in det(z^n I + Σ_k T^{(k)} z^{n-k}) as a polynomial
/// in the coordinates, s = 1 … mn.
inline std::vector<CoordPolynomial> det_coefficient_functions(std::size_t m, std::size_t n) {
    std::vector<Matrix<CoordPolynomial>> asc(n + 1, Matrix<CoordPolynomial>(m));
    asc[n] = Matrix<CoordPolynomial>::identity(m);
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                asc[n - k](i, j) = CoordPolynomial::variable(t_variable(m, i, j, k));
    const auto d = det(MatPoly<CoordPolynomial>::from_coefficients(asc));
    std::vector<CoordPolynomial> out;
    for (std::size_t s = 1; s <= m * n; ++s) out.push_back(d.coeff(m * n - s));
    return out;
}

/// {c, t_b}(P) for a precomputed Casimir candidate c.
template <Ring T>
T casimir_check(const MonicZinv<T>& P, const CoordPolynomial& c, const CoordIndex& b) {
    return bracket_functions(P, c, coordinate_function(P.size(), b));
}

/// {c_s, t_b}(P) where c_s is the s-th coefficient of det P; vanishes on M_n.
template <Ring T>
T casimir_check(const MonicZinv<T>& P, std::size_t s, const CoordIndex& b) {
    const std::size_t m = P.size(), n = P.order();
    if (s < 1 || s > m * n) fail(Errc::index_out_of_range, "det coefficient index out of range");
    return casimir_check(P, det_coefficient_functions(m, n)[s - 1], b);
}

/// Kirillov–Kostant–Souriau bracket on gl_m^*:
///   {x_ij, x_kl}(X) = δ_il x_kj − δ_kj x_il.
template <Ring T>
T kks_bracket(const Matrix<T>& X, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    T acc = zero_of<T>();
    if (i == l) acc = acc + X(k, j);
    if (k == j) acc = acc - X(i, l);
    return acc;
}

/// Variable numbering for entry (i, j) of the k-th factor A_{k+1}.
inline std::uint32_t x_variable(std::size_t m, std::size_t k, std::size_t i, std::size_t j) {
    return static_cast<std::uint32_t>((k * m + i) * m + j);
}

/// Pullbacks t_ij^{(q)} ∘ F under F(A_1, …, A_n) = (z − A_1)⋯(z − A_n),
/// indexed like t_variable; each is a polynomial in the x variables.
inline std::vector<CoordPolynomial> product_pullbacks(std::size_t m, std::size_t n) {
    MatPoly<CoordPolynomial> F = MatPoly<CoordPolynomial>::identity(m);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Matrix<CoordPolynomial>> lin(2, Matrix<CoordPolynomial>(m));
        lin[1] = Matrix<CoordPolynomial>::identity(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                lin[0](i, j) = CoordPolynomial(-1L) * CoordPolynomial::variable(x_variable(m, k, i, j));
        F = F * MatPoly<CoordPolynomial>::from_coefficients(lin);
    }
    std::vector<CoordPolynomial> out((n + 1) * m * m);
    for (std::size_t q = 0; q <= n; ++q)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) out[t_variable(m, i, j, q)] = F(i, j).coeff(n - q);
    return out;
}

/// Bracket of two functions of (A_1, …, A_n) under the product KKS structure.
template <Ring T>
T kks_product_bracket(std::span<const Matrix<T>> points, const CoordPolynomial& f,
                      const CoordPolynomial& g) {
    const std::size_t n = points.size(), m = points.front().rows();
    std::vector<T> values(n * m * m, zero_of<T>());
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) values[x_variable(m, k, i, j)] = points[k](i, j);
    const std::span<const T> vals(values);
    T acc = zero_of<T>();
    const auto fv = f.support(), gv = g.support();
    std::vector<T> dg;
    for (auto v : gv) dg.push_back(g.derivative(v).eval(vals));
    for (auto u : fv) {
        const T df = f.derivative(u).eval(vals);
        if (is_zero(df)) continue;
        const std::size_t ku = u / (m * m), iu = (u % (m * m)) / m, ju = u % m;
        for (std::size_t c = 0; c < gv.size(); ++c) {
            const std::size_t kv = gv[c] / (m * m);
            if (kv != ku || is_zero(dg[c])) continue;
            const std::size_t iv = (gv[c] % (m * m)) / m, jv = gv[c] % m;
            acc = acc + df * dg[c] * kks_bracket(points[ku], iu, ju, iv, jv);
        }
    }
    return acc;
}

/// (z − A_1)⋯(z − A_n) as a point of M_n.
template <Field T>
MonicZinv<T> product_point(std::span<const Matrix<T>> factors) {
    const std::size_t m = factors.front().rows(), n = factors.size();
    MatPoly<T> F = MatPoly<T>::identity(m);
    for (const auto& A : factors) {
        const std::vector<Matrix<T>> lin{-A, Matrix<T>::identity(m)};
        F = F * MatPoly<T>::from_coefficients(lin);
    }
    return z_to_zinv(F, n);
}

/// max over pairs of |{φ∘F, ψ∘F}_KKS − {φ, ψ}∘F| at the factor point A.
/// φ, ψ are polynomial functions on M_n (t^{(0)} already specialized).
template <Field T>
T product_map_poisson_check(std::span<const Matrix<T>> points,
                            const std::vector<std::pair<CoordPolynomial, CoordPolynomial>>& pairs) {
    const std::size_t m = points.front().rows(), n = points.size();
    const auto pull = product_pullbacks(m, n);
    const MonicZinv<T> P = product_point(points);
    T worst = zero_of<T>();
    for (const auto& [phi, psi] : pairs) {
        const T lhs = kks_product_bracket(points, phi.substitute(pull), psi.substitute(pull));
        const T rhs = bracket_functions(P, phi, psi);
        T diff = lhs - rhs;
        if constexpr (std::is_same_v<T, Rational>) {
            diff = abs(diff);
            if (diff > worst) worst = diff;
        } else {
            if (std::abs(diff) > std::abs(worst)) worst = diff;
        }
    }
    return worst;
}

struct FlowOptions {
    /// Reject a step whose det-coefficient change exceeds this.
    double max_step_drift = 1e-6;
    /// Keep every k-th point of the trajectory (the endpoint is always kept).
    std::size_t record_every = 1;
};

template <Field T>
struct FlowResult {
    std::vector<MonicZinv<T>> trajectory;
    std::vector<double> times;
    /// max_t |c_s(P(t)) − c_s(P(0))| for each det coefficient s = 1 … mn
    std::vector<double> det_drift;
    double max_drift = 0.0;
    std::size_t steps = 0;
};

namespace detail {

template <Field T>
double magnitude(const T& x) {
    if constexpr (ExactField<T>)
        return to_double(abs(x));
    else
        return static_cast<double>(std::abs(x));
}

template <Field T>
std::vector<T> det_coefficients(const MonicZinv<T>& P) {
    const std::size_t m = P.size(), n = P.order();
    const Poly<T> d = det(zinv_to_z(P, n));
    std::vector<T> out;
    for (std::size_t s = 1; s <= m * n; ++s) out.push_back(d.coeff(m * n - s));
    return out;
}

template <Field T>
MonicZinv<T> axpy(const MonicZinv<T>& P, const TangentVector<T>& v, const T& h) {
    MonicZinv<T> out = P;
    for (std::size_t k = 0; k < out.coeffs().size(); ++k) out.coeffs()[k] += v.coeffs[k] * h;
    return out;
}

} // namespace detail

/// Classical RK4 integration of dP/dt = X_A(P) with constant A and fixed
/// step h; the final step is shortened to land exactly on `time`.
template <Field T>
FlowResult<T> flow_integrate(const MonicZinv<T>& P0, const PlusPolyMat<T>& A, double time,
                             double step, const FlowOptions& opts = {}) {
    if (!(step > 0.0)) fail(Errc::invalid_argument, "step must be positive");
    if (!(time >= 0.0)) fail(Errc::invalid_argument, "time must be non-negative");
    FlowResult<T> out;
    const auto c0 = detail::det_coefficients(P0);
    out.det_drift.assign(c0.size(), 0.0);
    out.trajectory.push_back(P0);
    out.times.push_back(0.0);

    MonicZinv<T> P = P0;
    auto prev = c0;
    double t = 0.0;
    const auto nsteps = static_cast<std::size_t>(std::ceil(time / step - 1e-9));
    for (std::size_t k = 0; k < nsteps; ++k) {
        const double hk = std::min(step, time - t);
        const T h(hk), half(hk / 2.0);
        const auto k1 = dressing_field(P, A);
        const auto k2 = dressing_field(detail::axpy(P, k1, half), A);
        const auto k3 = dressing_field(detail::axpy(P, k2, half), A);
        const auto k4 = dressing_field(detail::axpy(P, k3, h), A);
        for (std::size_t c = 0; c < P.coeffs().size(); ++c) {
            Matrix<T> inc = k1.coeffs[c] + k2.coeffs[c] * T(2.0) + k3.coeffs[c] * T(2.0) + k4.coeffs[c];
            P.coeffs()[c] += inc * T(hk / 6.0);
        }
        t = (k + 1 == nsteps) ? time : t + hk;
        const auto c = detail::det_coefficients(P);
        for (std::size_t s = 0; s < c.size(); ++s) {
            if (detail::magnitude<T>(c[s] - prev[s]) > opts.max_step_drift)
                fail(Errc::drift_exceeded, "det drift per step exceeded at step " + std::to_string(k));
            out.det_drift[s] = std::max(out.det_drift[s], detail::magnitude<T>(c[s] - c0[s]));
        }
        prev = c;
        ++out.steps;
        if ((k + 1) % std::max<std::size_t>(opts.record_every, 1) == 0 || k + 1 == nsteps) {
            out.trajectory.push_back(P);
            out.times.push_back(t);
        }
    }
    for (double d : out.det_drift) out.max_drift = std::max(out.max_drift, d);
    return out;
}

} // namespace matpoly

#endif // MATPOLY_POISSON_HPP
