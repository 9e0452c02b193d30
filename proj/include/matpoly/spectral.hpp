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

#ifndef MATPOLY_SPECTRAL_HPP
#define MATPOLY_SPECTRAL_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "roots.hpp"

namespace matpoly {

using CMatrix = Matrix<Complex>;
using CMatPoly = MatPoly<Complex>;

struct Tolerances {
    double sep = 1e-8;         // genericity: minimum eigenvalue separation
    double kappa_max = 1e8;    // eigenvector matrix conditioning
    double ip = 1e-10;         // |uᵗv| relative to ‖u‖‖v‖
    double div = 1e-9;         // relative right-division remainder
    double eig = 1e-9;         // relative ‖P(λ)v‖
    double kernel_gap = 1e-6;  // second-smallest singular value below this ⇒ kernel not a line
    double membership = 1e-6;  // user-supplied eigenvalues may differ from computed ones by this much
};

struct Spectrum {
    std::vector<Complex> values;
    /// |det P(λ)| / Σ|c_k||λ|^k per root
    std::vector<double> residuals;
    std::vector<bool> converged;
    double separation = 0.0;
    bool generic = false;
};

/// Λ = (Λ₁ … Λ_n), each block holding m eigenvalues.
using OrderedPartition = std::vector<std::vector<Complex>>;

struct Factorization {
    std::vector<CMatrix> factors;
    OrderedPartition partition;
    /// ‖Π(z − A_i) − P‖ / max(1, ‖P‖), coefficient-wise Frobenius
    double residual = 0.0;
    /// condition number of the eigenvector matrix at each peeling stage (index i ↔ A_i)
    std::vector<double> condition;
    /// max distance between Sp(A_i) and Λ_i after matching
    double spectral_error = 0.0;
};

namespace detail {

inline Eigen::MatrixXcd to_eigen(const CMatrix& M) {
    Eigen::MatrixXcd E(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) E(i, j) = M(i, j);
    return E;
}

inline CMatrix from_eigen(const Eigen::MatrixXcd& E) {
    CMatrix M(E.rows(), E.cols());
    for (Eigen::Index i = 0; i < E.rows(); ++i)
        for (Eigen::Index j = 0; j < E.cols(); ++j) M(i, j) = E(i, j);
    return M;
}

inline double norm(const CMatrix& M) { return to_eigen(M).norm(); }

inline double norm(const CMatPoly& P) {
    double s = 0.0;
    for (const auto& C : P.coefficient_matrices()) {
        const double c = norm(C);
        s += c * c;
    }
    return std::sqrt(s);
}

/// Unit vector spanning ker M (smallest right singular vector). Throws
/// ambiguous_kernel when the second-smallest singular value is also small.
inline Eigen::VectorXcd null_vector(const Eigen::MatrixXcd& M, const Tolerances& tol, double* residual = nullptr) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const Eigen::Index m = M.cols();
    const double scale = std::max(1.0, s(0));
    if (m >= 2 && s(m - 2) <= tol.kernel_gap * scale)
        fail(Errc::ambiguous_kernel, "kernel has dimension greater than one");
    if (residual) *residual = s(m - 1) / scale;
    return svd.matrixV().col(m - 1);
}

/// Minimum-cost perfect matching on a square cost matrix (Kuhn–Munkres with
/// potentials). Returns assignment[row] = column.
inline std::vector<std::size_t> hungarian(const std::vector<std::vector<double>>& cost) {
    const std::size_t n = cost.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> assignment(n, 0);
    for (std::size_t j = 1; j <= n; ++j) assignment[p[j] - 1] = j - 1;
    return assignment;
}

} // namespace detail

struct Matching {
    /// a[i] is paired with b[pairing[i]]
    std::vector<std::size_t> pairing;
    double max_distance = 0.0;
};

/// Pairs two equal-size multisets of complex numbers minimizing Σ|a_i − b_π(i)|.
inline Matching match_multisets(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) fail(Errc::dimension_mismatch, "multisets differ in size");
    std::vector<std::vector<double>> cost(a.size(), std::vector<double>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) cost[i][j] = std::abs(a[i] - b[j]);
    Matching out;
    if (a.empty()) return out;
    out.pairing = detail::hungarian(cost);
    for (std::size_t i = 0; i < a.size(); ++i) out.max_distance = std::max(out.max_distance, cost[i][out.pairing[i]]);
    return out;
}

/// Eigenvalues of a constant matrix.
inline std::vector<Complex> eigenvalues(const CMatrix& A) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(detail::to_eigen(A), false);
    std::vector<Complex> out(es.eigenvalues().begin(), es.eigenvalues().end());
    sort_roots(out);
    return out;
}

/// The mn roots of det P(z), P monic of degree n.
inline Spectrum spectrum(const CMatPoly& P, const Tolerances& tol = {}) {
    monic_degree(P);
    const RootReport rep = find_roots(det(P));
    Spectrum s;
    s.values = rep.roots;
    s.residuals = rep.residuals;
    s.converged = rep.converged;
    s.separation = s.values.size() < 2 ? std::numeric_limits<double>::infinity() : min_separation(s.values);
    s.generic = s.separation > tol.sep;
    return s;
}

/// Unit v with P(λ)v ≈ 0; with `left`, u with uᵗP(λ) ≈ 0.
inline std::vector<Complex> eigenvector(const CMatPoly& P, Complex lambda, bool left = false,
                                        const Tolerances& tol = {}) {
    Eigen::MatrixXcd M = detail::to_eigen(P.eval(lambda));
    if (left) M.transposeInPlace();
    double res = 0.0;
    const Eigen::VectorXcd v = detail::null_vector(M, tol, &res);
    if (res > tol.membership)
        fail(Errc::invalid_argument, "value is not an eigenvalue (relative residual " + std::to_string(res) + ")");
    return {v.begin(), v.end()};
}

struct RightDivisor {
    CMatrix A;
    /// P(z) = Q(z)(z − A) + R
    CMatPoly quotient;
    double residual = 0.0;
    double condition = 0.0;
};

/// Right division of a monic P by (z − A): Q_{n-1} = C_n, Q_{j-1} = C_j + Q_j A,
/// remainder C_0 + Q_0 A.
inline std::pair<CMatPoly, CMatrix> divide_right_linear(const CMatPoly& P, const CMatrix& A) {
    const auto C = P.coefficient_matrices();
    const std::size_t n = C.size() - 1, m = P.size();
    if (n == 0) return {CMatPoly(m), C[0]};
    std::vector<CMatrix> Q(n, CMatrix(m));
    Q[n - 1] = C[n];
    for (std::size_t j = n - 1; j >= 1; --j) Q[j - 1] = C[j] + Q[j] * A;
    return {CMatPoly::from_coefficients(Q), C[0] + Q[0] * A};
}

/// z − A right-dividing P with Sp(A) = block, A = V diag(block) V⁻¹.
inline RightDivisor right_divisor(const CMatPoly& P, const std::vector<Complex>& block, const Tolerances& tol = {}) {
    const std::size_t m = P.size();
    if (block.size() != m) fail(Errc::dimension_mismatch, "block must hold m eigenvalues");
    Eigen::MatrixXcd V(m, m);
    for (std::size_t k = 0; k < m; ++k) {
        const auto v = eigenvector(P, block[k], false, tol);
        for (std::size_t i = 0; i < m; ++i) V(i, k) = v[i];
        const Eigen::MatrixXcd Pl = detail::to_eigen(P.eval(block[k]));
        const double res = (Pl * V.col(k)).norm() / std::max(1.0, Pl.norm());
        if (res > tol.eig) fail(Errc::divisor_residual, "eigenvector residual " + std::to_string(res));
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(V);
    const auto& s = svd.singularValues();
    const double kappa = s(m - 1) > 0.0 ? s(0) / s(m - 1) : std::numeric_limits<double>::infinity();
    if (!(kappa <= tol.kappa_max))
        fail(Errc::dependent_eigenvectors, "eigenvectors are linearly dependent (condition " + std::to_string(kappa) + ")");
    Eigen::VectorXcd d(m);
    for (std::size_t k = 0; k < m; ++k) d(k) = block[k];
    const Eigen::MatrixXcd A = V * d.asDiagonal() * V.inverse();

    RightDivisor out;
    out.A = detail::from_eigen(A);
    out.condition = kappa;
    auto [Q, R] = divide_right_linear(P, out.A);
    out.quotient = std::move(Q);
    out.residual = detail::norm(R) / std::max(1.0, detail::norm(P));
    if (out.residual > tol.div)
        fail(Errc::divisor_residual, "right division remainder " + std::to_string(out.residual));
    return out;
}

/// (z − A₁)⋯(z − A_n)
inline CMatPoly product(const std::vector<CMatrix>& factors) {
    if (factors.empty()) fail(Errc::invalid_argument, "empty factor list");
    const std::size_t m = factors.front().rows();
    CMatPoly F = CMatPoly::identity(m);
    for (const auto& A : factors) {
        if (A.rows() != m || A.cols() != m) fail(Errc::dimension_mismatch, "factor shape");
        F = F * CMatPoly::from_coefficients(std::vector<CMatrix>{-A, CMatrix::identity(m)});
    }
    return F;
}

inline double relative_residual(const CMatPoly& F, const CMatPoly& P) {
    return detail::norm(F - P) / std::max(1.0, detail::norm(P));
}

namespace detail {

inline std::vector<Complex> flatten(const OrderedPartition& L) {
    std::vector<Complex> out;
    for (const auto& b : L) out.insert(out.end(), b.begin(), b.end());
    return out;
}

inline double block_spectral_error(const std::vector<CMatrix>& factors, const OrderedPartition& L) {
    double worst = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i)
        worst = std::max(worst, match_multisets(eigenvalues(factors[i]), L[i]).max_distance);
    return worst;
}

} // namespace detail

/// Peels z − A_n, then z − A_{n-1} off the quotient, and so on.
/// Partition values are snapped to the computed spectrum first.
inline Factorization factorize(const CMatPoly& P, const OrderedPartition& Lambda, const Tolerances& tol = {}) {
    const std::size_t m = P.size(), n = monic_degree(P);
    if (Lambda.size() != n) fail(Errc::dimension_mismatch, "partition must have n blocks");
    for (const auto& b : Lambda)
        if (b.size() != m) fail(Errc::dimension_mismatch, "each block must hold m eigenvalues");
    const Spectrum sp = spectrum(P, tol);
    if (!sp.generic) fail(Errc::not_generic, "spectrum is not simple (separation " + std::to_string(sp.separation) + ")");

    const auto flat = detail::flatten(Lambda);
    const Matching match = match_multisets(flat, sp.values);
    double scale = 1.0;
    for (auto x : sp.values) scale = std::max(scale, std::abs(x));
    if (match.max_distance > tol.membership * scale)
        fail(Errc::invalid_argument, "partition does not match the spectrum");
    Factorization F;
    F.partition = Lambda;
    std::size_t pos = 0;
    for (auto& b : F.partition)
        for (auto& x : b) x = sp.values[match.pairing[pos++]];

    F.factors.assign(n, CMatrix(m));
    F.condition.assign(n, 1.0);
    CMatPoly cur = P;
    for (std::size_t i = n; i-- > 0;) {
        if (i == 0) {
            F.factors[0] = -cur.coefficient_matrices()[0];
            break;
        }
        try {
            RightDivisor d = right_divisor(cur, F.partition[i], tol);
            F.factors[i] = std::move(d.A);
            F.condition[i] = d.condition;
            cur = std::move(d.quotient);
        } catch (const Error& e) {
            if (e.code() == Errc::dependent_eigenvectors || e.code() == Errc::ambiguous_kernel)
                fail(Errc::chart_excluded, "block " + std::to_string(i + 1) + ": " + e.what());
            throw;
        }
    }
    F.residual = relative_residual(product(F.factors), P);
    F.spectral_error = detail::block_spectral_error(F.factors, F.partition);
    return F;
}

struct SwapResult {
    CMatrix A;
    CMatrix B;
    /// ‖(z − Ã)(z − B̃) − (z − A)(z − B)‖ relative
    double product_residual = 0.0;
};

/// Moves λ ∈ Sp(A) into B and μ ∈ Sp(B) into A keeping (z − A)(z − B):
/// T = v uᵗ/(uᵗv), Av = λv, uᵗB = μuᵗ; Ã = A + (μ − λ)T, B̃ = B + (λ − μ)T.
inline SwapResult swap_adjacent(const CMatrix& A, const CMatrix& B, Complex lambda, Complex mu,
                                const Tolerances& tol = {}) {
    const std::size_t m = A.rows();
    if (B.rows() != m || A.cols() != m || B.cols() != m) fail(Errc::dimension_mismatch, "factor shape");
    SwapResult out{A, B, 0.0};
    if (lambda == mu) return out;

    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(m, m);
    double ra = 0.0, rb = 0.0;
    const Eigen::VectorXcd v = detail::null_vector(detail::to_eigen(A) - lambda * I, tol, &ra);
    const Eigen::VectorXcd u = detail::null_vector((detail::to_eigen(B) - mu * I).transpose(), tol, &rb);
    if (ra > tol.membership) fail(Errc::invalid_argument, "λ is not an eigenvalue of A");
    if (rb > tol.membership) fail(Errc::invalid_argument, "μ is not an eigenvalue of B");
    const Complex ip = (u.transpose() * v)(0, 0);
    if (std::abs(ip) < tol.ip * u.norm() * v.norm())
        fail(Errc::degenerate_inner_product, "(u, v) vanishes");
    const CMatrix T = detail::from_eigen(v * u.transpose() / ip);
    out.A = A + T * (mu - lambda);
    out.B = B + T * (lambda - mu);
    const CMatPoly before = product({A, B});
    out.product_residual = relative_residual(product({out.A, out.B}), before);
    return out;
}

struct SwapStep {
    /// 0-based index of the left factor of the exchanged pair
    std::size_t left = 0;
    Complex lambda;  // leaves the left factor
    Complex mu;      // leaves the right factor
};

struct Transition {
    Factorization result;
    std::vector<SwapStep> swaps;
};

/// Re-factorizes F over the partition Mu by adjacent swaps. Block by block from
/// the left, each missing eigenvalue of Mu_i bubbles leftwards one factor at a
/// time; at each hop the first eigenvalue of the left block not wanted in
/// Mu_i (or simply the first, on intermediate hops) goes right.
inline Transition transition(const Factorization& F, const OrderedPartition& Mu, const Tolerances& tol = {}) {
    const std::size_t n = F.factors.size();
    if (Mu.size() != n) fail(Errc::dimension_mismatch, "partition must have n blocks");
    for (std::size_t i = 0; i < n; ++i)
        if (Mu[i].size() != F.partition[i].size()) fail(Errc::dimension_mismatch, "block sizes differ");

    // label every eigenvalue by its position in the flattened source partition
    const auto src = detail::flatten(F.partition);
    const Matching match = match_multisets(detail::flatten(Mu), src);
    double scale = 1.0;
    for (auto x : src) scale = std::max(scale, std::abs(x));
    if (match.max_distance > tol.membership * scale)
        fail(Errc::invalid_argument, "target partition is not a reordering of the source");

    std::vector<std::vector<std::size_t>> cur(n), want(n);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < F.partition[i].size(); ++k) cur[i].push_back(pos++);
    pos = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < Mu[i].size(); ++k) want[i].push_back(match.pairing[pos++]);

    Transition out;
    out.result = F;
    auto& A = out.result.factors;
    const auto contains = [](const std::vector<std::size_t>& v, std::size_t x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t x : want[i]) {
            if (contains(cur[i], x)) continue;
            std::size_t j = i + 1;
            while (!contains(cur[j], x)) ++j;
            for (; j > i; --j) {
                auto& left = cur[j - 1];
                auto it = left.begin();
                if (j - 1 == i)
                    it = std::find_if(left.begin(), left.end(), [&](std::size_t y) { return !contains(want[i], y); });
                const std::size_t y = *it;
                const SwapStep step{j - 1, src[y], src[x]};
                try {
                    auto r = swap_adjacent(A[j - 1], A[j], step.lambda, step.mu, tol);
                    A[j - 1] = std::move(r.A);
                    A[j] = std::move(r.B);
                } catch (const Error& e) {
                    fail(e.code(), "swap step " + std::to_string(out.swaps.size()) + ": " + e.what());
                }
                out.swaps.push_back(step);
                *it = x;
                auto& right = cur[j];
                *std::find(right.begin(), right.end(), x) = y;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.result.partition[i].clear();
        for (std::size_t x : want[i]) out.result.partition[i].push_back(src[x]);
    }
    out.result.residual = relative_residual(product(A), product(F.factors));
    out.result.spectral_error = detail::block_spectral_error(A, out.result.partition);
    out.result.condition.clear();
    return out;
}

} // namespace matpoly

#endif // MATPOLY_SPECTRAL_HPP
