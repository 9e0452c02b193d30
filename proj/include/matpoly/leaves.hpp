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

#ifndef MATPOLY_LEAVES_HPP
#define MATPOLY_LEAVES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monic.hpp"
#include "roots.hpp"
#include "smith.hpp"

namespace matpoly {

/// Complete invariants of the symplectic leaf through a monic P ∈ P_n.
struct LeafDescriptor {
    std::size_t m = 0;
    std::size_t n = 0;
    /// d_1 … d_m, monic, d_{i+1} | d_i
    std::vector<Poly<Rational>> invariants;
    /// α_i = deg d_i − n
    std::vector<long> type_alpha;
    long dimension = 0;
    Poly<Rational> determinant;

    /// Leaves coincide iff their invariant polynomials do.
    friend bool operator==(const LeafDescriptor& a, const LeafDescriptor& b) {
        return a.m == b.m && a.n == b.n && a.invariants == b.invariants;
    }
};

/// Leaf of the SL reduction: q_i = d_i / d_m, i = 1 … m−1.
struct SLLeafDescriptor {
    std::vector<Poly<Rational>> q;
    friend bool operator==(const SLLeafDescriptor&, const SLLeafDescriptor&) = default;
};

/// Dimension Σ_i (m+1−2i)(α_i + n) of a leaf of type α.
inline long leaf_dimension(const std::vector<long>& alpha, std::size_t n) {
    const auto m = static_cast<long>(alpha.size());
    long sum = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        sum += alpha[i];
        if (i + 1 < alpha.size() && alpha[i] < alpha[i + 1])
            fail(Errc::non_dominant, "type is not dominant (non-increasing)");
        if (alpha[i] + static_cast<long>(n) < 0)
            fail(Errc::invalid_argument, "type entry below −n");
    }
    if (sum != 0) fail(Errc::non_dominant, "type entries must sum to zero");
    long dim = 0;
    for (long i = 1; i <= m; ++i)
        dim += (m + 1 - 2 * i) * (alpha[static_cast<std::size_t>(i - 1)] + static_cast<long>(n));
    return dim;
}

/// Builds a descriptor from invariant polynomials, checking the chain.
inline LeafDescriptor make_descriptor(std::size_t n, std::vector<Poly<Rational>> invariants) {
    LeafDescriptor S;
    S.m = invariants.size();
    S.n = n;
    S.determinant = Poly<Rational>::one();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < S.m; ++i) {
        const auto& d = invariants[i];
        if (!d.is_monic()) fail(Errc::corrupted_descriptor, "invariant polynomial is not monic");
        if (i + 1 < S.m && !divides(invariants[i + 1], d))
            fail(Errc::corrupted_descriptor, "divisibility chain broken");
        const std::int64_t r = d.degree().value();
        total += r;
        S.type_alpha.push_back(static_cast<long>(r) - static_cast<long>(n));
        S.determinant *= d;
    }
    if (total != static_cast<std::int64_t>(S.m * n))
        fail(Errc::corrupted_descriptor, "invariant degrees must sum to m·n");
    S.invariants = std::move(invariants);
    S.dimension = leaf_dimension(S.type_alpha, n);
    return S;
}

/// Leaf through P: the Smith normal form of the monic polynomial P.
inline LeafDescriptor classify(const MatPoly<Rational>& P) {
    const std::size_t n = monic_degree(P);
    return make_descriptor(n, invariant_polynomials(P));
}

/// True iff S′ lies in the closure of S: equal determinants and
/// d′_1···d′_k | d_1···d_k for every k.
inline bool closure_contains(const LeafDescriptor& S, const LeafDescriptor& Sp) {
    if (S.m != Sp.m || S.n != Sp.n) fail(Errc::dimension_mismatch, "descriptors on different P_n");
    if (!(S.determinant == Sp.determinant)) return false;
    Poly<Rational> prod = Poly<Rational>::one(), prod_p = Poly<Rational>::one();
    for (std::size_t k = 0; k < S.m; ++k) {
        prod *= S.invariants[k];
        prod_p *= Sp.invariants[k];
        if (!divides(prod_p, prod)) return false;
    }
    return true;
}

inline SLLeafDescriptor sl_reduce(const LeafDescriptor& S) {
    if (S.invariants.empty()) fail(Errc::corrupted_descriptor, "empty descriptor");
    const auto& dm = S.invariants.back();
    SLLeafDescriptor out;
    for (std::size_t i = 0; i + 1 < S.invariants.size(); ++i)
        out.q.push_back(exact_quotient(S.invariants[i], dm));
    return out;
}

namespace detail {

// Power series in w = z^{-1}, truncated to degree N (N+1 coefficients).
using Series = std::vector<Rational>;

inline Series series_mul(const Series& a, const Series& b, std::size_t N) {
    Series c(N + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= N; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= N; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

inline Series series_pow(const Series& a, std::size_t e, std::size_t N) {
    Series r(N + 1, Rational(0));
    r[0] = 1;
    for (std::size_t k = 0; k < e; ++k) r = series_mul(r, a, N);
    return r;
}

} // namespace detail

/// g^{-1/m} for a series g with g_0 = 1, by the Newton iteration
/// y ← y + y(1 − g·y^m)/m which doubles the number of correct terms.
inline std::vector<Rational> series_inverse_root(const std::vector<Rational>& g, std::size_t m,
                                                 std::size_t N) {
    if (g.empty() || g[0] != 1) fail(Errc::invalid_argument, "series must start with 1");
    detail::Series y(N + 1, Rational(0));
    y[0] = 1;
    const Rational inv_m(1, static_cast<unsigned long>(m));
    for (std::size_t prec = 1; prec <= N;) {
        prec = std::min(2 * prec, N + 1);
        const std::size_t t = prec - 1;
        detail::Series gy = detail::series_mul(g, detail::series_pow(y, m, t), t);
        detail::Series corr(t + 1, Rational(0));
        for (std::size_t k = 0; k <= t; ++k) corr[k] = -gy[k];
        corr[0] += 1;
        detail::Series step = detail::series_mul(y, corr, t);
        for (std::size_t k = 0; k <= t; ++k) y[k] += step[k] * inv_m;
        if (prec == N + 1) break;
    }
    return y;
}

/// P(z)·(det P(z))^{-1/m} as a matrix power series in z^{-1} truncated at
/// order N (coefficients of z^0 … z^{-N}). The root is the branch with
/// constant term 1.
inline std::vector<Matrix<Rational>> sl_normalize(const MonicZinv<Rational>& P, std::size_t N) {
    const std::size_t m = P.size();
    std::size_t n = P.order();
    while (n > 0 && P.coeff(n).is_zero()) --n;
    if (N < n) fail(Errc::invalid_argument, "truncation order below the degree of P");

    // det P as a polynomial in w = z^{-1}
    std::vector<Matrix<Rational>> asc;
    for (std::size_t k = 0; k <= n; ++k) asc.push_back(P.coeff(k));
    const Poly<Rational> g = det(MatPoly<Rational>::from_coefficients(asc));
    detail::Series gs(N + 1, Rational(0));
    for (std::size_t k = 0; k <= N && k < g.size(); ++k) gs[k] = g.coeff(k);
    const auto y = series_inverse_root(gs, m, N);

    std::vector<Matrix<Rational>> out(N + 1, Matrix<Rational>(m));
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t j = 0; k + j <= N; ++j)
            if (sgn(y[j]) != 0) out[k + j] += P.coeff(k) * y[j];
    return out;
}

/// Rational function e_i = b_i / a_i of the monopole chart and its pole data.
struct MonopoleEntry {
    /// 1-based chart index i = 1 … m−1
    std::size_t index = 0;
    /// rows i+1…m, columns i+1…m
    Poly<Rational> a;
    /// rows i+1…m, columns i, i+2…m
    Poly<Rational> b;
    /// e_i in lowest terms
    Poly<Rational> numerator;
    Poly<Rational> denominator;
    /// Expected pole count n(m−i) − r_{m−i+1} − … − r_m on the leaf.
    long k = 0;
    /// (x_{i,s}, y_{i,s}): poles of e_i and residues there.
    std::vector<std::pair<Complex, Complex>> poles;
    bool simple_poles = true;
};

struct MonopoleChart {
    std::vector<MonopoleEntry> entries;
    /// All e_i have exactly k_i simple, separated poles.
    bool in_open_subset = true;
    std::string note;
};

/// Numeric counterpart of MonopoleEntry for complex input.
struct NumericMonopoleEntry {
    std::size_t index = 0;
    Poly<Complex> a;
    Poly<Complex> b;
    /// Number of poles that survive cancellation against zeros of b.
    long k = 0;
    std::vector<std::pair<Complex, Complex>> poles;
    bool simple_poles = true;
};

struct NumericMonopoleChart {
    std::vector<NumericMonopoleEntry> entries;
    bool in_open_subset = true;
    std::string note;
};

namespace detail {

// Row/column index sets of the minors defining a_i and b_i (0-based).
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> drinfeld_rows_cols(
    std::size_t m, std::size_t i, bool b_minor) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = i; r < m; ++r) rows.push_back(r);
    if (b_minor) cols.push_back(i - 1);
    for (std::size_t c = b_minor ? i + 1 : i; c < m; ++c) cols.push_back(c);
    return {rows, cols};
}

} // namespace detail

/// Drinfeld-type minors a_i, b_i of P, the reduced functions e_i = b_i/a_i,
/// and the pole/residue coordinates (x_{i,s}, y_{i,s}).
inline MonopoleChart drinfeld_coordinates(const MatPoly<Rational>& P,
                                          double separation_threshold = 1e-6) {
    const LeafDescriptor S = classify(P);
    const std::size_t m = S.m, n = S.n;
    MonopoleChart chart;
    for (std::size_t i = 1; i < m; ++i) {
        MonopoleEntry e;
        e.index = i;
        auto [ra, ca] = detail::drinfeld_rows_cols(m, i, false);
        auto [rb, cb] = detail::drinfeld_rows_cols(m, i, true);
        e.a = P.minor(ra, ca);
        e.b = P.minor(rb, cb);
        long k = static_cast<long>(n * (m - i));
        for (std::size_t j = m - i; j < m; ++j) k -= static_cast<long>(S.invariants[j].degree().value());
        e.k = k;
        if (e.b.is_zero()) {
            e.numerator = {};
            e.denominator = Poly<Rational>::one();
        } else {
            const Poly<Rational> g = gcd(e.a, e.b);
            e.numerator = exact_quotient(e.b, g);
            e.denominator = exact_quotient(e.a, g);
        }
        const Poly<Rational>& den = e.denominator;
        if (den.degree() > Degree(0)) {
            const auto report = find_roots(to_complex(den));
            const Poly<Complex> num_c = to_complex(e.numerator), dden_c = to_complex(den.derivative());
            for (const Complex x : report.roots) e.poles.emplace_back(x, num_c(x) / dden_c(x));
            const bool squarefree = gcd(den, den.derivative()) == Poly<Rational>::one();
            e.simple_poles = squarefree && min_separation(report.roots) >= separation_threshold;
        }
        if (!e.simple_poles) {
            chart.in_open_subset = false;
            chart.note += "e_" + std::to_string(i) + " has non-simple or unseparated poles; ";
        }
        if (static_cast<long>(e.poles.size()) != e.k) {
            chart.in_open_subset = false;
            chart.note += "e_" + std::to_string(i) + " has " + std::to_string(e.poles.size()) +
                          " poles, expected " + std::to_string(e.k) + "; ";
        }
        chart.entries.push_back(std::move(e));
    }
    return chart;
}

/// Numeric path: poles are the roots of a_i that are not (numerically) zeros
/// of b_i; residues are b_i(x)/a_i'(x).
inline NumericMonopoleChart drinfeld_coordinates(const MatPoly<Complex>& P,
                                                 double separation_threshold = 1e-6,
                                                 double cancel_tolerance = 1e-8) {
    const std::size_t m = P.size();
    monic_degree(P);
    NumericMonopoleChart chart;
    for (std::size_t i = 1; i < m; ++i) {
        NumericMonopoleEntry e;
        e.index = i;
        auto [ra, ca] = detail::drinfeld_rows_cols(m, i, false);
        auto [rb, cb] = detail::drinfeld_rows_cols(m, i, true);
        e.a = P.minor(ra, ca);
        e.b = P.minor(rb, cb);
        if (!e.b.is_zero() && e.a.degree() > Degree(0)) {
            const auto report = find_roots(e.a);
            const Poly<Complex> da = e.a.derivative();
            std::vector<Complex> kept;
            for (const Complex x : report.roots) {
                const Complex bx = e.b(x);
                if (std::abs(bx) <= cancel_tolerance * std::max(1.0, detail::eval_scale(e.b, x))) continue;
                kept.push_back(x);
                e.poles.emplace_back(x, bx / da(x));
            }
            e.simple_poles = min_separation(kept) >= separation_threshold;
            e.k = static_cast<long>(kept.size());
        }
        if (!e.simple_poles) {
            chart.in_open_subset = false;
            chart.note += "e_" + std::to_string(i) + " poles closer than the separation threshold; ";
        }
        chart.entries.push_back(std::move(e));
    }
    return chart;
}

} // namespace matpoly

#endif // MATPOLY_LEAVES_HPP
