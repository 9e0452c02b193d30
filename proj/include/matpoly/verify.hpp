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

#ifndef MATPOLY_VERIFY_HPP
#define MATPOLY_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "leaves.hpp"
#include "poisson.hpp"
#include "random.hpp"
#include "smith.hpp"
#include "spectral.hpp"

namespace matpoly::verify {

/// Outcome of one property over a batch of random cases.
struct CheckResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    /// largest observed error for numeric checks, 0 for exact ones
    double worst = 0.0;
    double seconds = 0.0;
    std::string detail;

    bool ok() const noexcept { return failed == 0 && passed > 0; }
    void record(bool good, const std::string& why = "") {
        if (good) {
            ++passed;
        } else {
            ++failed;
            if (detail.empty()) detail = why;
        }
    }
    void observe(double err, double bound, const std::string& what) {
        worst = std::max(worst, err);
        record(err <= bound, what + " = " + std::to_string(err));
    }
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
    }
};

namespace detail {

template <class F>
CheckResult timed(const std::string& name, F&& body) {
    CheckResult r;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.record(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline Matrix<Rational> random_invertible(random::Engine& rng, std::size_t m) {
    for (;;) {
        auto G = random::matrix(rng, m);
        if (!is_zero(determinant(G))) return G;
    }
}

inline Matrix<Rational> random_nilpotent(random::Engine& rng, std::size_t m) {
    Matrix<Rational> J(m);
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (random::uniform_int(rng, 0, 2) != 0) J(i, i + 1) = Rational(1);
    const auto G = random_invertible(rng, m);
    return G * J * inverse(G);
}

inline MatPoly<Rational> linear(const Matrix<Rational>& A) {
    return MatPoly<Rational>::from_coefficients(std::vector<Matrix<Rational>>{-A, Matrix<Rational>::identity(A.rows())});
}

inline MonicZinv<Rational> random_point(random::Engine& rng, std::size_t m, std::size_t n) {
    std::vector<Matrix<Rational>> c;
    for (std::size_t k = 0; k < n; ++k) c.push_back(random::matrix(rng, m));
    return MonicZinv<Rational>(m, std::move(c));
}

inline std::vector<CoordIndex> all_indices(std::size_t m, std::size_t n) {
    std::vector<CoordIndex> out;
    for (std::size_t r = 1; r <= n; ++r)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) out.push_back({i, j, r});
    return out;
}

/// Rank of the Poisson matrix {t_a, t_b}(P), i.e. the dimension of the leaf through P.
inline std::size_t poisson_rank(const MonicZinv<Rational>& P) {
    const auto idx = all_indices(P.size(), P.order());
    Matrix<Rational> B(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) B(a, b) = bracket_tt(P, idx[a], idx[b]);
    return rank(B);
}

/// Dimension of the GL_m orbit of X: rank of Y ↦ [Y, X].
inline std::size_t coadjoint_orbit_dimension(const Matrix<Rational>& X) {
    const std::size_t m = X.rows();
    Matrix<Rational> ad(m * m);
    for (std::size_t a = 0; a < m * m; ++a) {
        const auto E = Matrix<Rational>::unit(m, a / m, a % m);
        const auto C = E * X - X * E;
        for (std::size_t b = 0; b < m * m; ++b) ad(b, a) = C(b / m, b % m);
    }
    return rank(ad);
}

inline CMatPoly random_generic(random::Engine& rng, std::size_t m, std::size_t n) {
    std::vector<CMatrix> f;
    for (std::size_t k = 0; k < n; ++k) f.push_back(random::complex_matrix(rng, m, 1.0));
    return product(f);
}

/// Random ordered partition of `values` into blocks of size m.
inline OrderedPartition random_partition(random::Engine& rng, std::vector<Complex> values, std::size_t m) {
    std::shuffle(values.begin(), values.end(), rng);
    OrderedPartition L;
    for (std::size_t k = 0; k < values.size(); k += m) L.emplace_back(values.begin() + k, values.begin() + k + m);
    return L;
}

} // namespace detail

/// Why S is not a valid Smith form of M, or "" when it is.
inline std::string smith_defect(const MatPoly<Rational>& M, const SmithForm<Rational>& S) {
    const std::size_t m = M.size();
    if (!(S.U * S.D * S.V == M)) return "U·D·V != M";
    if (det(S.U).degree() != Degree(0)) return "det U not a nonzero constant";
    if (det(S.V).degree() != Degree(0)) return "det V not a nonzero constant";
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && !S.D(i, j).is_zero()) return "D not diagonal";
    for (std::size_t i = 0; i < m; ++i) {
        const auto& d = S.invariants[i];
        if (!(S.D(i, i) == d)) return "invariants differ from diag(D)";
        if (!d.is_zero() && !d.is_monic()) return "invariant not monic";
        if (i + 1 < m && !divides(S.invariants[i + 1], d)) return "divisibility chain broken";
    }
    Poly<Rational> tail = Poly<Rational>::one();
    for (std::size_t r = 1; r <= m; ++r) {
        tail *= S.invariants[m - r];
        if (!(tail == minor_gcd_oracle(M, r))) return "tail product != gcd of " + std::to_string(r) + "-minors";
    }
    return "";
}

// ---- exact: SNF and leaves -------------------------------------------------

inline CheckResult check_snf(random::Engine& rng, std::size_t count = 200) {
    return detail::timed("snf_reconstruction_and_minor_oracle", [&](CheckResult& r) {
        for (std::size_t t = 0; t < count; ++t) {
            const std::size_t m = 2 + t % 3;
            const auto M = random::matpoly(rng, m, 3);
            const std::string why = smith_defect(M, smith_normal_form(M));
            r.record(why.empty(), why);
        }
    });
}

inline CheckResult check_double_coset(random::Engine& rng, std::size_t count = 50) {
    return detail::timed("leaf_double_coset_invariance", [&](CheckResult& r) {
        for (std::size_t t = 0; t < count; ++t) {
            const std::size_t m = 2 + t % 2;
            const auto M = random::matpoly(rng, m, 2);
            const auto L = random::unimodular(rng, m, 6), R = random::unimodular(rng, m, 6);
            r.record(invariant_polynomials(L * M * R) == invariant_polynomials(M), "invariants changed");
        }
    });
}

/// m = 2, n = 1 leaves are coadjoint orbits of −P_1; compares the dimension
/// formula with rank ad_X and with the rank of the Poisson matrix.
inline CheckResult check_coadjoint_dimensions(random::Engine& rng) {
    return detail::timed("leaf_dimension_vs_coadjoint_orbits", [&](CheckResult& r) {
        using Mat = Matrix<Rational>;
        const auto scalar = [](long c) { return Mat::identity(2) * Rational(c); };
        struct Case {
            Mat X;
            long expected;
        };
        std::vector<Case> cases;
        for (int k = 0; k < 5; ++k) {
            Mat G = random::matrix(rng, 2);
            while (G(0, 1) == 0 && G(1, 0) == 0) G = random::matrix(rng, 2);  // not scalar
            cases.push_back({G, 2});
            cases.push_back({detail::random_nilpotent(rng, 2), -1});
            cases.push_back({scalar(k - 2), 0});
        }
        cases.push_back({Mat(2), 0});
        cases.push_back({Mat(2, 2, {Rational(0), Rational(1), Rational(0), Rational(0)}), 2});
        for (const auto& c : cases) {
            const auto S = classify(detail::linear(c.X));
            const auto orbit = static_cast<long>(detail::coadjoint_orbit_dimension(c.X));
            const auto prank = static_cast<long>(detail::poisson_rank(MonicZinv<Rational>(2, {-c.X})));
            const bool expected_ok = c.expected < 0 || S.dimension == c.expected;
            r.record(expected_ok && S.dimension == orbit && S.dimension == prank,
                     "dimension " + std::to_string(S.dimension) + " vs orbit " + std::to_string(orbit));
        }
    });
}

/// Reflexivity, antisymmetry and transitivity of closure_contains on 20
/// descriptors with determinant z^4 (m = n = 2).
inline CheckResult check_closure_order(random::Engine& rng, std::size_t count = 20) {
    return detail::timed("closure_partial_order", [&](CheckResult& r) {
        using Mat = Matrix<Rational>;
        std::vector<LeafDescriptor> fam;
        const auto z2 = Poly<Rational>::monomial(Rational(1), 2);
        // the three leaves with det z^4: (z^4, 1), (z^3, z), (z^2, z^2)
        MatPoly<Rational> a = MatPoly<Rational>::scalar(2, z2), b = a;
        a(0, 1) = Poly<Rational>::one();
        b(0, 1) = Poly<Rational>::z();
        fam.push_back(classify(a));
        fam.push_back(classify(b));
        fam.push_back(classify(MatPoly<Rational>::scalar(2, z2)));
        while (fam.size() < count) {
            const Mat N1 = detail::random_nilpotent(rng, 2), N2 = detail::random_nilpotent(rng, 2);
            fam.push_back(classify(detail::linear(N1) * detail::linear(N2)));
        }
        for (const auto& S : fam) r.record(S.determinant == Poly<Rational>::monomial(Rational(1), 4), "det != z^4");
        for (const auto& S : fam) r.record(closure_contains(S, S), "not reflexive");
        for (const auto& S : fam)
            for (const auto& T : fam)
                if (closure_contains(S, T) && closure_contains(T, S)) r.record(S == T, "not antisymmetric");
        for (const auto& S : fam)
            for (const auto& T : fam)
                for (const auto& U : fam)
                    if (closure_contains(S, T) && closure_contains(T, U))
                        r.record(closure_contains(S, U), "not transitive");
    });
}

// ---- exact: Poisson --------------------------------------------------------

inline CheckResult check_antisymmetry(random::Engine& rng, std::size_t points = 25) {
    return detail::timed("bracket_antisymmetry", [&](CheckResult& r) {
        for (std::size_t t = 0; t < points; ++t) {
            const std::size_t m = 1 + t % 3, n = 1 + (t / 3) % 3;
            const auto P = detail::random_point(rng, m, n);
            bool good = true;
            for (const auto& a : detail::all_indices(m, n))
                for (const auto& b : detail::all_indices(m, n))
                    good = good && bracket_tt(P, a, b) == -bracket_tt(P, b, a);
            r.record(good, "antisymmetry violated");
        }
    });
}

/// Σ_cyc {t_a, {t_b, t_c}} at random rational points, m = 2, n ≤ 2. The
/// cyclic sum is a polynomial of degree ≤ 3, so points act as a
/// Schwartz–Zippel certificate.
inline CheckResult check_jacobi(random::Engine& rng, std::size_t points = 25) {
    return detail::timed("bracket_jacobi", [&](CheckResult& r) {
        const std::size_t m = 2;
        for (std::size_t n = 1; n <= 2; ++n) {
            const auto idx = detail::all_indices(m, n);
            std::vector<std::vector<CoordPolynomial>> inner(idx.size(), std::vector<CoordPolynomial>(idx.size()));
            for (std::size_t x = 0; x < idx.size(); ++x)
                for (std::size_t y = 0; y < idx.size(); ++y)
                    inner[x][y] = specialize_monic(bracket_polynomial(m, n, idx[x], idx[y]), m, n);
            for (std::size_t t = 0; t < points; ++t) {
                const auto P = detail::random_point(rng, m, n);
                bool good = true;
                for (std::size_t a = 0; a < idx.size() && good; ++a)
                    for (std::size_t b = 0; b < idx.size() && good; ++b)
                        for (std::size_t c = 0; c < idx.size() && good; ++c) {
                            const auto f = [&](std::size_t k) { return coordinate_function(m, idx[k]); };
                            const Rational J = bracket_functions(P, f(a), inner[b][c]) +
                                               bracket_functions(P, f(b), inner[c][a]) +
                                               bracket_functions(P, f(c), inner[a][b]);
                            good = J == 0;
                        }
                r.record(good, "Jacobi residual nonzero");
            }
        }
    });
}

inline CheckResult check_casimirs(random::Engine& rng, std::size_t points_per_shape = 2) {
    return detail::timed("det_coefficients_are_casimirs", [&](CheckResult& r) {
        for (std::size_t m = 1; m <= 3; ++m)
            for (std::size_t n = 1; n <= 3; ++n) {
                const auto dets = det_coefficient_functions(m, n);
                for (std::size_t t = 0; t < points_per_shape; ++t) {
                    const auto P = detail::random_point(rng, m, n);
                    bool good = true;
                    for (const auto& c : dets)
                        for (const auto& b : detail::all_indices(m, n)) good = good && casimir_check(P, c, b) == 0;
                    r.record(good, "nonzero Casimir bracket");
                }
            }
    });
}

/// ξ_A = X_A = BP − PC with A, C from coset_solve(P, B).
inline CheckResult check_three_presentations(random::Engine& rng, std::size_t count = 50) {
    return detail::timed("hamiltonian_dressing_coset_agree", [&](CheckResult& r) {
        for (std::size_t t = 0; t < count; ++t) {
            const std::size_t m = 1 + t % 3, n = 1 + (t / 3) % 3;
            const auto P = detail::random_point(rng, m, n);
            PlusPolyMat<Rational> B;
            for (std::size_t k = 0; k < n; ++k) B.coeffs.push_back(random::matrix(rng, m));
            const auto [A, C] = coset_solve(P, B);
            const auto X = dressing_field(P, A);
            const auto D = coset_difference(P, B, C).to_tangent(n);
            TangentVector<Rational> xi{std::vector<Matrix<Rational>>(n, Matrix<Rational>(m))};
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) {
                        const auto f = hamiltonian_field(P, CoordIndex{i, j, q + 1});
                        for (std::size_t s = 0; s < n; ++s) xi.coeffs[s] += f.coeffs[s] * A.coeffs[q](j, i);
                    }
            r.record(D.has_value() && *D == X && xi == X && hamiltonian_field(P, A) == X, "presentations differ");
        }
    });
}

inline CheckResult check_product_map(random::Engine& rng, std::size_t points = 10) {
    return detail::timed("product_map_is_poisson", [&](CheckResult& r) {
        const std::size_t m = 2, n = 2;
        std::vector<std::pair<CoordPolynomial, CoordPolynomial>> pairs;
        for (const auto& a : detail::all_indices(m, n))
            for (const auto& b : detail::all_indices(m, n))
                pairs.emplace_back(coordinate_function(m, a), coordinate_function(m, b));
        for (std::size_t t = 0; t < points; ++t) {
            const std::vector<Matrix<Rational>> pts{random::matrix(rng, m), random::matrix(rng, m)};
            r.record(product_map_poisson_check<Rational>(pts, pairs) == 0, "pullback bracket residual nonzero");
        }
    });
}

/// RK4 along X_A on m = n = 2: drift at h = 1e-3, observed order from
/// h ∈ {0.1, 0.05, 0.025}, endpoint spectrum.
inline CheckResult check_flow(random::Engine& rng) {
    return detail::timed("flow_conservation", [&](CheckResult& r) {
        const MonicZinv<Complex> P(2, {random::complex_matrix(rng, 2, 0.5), random::complex_matrix(rng, 2, 0.5)});
        const PlusPolyMat<Complex> A{{random::complex_matrix(rng, 2, 0.5), random::complex_matrix(rng, 2, 0.5)}};
        const auto fine = flow_integrate(P, A, 1.0, 1e-3, {.max_step_drift = 1e-6, .record_every = 1000});
        r.observe(fine.max_drift, 1e-8, "det drift");

        const double d1 = flow_integrate(P, A, 1.0, 0.1).max_drift;
        const double d2 = flow_integrate(P, A, 1.0, 0.05).max_drift;
        const double d3 = flow_integrate(P, A, 1.0, 0.025).max_drift;
        const double order = std::min(std::log2(d1 / d2), std::log2(d2 / d3));
        r.record(order >= 3.5, "observed order " + std::to_string(order));
        if (r.detail.empty()) r.detail = "observed order " + std::to_string(order);

        const auto before = find_roots(det(zinv_to_z(P, 2))).roots;
        const auto after = find_roots(det(zinv_to_z(fine.trajectory.back(), 2))).roots;
        r.observe(match_multisets(before, after).max_distance, 1e-6, "endpoint spectrum shift");
    });
}

// ---- numeric: factorization and swaps -------------------------------------

inline CheckResult check_factorization(random::Engine& rng, std::size_t count = 50, const Tolerances& tol = {}) {
    return detail::timed("factorization_reconstruction", [&](CheckResult& r) {
        for (std::size_t t = 0; t < count; ++t) {
            const std::size_t n = 1 + t % 3;
            const auto P = detail::random_generic(rng, 2, n);
            const auto L = detail::random_partition(rng, spectrum(P, tol).values, 2);
            const auto F = factorize(P, L, tol);
            r.observe(F.residual, 1e-8, "reconstruction residual");
            r.observe(F.spectral_error, 1e-7, "factor spectrum mismatch");
        }
    });
}

inline CheckResult check_swaps(random::Engine& rng, std::size_t count = 100, const Tolerances& tol = {}) {
    return detail::timed("swap_invariance_and_involution", [&](CheckResult& r) {
        for (std::size_t t = 0; t < count; ++t) {
            const auto A = random::complex_matrix(rng, 2), B = random::complex_matrix(rng, 2);
            const auto ea = eigenvalues(A), eb = eigenvalues(B);
            const Complex lam = ea[t % 2], mu = eb[(t / 2) % 2];
            const auto s = swap_adjacent(A, B, lam, mu, tol);
            r.observe(s.product_residual, 1e-9, "product residual");
            const auto back = swap_adjacent(s.A, s.B, mu, lam, tol);
            const double inv = std::max(matpoly::detail::norm(back.A - A), matpoly::detail::norm(back.B - B));
            r.observe(inv, 1e-8, "double swap error");
        }
    });
}

inline CheckResult check_swap_special_cases(const Tolerances& tol = {}) {
    return detail::timed("swap_diagonal_and_degenerate", [&](CheckResult& r) {
        const auto diag = [](Complex a, Complex b) { return CMatrix(2, 2, {a, 0.0, 0.0, b}); };
        const auto s = swap_adjacent(diag(1.0, 2.0), diag(3.0, 4.0), 1.0, 3.0, tol);
        r.observe(std::max(matpoly::detail::norm(s.A - diag(3.0, 2.0)), matpoly::detail::norm(s.B - diag(1.0, 4.0))),
                  1e-15, "diagonal swap error");
        try {
            swap_adjacent(diag(1.0, 2.0), diag(3.0, 4.0), 1.0, 4.0, tol);
            r.record(false, "degenerate inner product not detected");
        } catch (const Error& e) {
            r.record(e.code() == Errc::degenerate_inner_product, "wrong error kind");
        }
        // [[(z−1)(z−2), z], [0, (z−3)(z−4)]]: eigenvalues 1, 2 share the kernel e₁
        CMatPoly P(2);
        P(0, 0) = Poly<Complex>(std::vector<Complex>{2.0, -3.0, 1.0});
        P(0, 1) = Poly<Complex>(std::vector<Complex>{0.0, 1.0});
        P(1, 1) = Poly<Complex>(std::vector<Complex>{12.0, -7.0, 1.0});
        try {
            factorize(P, {{3.0, 4.0}, {1.0, 2.0}}, tol);
            r.record(false, "dependent eigenvectors not detected");
        } catch (const Error& e) {
            r.record(e.code() == Errc::chart_excluded, "wrong error kind");
        }
    });
}

inline CheckResult check_transitions(random::Engine& rng, std::size_t count = 20, const Tolerances& tol = {}) {
    return detail::timed("transition_inverse_composition", [&](CheckResult& r) {
        for (std::size_t t = 0; t < count; ++t) {
            const auto P = detail::random_generic(rng, 2, 2);
            const auto s = spectrum(P, tol).values;
            const auto L = detail::random_partition(rng, s, 2);
            const auto M = detail::random_partition(rng, s, 2);
            const auto F = factorize(P, L, tol);
            const auto there = transition(F, M, tol);
            const auto back = transition(there.result, F.partition, tol);
            double err = 0.0;
            for (std::size_t i = 0; i < 2; ++i) err = std::max(err, matpoly::detail::norm(back.result.factors[i] - F.factors[i]));
            r.observe(err, 1e-7, "round-trip error");
        }
    });
}

// ---- suites ----------------------------------------------------------------

inline SuiteReport run_suite(const std::string& suite, std::uint64_t seed, const Tolerances& tol = {}) {
    SuiteReport rep;
    rep.suite = suite;
    rep.seed = seed;
    random::Engine rng(seed);
    const bool all = suite == "all";
    if (!all && suite != "snf" && suite != "poisson" && suite != "factor")
        fail(Errc::invalid_argument, "unknown suite '" + suite + "'");
    if (all || suite == "snf") {
        rep.checks.push_back(check_snf(rng));
        rep.checks.push_back(check_double_coset(rng));
        rep.checks.push_back(check_coadjoint_dimensions(rng));
        rep.checks.push_back(check_closure_order(rng));
    }
    if (all || suite == "poisson") {
        rep.checks.push_back(check_antisymmetry(rng));
        rep.checks.push_back(check_jacobi(rng));
        rep.checks.push_back(check_casimirs(rng));
        rep.checks.push_back(check_three_presentations(rng));
        rep.checks.push_back(check_product_map(rng));
        rep.checks.push_back(check_flow(rng));
    }
    if (all || suite == "factor") {
        rep.checks.push_back(check_factorization(rng, 50, tol));
        rep.checks.push_back(check_swaps(rng, 100, tol));
        rep.checks.push_back(check_swap_special_cases(tol));
        rep.checks.push_back(check_transitions(rng, 20, tol));
    }
    return rep;
}

} // namespace matpoly::verify

#endif // MATPOLY_VERIFY_HPP
