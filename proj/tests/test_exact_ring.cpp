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

#include <gtest/gtest.h>

#include <numeric>

#include "matpoly/matpoly.hpp"
#include "matpoly/random.hpp"

using namespace matpoly;
using P = Poly<Rational>;
using MP = MatPoly<Rational>;

namespace {

P poly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long x : ascending) c.emplace_back(x);
    return P(std::move(c));
}

// Leibniz formula over all permutations; independent of both determinant paths.
P leibniz_det(const MP& M) {
    const std::size_t m = M.size();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    P acc;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++inversions;
        P term = P::one();
        for (std::size_t i = 0; i < m; ++i) term *= M(i, perm[i]);
        if (inversions % 2)
            acc -= term;
        else
            acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace

TEST(Degree, ZeroPolynomialIsBelowEverything) {
    EXPECT_TRUE(P().degree().is_neg_inf());
    EXPECT_LT(P().degree(), P::one().degree());
    EXPECT_LT(P().degree(), Degree(0));
    EXPECT_EQ(P().degree(), Degree::neg_inf());
    EXPECT_TRUE((P().degree() + Degree(3)).is_neg_inf());
    EXPECT_THROW((void)P().degree().value(), Error);
}

TEST(Poly, CanonicalFormStripsTrailingZeros) {
    P p(std::vector<Rational>{1, 2, 0, 0});
    EXPECT_EQ(p.size(), 2u);
    EXPECT_EQ(p.degree(), Degree(1));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p - p).coeffs().size(), 0u);
}

TEST(Poly, DivmodExamples) {
    auto [q1, r1] = divmod(poly({-1, 0, 1}), poly({-1, 1}));
    EXPECT_EQ(q1, poly({1, 1}));
    EXPECT_TRUE(r1.is_zero());

    auto [q2, r2] = divmod(poly({0, 1}), poly({0, 0, 1}));
    EXPECT_TRUE(q2.is_zero());
    EXPECT_EQ(r2, poly({0, 1}));

    // (z^3 + 2z) = z·(z^2 + 1) + z
    const P a = poly({0, 2, 0, 1}), b = poly({1, 0, 1});
    auto [q3, r3] = divmod(a, b);
    EXPECT_EQ(q3, poly({0, 1}));
    EXPECT_EQ(r3, poly({0, 1}));
    EXPECT_EQ(q3 * b + r3, a);
}

TEST(Poly, DivisionByZeroThrows) {
    try {
        (void)divmod(poly({1, 1}), P());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::division_by_zero);
    }
}

TEST(Poly, DivmodReconstructsOnRandomInputs) {
    random::Engine rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        P a = random::poly(rng, 6), b = random::poly(rng, 3);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(Poly, GcdExamples) {
    EXPECT_EQ(gcd(poly({0, 0, 1}), poly({0, -1, 1})), poly({0, 1}));
    const P p = poly({4, 0, 2});
    EXPECT_EQ(gcd(p, P()), monic(p));
    EXPECT_EQ(gcd(P(), p), monic(p));
    EXPECT_EQ(gcd(poly({-1, 1}), poly({-2, 1})), P::one());
    EXPECT_THROW((void)gcd(P(), P()), Error);
}

TEST(Poly, GcdOfSquareAndShiftedSquareByBruteForce) {
    // Enumerate every monic divisor candidate of degree ≤ 2 with coefficients
    // in {-2..2}; the largest common one must be z.
    const P a = poly({0, 0, 1}), b = poly({0, -1, 1});
    P best = P::one();
    for (long c0 = -2; c0 <= 2; ++c0)
        for (long c1 = -2; c1 <= 2; ++c1)
            for (int deg = 1; deg <= 2; ++deg) {
                P cand = deg == 1 ? poly({c0, 1}) : poly({c0, c1, 1});
                if (divides(cand, a) && divides(cand, b) && cand.degree() > best.degree())
                    best = cand;
            }
    EXPECT_EQ(best, poly({0, 1}));
    EXPECT_EQ(gcd(a, b), best);
}

TEST(Poly, GcdPropertiesOnRandomInputs) {
    random::Engine rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const P common = random::poly(rng, 2);
        const P a = random::poly(rng, 3) * common, b = random::poly(rng, 3) * common;
        if (a.is_zero() && b.is_zero()) continue;
        const P g = gcd(a, b);
        EXPECT_TRUE(g.is_monic());
        EXPECT_TRUE(divides(g, a));
        EXPECT_TRUE(divides(g, b));
        EXPECT_EQ(g, gcd(b, a));
        if (!common.is_zero()) EXPECT_TRUE(divides(monic(common), g));
    }
}

TEST(Poly, MonicNormalize) {
    EXPECT_EQ(monic(poly({2, 2})), poly({1, 1}));
    EXPECT_TRUE(monic(P()).is_zero());
}

TEST(Poly, ToString) {
    EXPECT_EQ(to_string(poly({0, 0, -1, 1})), "z^3 - z^2");
    EXPECT_EQ(to_string(poly({0, 1})), "z");
    EXPECT_EQ(to_string(P()), "0");
    EXPECT_EQ(to_string(P(std::vector<Rational>{Rational(-3), Rational(1, 2)})), "1/2*z - 3");
}

TEST(MatPoly, DeterminantExamples) {
    const std::size_t m = 3, n = 2;
    const P zn = poly({0, 0, 1});
    EXPECT_EQ(det(MP::scalar(m, zn)), P::monomial(1, m * n));
    EXPECT_EQ(det(MP::diagonal({poly({0, 0, 1}), poly({0, -1, 1})})), poly({0, 0, 0, -1, 1}));
}

TEST(MatPoly, DeterminantMatchesLeibnizAndBareiss) {
    random::Engine rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = 2 + trial % 3;
        const MP M = random::matpoly(rng, m, 2);
        const P expected = leibniz_det(M);
        EXPECT_EQ(det_cofactor(M), expected);
        EXPECT_EQ(det_bareiss(M), expected);
    }
    // m = 5 uses Bareiss in det(); cross-check against Leibniz.
    const MP M5 = random::matpoly(rng, 5, 1);
    EXPECT_EQ(det(M5), leibniz_det(M5));
}

TEST(MatPoly, MonicDeterminantHasDegreeMnAndIsMonic) {
    random::Engine rng(14);
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t n = 1; n <= 3; ++n) {
            const P d = det(random::monic(rng, m, n));
            EXPECT_EQ(d.degree(), Degree(static_cast<std::int64_t>(m * n)));
            EXPECT_TRUE(d.is_monic());
        }
}

TEST(MatPoly, DeterminantIsMultiplicative) {
    random::Engine rng(15);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t m = 2 + trial % 3;
        const MP A = random::matpoly(rng, m, 3), B = random::matpoly(rng, m, 3);
        EXPECT_EQ(det(A * B), det(A) * det(B));
    }
}

TEST(MatPoly, EvaluationIsARingHomomorphism) {
    random::Engine rng(16);
    const MP D = MP::scalar(2, poly({0, 1}));
    EXPECT_EQ(D.eval(Rational(2)), Matrix<Rational>::identity(2) * Rational(2));
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = 2 + trial % 3;
        const MP A = random::matpoly(rng, m, 3), B = random::matpoly(rng, m, 3);
        const Rational z0 = random::rational(rng);
        EXPECT_EQ((A * B).eval(z0), A.eval(z0) * B.eval(z0));
        EXPECT_EQ((A + B).eval(z0), A.eval(z0) + B.eval(z0));
        EXPECT_EQ(det(A)(z0), determinant(A.eval(z0)));
    }
}

TEST(MatPoly, CoefficientViewRoundTrips) {
    random::Engine rng(17);
    const MP M = random::monic(rng, 3, 2);
    const auto C = M.coefficient_matrices();
    ASSERT_EQ(C.size(), 3u);
    EXPECT_EQ(C[2], Matrix<Rational>::identity(3));
    EXPECT_EQ(MP::from_coefficients(C), M);
    EXPECT_EQ(monic_degree(M), 2u);
}

TEST(MatPoly, DimensionMismatchThrows) {
    EXPECT_THROW((void)(MP(2) * MP(3)), Error);
    EXPECT_THROW((void)(MP(2) + MP(3)), Error);
}

TEST(MatPoly, ComplexDeterminantByInterpolationAgreesWithCofactor) {
    random::Engine rng(18);
    std::vector<Matrix<Complex>> c = {random::complex_matrix(rng, 5), random::complex_matrix(rng, 5),
                                      Matrix<Complex>::identity(5)};
    const MatPoly<Complex> M = MatPoly<Complex>::from_coefficients(c);
    const Poly<Complex> a = det(M), b = det_cofactor(M);
    ASSERT_EQ(a.size(), 11u);
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_LT(std::abs(a.coeff(k) - b.coeff(k)), 1e-10);
}
