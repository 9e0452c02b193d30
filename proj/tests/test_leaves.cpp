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

#include "matpoly/leaves.hpp"
#include "matpoly/random.hpp"

using namespace matpoly;
using P = Poly<Rational>;
using MP = MatPoly<Rational>;
using Mat = Matrix<Rational>;

namespace {

P poly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long x : ascending) c.emplace_back(x);
    return P(std::move(c));
}

Mat mat2(long a, long b, long c, long d) {
    return Mat(2, 2, {Rational(a), Rational(b), Rational(c), Rational(d)});
}

MP linear(const Mat& A) {  // z − A
    return MP::from_coefficients(std::vector<Mat>{-A, Mat::identity(A.rows())});
}

Mat random_invertible(random::Engine& rng, std::size_t m) {
    for (;;) {
        Mat G = random::matrix(rng, m);
        if (sgn(determinant(G)) != 0) return G;
    }
}

// G·N·G^{-1} with N strictly upper triangular: a random nilpotent matrix.
Mat random_nilpotent(random::Engine& rng, std::size_t m) {
    Mat N(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (random::uniform_int(rng, 0, 2) != 0) N(i, j) = random::rational(rng);
    const Mat G = random_invertible(rng, m);
    return G * N * inverse(G);
}

} // namespace

TEST(ZinvToZ, Examples) {
    const Mat P1 = mat2(1, 2, 3, 4);
    const MonicZinv<Rational> P(2, {P1});
    EXPECT_EQ(zinv_to_z(P, 1), MP::from_coefficients(std::vector<Mat>{P1, Mat::identity(2)}));
    EXPECT_EQ(zinv_to_z(MonicZinv<Rational>::identity(2, 0), 2), MP::scalar(2, poly({0, 0, 1})));
    EXPECT_THROW((void)zinv_to_z(MonicZinv<Rational>(2, {P1, P1}), 1), Error);
}

TEST(ZinvToZ, RoundTrip) {
    random::Engine rng(31);
    for (int t = 0; t < 20; ++t) {
        const std::size_t m = 1 + t % 3, n = 1 + t % 3;
        const MP M = random::monic(rng, m, n);
        const auto Z = z_to_zinv(M, n);
        EXPECT_EQ(zinv_to_z(Z, n), M);
        EXPECT_EQ(z_to_zinv(zinv_to_z(Z, n), n), Z);
    }
    EXPECT_THROW((void)z_to_zinv(MP::scalar(2, poly({1, 2})), 1), Error);
}

TEST(Classify, ScalarPowerIsTheZeroTypePoint) {
    const auto S = classify(MP::scalar(3, poly({0, 0, 1})));
    for (const auto& d : S.invariants) EXPECT_EQ(d, poly({0, 0, 1}));
    EXPECT_EQ(S.type_alpha, (std::vector<long>{0, 0, 0}));
    EXPECT_EQ(S.dimension, 0);
    EXPECT_EQ(S.determinant, P::monomial(1, 6));
}

TEST(Classify, NilpotentTwoByTwo) {
    const auto S = classify(linear(mat2(0, 1, 0, 0)));
    EXPECT_EQ(S.invariants, (std::vector<P>{poly({0, 0, 1}), P::one()}));
    EXPECT_EQ(S.type_alpha, (std::vector<long>{1, -1}));
    EXPECT_EQ(S.dimension, 2);
}

TEST(Classify, CoadjointOrbitCrossChecks) {
    // m = 2, n = 1: generic orbit and nilpotent orbit have dimension 2,
    // zero and scalar orbits are points.
    EXPECT_EQ(classify(linear(mat2(1, 2, 3, 4))).dimension, 2);
    EXPECT_EQ(classify(linear(mat2(0, 0, 5, 0))).dimension, 2);
    EXPECT_EQ(classify(linear(mat2(0, 0, 0, 0))).dimension, 0);
    EXPECT_EQ(classify(linear(mat2(7, 0, 0, 7))).dimension, 0);
    // generic gl_3 orbit
    const Mat A(3, 3, {Rational(1), Rational(2), Rational(0), Rational(0), Rational(3), Rational(1),
                       Rational(1), Rational(0), Rational(-2)});
    EXPECT_EQ(classify(linear(A)).dimension, 6);
}

TEST(Classify, GenericDeterminantGivesTrivialTail) {
    random::Engine rng(32);
    for (int t = 0; t < 10; ++t) {
        const MP M = random::monic(rng, 3, 2);
        const P d = det(M);
        if (gcd(d, d.derivative()) != P::one()) continue;
        const auto S = classify(M);
        EXPECT_EQ(S.invariants[0], d);
        EXPECT_EQ(S.invariants[1], P::one());
        EXPECT_EQ(S.invariants[2], P::one());
    }
}

TEST(Classify, RejectsNonMonic) {
    MP M = MP::scalar(2, poly({0, 2}));
    EXPECT_THROW((void)classify(M), Error);
}

TEST(Classify, DescriptorInvariantsOnRandomSamples) {
    random::Engine rng(33);
    for (int t = 0; t < 40; ++t) {
        const std::size_t m = 2 + t % 3, n = 1 + t % 2;
        // mix generic samples with structured ones that have repeated roots
        MP M = random::monic(rng, m, n);
        if (t % 2) {
            M = MP::identity(m);
            for (std::size_t k = 0; k < n; ++k) M = M * linear(random_nilpotent(rng, m));
        }
        const auto S = classify(M);
        std::int64_t total = 0;
        P prod = P::one();
        for (const auto& d : S.invariants) {
            total += d.degree().value();
            prod *= d;
        }
        EXPECT_EQ(total, static_cast<std::int64_t>(m * n));
        EXPECT_EQ(prod, det(M));
        EXPECT_EQ(S.determinant, det(M));
        EXPECT_GE(S.dimension, 0);
        EXPECT_EQ(S.dimension % 2, 0);
        long sum_alpha = 0;
        for (long a : S.type_alpha) sum_alpha += a;
        EXPECT_EQ(sum_alpha, 0);
    }
}

TEST(Classify, ConstantOnDoubleCosets) {
    random::Engine rng(34);
    for (int t = 0; t < 10; ++t) {
        const std::size_t m = 2 + t % 2;
        const MP M = random::monic(rng, m, 2);
        const MP G = random::unimodular(rng, m, 3, 1), H = random::unimodular(rng, m, 3, 1);
        EXPECT_EQ(invariant_polynomials(G * M * H), classify(M).invariants);
    }
}

TEST(Classify, ThinGrassmannianHasPowersOfZ) {
    random::Engine rng(35);
    for (int t = 0; t < 10; ++t) {
        const std::size_t m = 2 + t % 2, n = 2;
        MP M = MP::identity(m);
        for (std::size_t k = 0; k < n; ++k) M = M * linear(random_nilpotent(rng, m));
        ASSERT_EQ(det(M), P::monomial(1, m * n));
        for (const auto& d : classify(M).invariants) EXPECT_EQ(d, P::monomial(1, static_cast<std::size_t>(d.degree().value())));
    }
}

TEST(LeafDimension, Examples) {
    EXPECT_EQ(leaf_dimension({0, 0}, 3), 0);
    EXPECT_EQ(leaf_dimension({1, -1}, 1), 2);
    EXPECT_EQ(leaf_dimension({2, -1, -1}, 1), 6);
    EXPECT_THROW((void)leaf_dimension({-1, 1}, 1), Error);
    EXPECT_THROW((void)leaf_dimension({1, 0}, 1), Error);
}

TEST(Closure, Examples) {
    const auto S = make_descriptor(1, {poly({0, 0, 1}), P::one()});
    const auto Sp = make_descriptor(1, {poly({0, 1}), poly({0, 1})});
    EXPECT_TRUE(closure_contains(S, Sp));
    EXPECT_FALSE(closure_contains(Sp, S));
    EXPECT_TRUE(closure_contains(S, S));
    const auto T = make_descriptor(1, {poly({0, -1, 1}), P::one()});
    EXPECT_FALSE(closure_contains(T, S));
    const auto other_n = make_descriptor(2, {P::monomial(1, 4), P::one()});
    EXPECT_THROW((void)closure_contains(S, other_n), Error);
}

TEST(Closure, PartialOrderOnLeavesWithDeterminant) {
    // All chains d_2 | d_1 with d_1 d_2 = z^2 (z-1)^2 for m = 2, n = 2.
    const P z = poly({0, 1}), w = poly({-1, 1});
    std::vector<LeafDescriptor> family;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            P d2 = P::one();
            for (int k = 0; k < a; ++k) d2 *= z;
            for (int k = 0; k < b; ++k) d2 *= w;
            const P d1 = exact_quotient(z * z * w * w, d2);
            family.push_back(make_descriptor(2, {d1, d2}));
        }
    for (const auto& A : family) {
        EXPECT_TRUE(closure_contains(A, A));
        for (const auto& B : family) {
            if (closure_contains(A, B) && closure_contains(B, A)) EXPECT_TRUE(A == B);
            for (const auto& C : family)
                if (closure_contains(A, B) && closure_contains(B, C)) EXPECT_TRUE(closure_contains(A, C));
        }
    }
    // the generic leaf (d_2 = 1) contains everything with this determinant
    for (const auto& B : family) EXPECT_TRUE(closure_contains(family[0], B));
}

TEST(SLReduce, Examples) {
    EXPECT_EQ(sl_reduce(make_descriptor(1, {poly({0, 0, 1}), P::one()})).q, std::vector<P>{poly({0, 0, 1})});
    const auto flat = sl_reduce(make_descriptor(2, {poly({0, 0, 1}), poly({0, 0, 1}), poly({0, 0, 1})}));
    for (const auto& q : flat.q) EXPECT_EQ(q, P::one());
    EXPECT_EQ(sl_reduce(make_descriptor(2, {poly({0, 0, -1, 1}), poly({0, 1})})).q,
              std::vector<P>{poly({0, -1, 1})});
    // corrupted: d_2 does not divide d_1
    LeafDescriptor bad;
    bad.invariants = {poly({1, 1}), poly({0, 1})};
    EXPECT_THROW((void)sl_reduce(bad), Error);
}

TEST(SLNormalize, IdentityStaysIdentity) {
    const auto G = sl_normalize(MonicZinv<Rational>::identity(2, 1), 4);
    EXPECT_EQ(G[0], Mat::identity(2));
    for (std::size_t k = 1; k < G.size(); ++k) EXPECT_TRUE(G[k].is_zero());
}

namespace {

// det of a truncated matrix series, truncated again at N.
std::vector<Rational> truncated_det(const std::vector<Mat>& G, std::size_t N) {
    const P d = det(MP::from_coefficients(G));
    std::vector<Rational> out(N + 1, Rational(0));
    for (std::size_t k = 0; k <= N; ++k) out[k] = d.coeff(k);
    return out;
}

} // namespace

TEST(SLNormalize, DiagonalSquareRootSquaresBack) {
    const MonicZinv<Rational> P1(2, {mat2(1, 0, 0, 0)});  // diag(1 + w, 1)
    const std::size_t N = 8;
    const auto G = sl_normalize(P1, N);
    // (1 + w)^{-1/2} squared times (1 + w) must be 1 through order N
    std::vector<Rational> y(N + 1);
    for (std::size_t k = 0; k <= N; ++k) y[k] = G[k](1, 1);
    std::vector<Rational> sq(N + 1, Rational(0));
    for (std::size_t i = 0; i <= N; ++i)
        for (std::size_t j = 0; i + j <= N; ++j) sq[i + j] += y[i] * y[j];
    std::vector<Rational> prod(N + 1, Rational(0));
    for (std::size_t k = 0; k <= N; ++k) prod[k] = sq[k] + (k ? sq[k - 1] : Rational(0));
    EXPECT_EQ(prod[0], 1);
    for (std::size_t k = 1; k <= N; ++k) EXPECT_EQ(prod[k], 0) << k;
    const auto d = truncated_det(G, N);
    EXPECT_EQ(d[0], 1);
    for (std::size_t k = 1; k <= N; ++k) EXPECT_EQ(d[k], 0);
}

TEST(SLNormalize, DeterminantIsOneAndTruncationsAgree) {
    random::Engine rng(36);
    for (int t = 0; t < 5; ++t) {
        const std::size_t m = 2 + t % 2, n = 2;
        const auto Z = z_to_zinv(random::monic(rng, m, n), n);
        const auto G = sl_normalize(Z, 2 * n);
        const auto d = truncated_det(G, 2 * n);
        EXPECT_EQ(d[0], 1);
        for (std::size_t k = 1; k <= 2 * n; ++k) EXPECT_EQ(d[k], 0);
        const auto G2 = sl_normalize(Z, 2 * n + 3);
        for (std::size_t k = 0; k <= 2 * n; ++k) EXPECT_EQ(G2[k], G[k]);
    }
    EXPECT_THROW((void)sl_normalize(MonicZinv<Rational>(2, {mat2(1, 0, 0, 0), mat2(0, 1, 0, 0)}), 1), Error);
}

TEST(Drinfeld, TwoByTwoMinorsAreEntries) {
    random::Engine rng(37);
    const MP M = random::monic(rng, 2, 2);
    const auto chart = drinfeld_coordinates(M);
    ASSERT_EQ(chart.entries.size(), 1u);
    EXPECT_EQ(chart.entries[0].a, M(1, 1));
    EXPECT_EQ(chart.entries[0].b, M(1, 0));
}

TEST(Drinfeld, DiagonalIsDegenerate) {
    const MP M = MP::diagonal({poly({-1, 0, 1}), poly({2, 1, 1}), poly({0, 3, 1})});
    const auto chart = drinfeld_coordinates(M);
    for (const auto& e : chart.entries) {
        EXPECT_TRUE(e.b.is_zero());
        EXPECT_TRUE(e.numerator.is_zero());
        EXPECT_TRUE(e.poles.empty());
    }
    EXPECT_FALSE(chart.in_open_subset);
}

TEST(Drinfeld, MinorIndexConvention) {
    random::Engine rng(38);
    const MP M = random::monic(rng, 3, 1);
    const auto chart = drinfeld_coordinates(M);
    ASSERT_EQ(chart.entries.size(), 2u);
    // i = 1: rows {2,3}, cols {2,3} and {1,3}
    EXPECT_EQ(chart.entries[0].a, M(1, 1) * M(2, 2) - M(1, 2) * M(2, 1));
    EXPECT_EQ(chart.entries[0].b, M(1, 0) * M(2, 2) - M(1, 2) * M(2, 0));
    // i = 2: rows {3}, cols {3} and {2}
    EXPECT_EQ(chart.entries[1].a, M(2, 2));
    EXPECT_EQ(chart.entries[1].b, M(2, 1));
    EXPECT_EQ(chart.entries[0].a.degree(), Degree(2));
    EXPECT_TRUE(chart.entries[0].a.is_monic());
    EXPECT_LT(chart.entries[0].b.degree(), Degree(2));
}

TEST(Drinfeld, PoleCountMatchesLeafFormula) {
    random::Engine rng(39);
    for (int t = 0; t < 10; ++t) {
        const std::size_t m = 2 + t % 2, n = 1 + t % 2;
        const MP M = random::monic(rng, m, n);
        const auto S = classify(M);
        const auto chart = drinfeld_coordinates(M);
        for (const auto& e : chart.entries) {
            long k = static_cast<long>(n * (m - e.index));
            for (std::size_t j = m - e.index; j < m; ++j) k -= static_cast<long>(S.invariants[j].degree().value());
            EXPECT_EQ(e.k, k);
            if (chart.in_open_subset) EXPECT_EQ(static_cast<long>(e.poles.size()), e.k);
        }
    }
}

TEST(Drinfeld, ResiduesMatchPartialFractions) {
    // m = 2, n = 1: e_1 = P21 / P22 with P22 = z + c linear, so one pole at
    // -c with residue P21(-c) / 1.
    random::Engine rng(40);
    for (int t = 0; t < 10; ++t) {
        const auto A = random::complex_matrix(rng, 2);
        const MatPoly<Complex> M =
            MatPoly<Complex>::from_coefficients(std::vector<Matrix<Complex>>{A, Matrix<Complex>::identity(2)});
        const auto chart = drinfeld_coordinates(M);
        ASSERT_EQ(chart.entries.size(), 1u);
        const auto& e = chart.entries[0];
        ASSERT_EQ(e.poles.size(), 1u);
        const Complex x = -A(1, 1);
        EXPECT_LT(std::abs(e.poles[0].first - x), 1e-12);
        EXPECT_LT(std::abs(e.poles[0].second - A(1, 0)), 1e-12);
        EXPECT_TRUE(chart.in_open_subset);
    }
}

TEST(Drinfeld, CloseNumericPolesLeaveTheOpenSubset) {
    // P22 = (z - 1)(z - 1 - 1e-9), P21 = 1
    const Complex eps(1e-9, 0.0);
    MatPoly<Complex> M(2);
    M(0, 0) = Poly<Complex>({Complex(0), Complex(0), Complex(1)});
    M(1, 0) = Poly<Complex>({Complex(1)});
    M(1, 1) = Poly<Complex>({Complex(1) + eps, -(Complex(2) + eps), Complex(1)});
    EXPECT_FALSE(drinfeld_coordinates(M).in_open_subset);
}
