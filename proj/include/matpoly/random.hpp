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

#ifndef MATPOLY_RANDOM_HPP
#define MATPOLY_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "matpoly.hpp"

// Deterministic sample generators shared by the verification suites and the
// tests. All draws go through one engine so a seed fixes the whole run.
namespace matpoly::random {

using Engine = std::mt19937_64;

inline long uniform_int(Engine& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline double uniform_real(Engine& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// p/q with |p| ≤ num_bound and 1 ≤ q ≤ den_bound.
inline Rational rational(Engine& rng, long num_bound = 5, long den_bound = 3) {
    Rational q(uniform_int(rng, -num_bound, num_bound), uniform_int(rng, 1, den_bound));
    q.canonicalize();
    return q;
}

inline Poly<Rational> poly(Engine& rng, std::size_t max_degree) {
    const auto deg = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(max_degree)));
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = rational(rng);
    return Poly<Rational>(std::move(c));
}

inline Matrix<Rational> matrix(Engine& rng, std::size_t m, long num_bound = 5, long den_bound = 3) {
    Matrix<Rational> A(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) A(i, j) = rational(rng, num_bound, den_bound);
    return A;
}

/// Arbitrary (possibly singular, non-monic) matrix polynomial; each entry is
/// zero with probability 1/5.
inline MatPoly<Rational> matpoly(Engine& rng, std::size_t m, std::size_t max_degree) {
    MatPoly<Rational> M(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (uniform_int(rng, 0, 4) != 0) M(i, j) = poly(rng, max_degree);
    return M;
}

/// z^n·I + Σ_k C_k z^{n-k} with random rational C_k.
inline MatPoly<Rational> monic(Engine& rng, std::size_t m, std::size_t n) {
    std::vector<Matrix<Rational>> c(n + 1, Matrix<Rational>(m));
    for (std::size_t k = 0; k < n; ++k) c[k] = matrix(rng, m);
    c[n] = Matrix<Rational>::identity(m);
    return MatPoly<Rational>::from_coefficients(c);
}

/// Product of elementary unimodular matrices: transvections I + c·z^k·E_ij,
/// row swaps and nonzero constant scalings.
inline MatPoly<Rational> unimodular(Engine& rng, std::size_t m, std::size_t steps,
                                    std::size_t max_degree = 2) {
    MatPoly<Rational> G = MatPoly<Rational>::identity(m);
    for (std::size_t s = 0; s < steps; ++s) {
        MatPoly<Rational> E = MatPoly<Rational>::identity(m);
        const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(m) - 1));
        auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(m) - 2));
        if (j >= i) ++j;
        switch (uniform_int(rng, 0, 5)) {
        case 0:
            E(i, i) = Poly<Rational>();
            E(j, j) = Poly<Rational>();
            E(i, j) = Poly<Rational>::one();
            E(j, i) = Poly<Rational>::one();
            break;
        case 1: {
            Rational c = rational(rng);
            if (sgn(c) == 0) c = 2;
            E(i, i) = Poly<Rational>::constant(c);
            break;
        }
        default:
            E(i, j) = poly(rng, max_degree);
            break;
        }
        G = G * E;
    }
    return G;
}

/// Random complex matrix with entries uniform in the unit box.
inline Matrix<Complex> complex_matrix(Engine& rng, std::size_t m, double scale = 1.0) {
    Matrix<Complex> A(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            A(i, j) = Complex(uniform_real(rng, -scale, scale), uniform_real(rng, -scale, scale));
    return A;
}

} // namespace matpoly::random

#endif // MATPOLY_RANDOM_HPP
