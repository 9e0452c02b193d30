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

#ifndef MATPOLY_ROOTS_HPP
#define MATPOLY_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "poly.hpp"

namespace matpoly {

struct RootReport {
    std::vector<Complex> roots;
    /// |p(x)| / Σ|c_k||x|^k at each returned root.
    std::vector<double> residuals;
    /// False where Newton polishing failed to reach the residual target.
    std::vector<bool> converged;
};

namespace detail {

inline double eval_scale(const Poly<Complex>& p, Complex x) {
    double s = 0.0, ax = std::abs(x), pw = 1.0;
    for (const auto& c : p.coeffs()) {
        s += std::abs(c) * pw;
        pw *= ax;
    }
    return s;
}

} // namespace detail

/// Sorts lexicographically by (real, imag) so that spectra have a
/// reproducible order.
inline void sort_roots(std::vector<Complex>& v) {
    std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
}

/// Roots of a nonzero polynomial: eigenvalues of the companion matrix,
/// each refined by Newton steps that are only accepted while |p| decreases.
inline RootReport find_roots(const Poly<Complex>& p, int max_polish = 20,
                             double residual_target = 1e-12) {
    RootReport out;
    if (p.is_zero()) fail(Errc::invalid_argument, "roots of the zero polynomial");
    const auto d = static_cast<Eigen::Index>(p.size() - 1);
    if (d == 0) return out;

    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    const Complex lead = p.leading();
    for (Eigen::Index i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < d; ++i) C(i, d - 1) = -p.coeff(static_cast<std::size_t>(i)) / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);

    const Poly<Complex> dp = p.derivative();
    for (Eigen::Index k = 0; k < d; ++k) {
        Complex x = es.eigenvalues()(k);
        double res = std::abs(p(x));
        for (int it = 0; it < max_polish; ++it) {
            const Complex slope = dp(x);
            if (slope == Complex{0.0, 0.0}) break;
            const Complex next = x - p(x) / slope;
            const double next_res = std::abs(p(next));
            if (!(next_res < res)) break;
            x = next;
            res = next_res;
        }
        const double scale = std::max(detail::eval_scale(p, x), std::numeric_limits<double>::min());
        out.roots.push_back(x);
        out.residuals.push_back(res / scale);
    }
    // keep residuals attached to their roots while sorting
    std::vector<std::size_t> order(out.roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Complex x = out.roots[a], y = out.roots[b];
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    RootReport sorted;
    for (auto i : order) {
        sorted.roots.push_back(out.roots[i]);
        sorted.residuals.push_back(out.residuals[i]);
        sorted.converged.push_back(out.residuals[i] <= std::sqrt(residual_target));
    }
    return sorted;
}

/// Smallest pairwise distance; +∞ for fewer than two points.
inline double min_separation(const std::vector<Complex>& v) {
    double s = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) s = std::min(s, std::abs(v[i] - v[j]));
    return s;
}

inline Poly<Complex> to_complex(const Poly<Rational>& p) {
    std::vector<Complex> c;
    for (const auto& x : p.coeffs()) c.push_back(matpoly::to_complex(x));
    return Poly<Complex>(std::move(c));
}

} // namespace matpoly

#endif // MATPOLY_ROOTS_HPP
