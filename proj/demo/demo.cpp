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


// Walks one 2×2 quadratic through the library: exact leaf data, brackets,
// then the numeric factorization and an eigenvalue swap.

#include <iostream>

#include "matpoly/leaves.hpp"
#include "matpoly/poisson.hpp"
#include "matpoly/smith.hpp"
#include "matpoly/spectral.hpp"

using namespace matpoly;

int main() {
    using Mat = Matrix<Rational>;
    const Mat A1(2, 2, {Rational(1), Rational(2), Rational(0), Rational(3)});
    const Mat A2(2, 2, {Rational(4), Rational(0), Rational(1), Rational(5)});

    // P(z) = (z − A1)(z − A2)
    const auto P = product_point<Rational>(std::vector<Mat>{A1, A2});
    const auto Pz = zinv_to_z(P, 2);

    const auto S = smith_normal_form(Pz);
    std::cout << "invariant polynomials:";
    for (const auto& d : S.invariants) std::cout << "  " << to_string(d);
    std::cout << '\n';

    const auto leaf = classify(Pz);
    std::cout << "leaf type (";
    for (std::size_t i = 0; i < leaf.type_alpha.size(); ++i) std::cout << (i ? ", " : "") << leaf.type_alpha[i];
    std::cout << "), dimension " << leaf.dimension << ", det " << to_string(leaf.determinant) << '\n';

    const CoordIndex t12{0, 1, 1}, t21{1, 0, 1};
    std::cout << "{t12, t21}(P) = " << to_string(bracket_tt(P, t12, t21)) << '\n';
    std::cout << "{c_1, t12}(P) = " << to_string(casimir_check(P, 1, t12)) << "  (det coefficients are Casimirs)\n";

    // numeric side
    std::vector<CMatrix> cf;
    for (const auto& M : Pz.coefficient_matrices()) {
        CMatrix C(2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) C(i, j) = to_complex(M(i, j));
        cf.push_back(C);
    }
    const auto Pc = CMatPoly::from_coefficients(cf);
    const auto sp = spectrum(Pc);
    std::cout << "spectrum:";
    for (auto x : sp.values) std::cout << ' ' << x.real();
    std::cout << '\n';

    const auto F = factorize(Pc, {{sp.values[0], sp.values[3]}, {sp.values[1], sp.values[2]}});
    std::cout << "factorization over ({" << sp.values[0].real() << ", " << sp.values[3].real() << "}, {"
              << sp.values[1].real() << ", " << sp.values[2].real() << "}): residual " << F.residual << '\n';

    const auto sw = swap_adjacent(F.factors[0], F.factors[1], sp.values[3], sp.values[1]);
    std::cout << "after swapping " << sp.values[3].real() << " <-> " << sp.values[1].real()
              << ": product residual " << sw.product_residual << '\n';
    return 0;
}
