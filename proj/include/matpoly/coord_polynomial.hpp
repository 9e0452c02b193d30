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

#ifndef MATPOLY_COORD_POLYNOMIAL_HPP
#define MATPOLY_COORD_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <type_traits>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "field.hpp"

namespace matpoly {

/// Sparse polynomial with rational coefficients in indexed coordinate
/// functions (the t_ij^{(q)} on M_n, or the entries of factor matrices).
/// Used for exact chain-rule computations of brackets between composite
/// functions; not a general multivariate algebra.
class CoordPolynomial {
  public:
    /// Sorted (variable, exponent) pairs with positive exponents.
    using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

    CoordPolynomial() = default;
    CoordPolynomial(long c) { add_term({}, Rational(c)); }
    CoordPolynomial(const Rational& c) { add_term({}, c); }

    static CoordPolynomial variable(std::uint32_t v) {
        CoordPolynomial p;
        p.add_term({{v, 1}}, Rational(1));
        return p;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

    void add_term(const Monomial& mono, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    CoordPolynomial& operator+=(const CoordPolynomial& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    CoordPolynomial& operator-=(const CoordPolynomial& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, Rational(-c));
        return *this;
    }
    friend CoordPolynomial operator+(CoordPolynomial a, const CoordPolynomial& b) { return a += b; }
    friend CoordPolynomial operator-(CoordPolynomial a, const CoordPolynomial& b) { return a -= b; }

    friend CoordPolynomial operator*(const CoordPolynomial& a, const CoordPolynomial& b) {
        CoordPolynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), Rational(ca * cb));
        return out;
    }

    friend bool operator==(const CoordPolynomial& a, const CoordPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    /// Partial derivative with respect to variable v.
    CoordPolynomial derivative(std::uint32_t v) const {
        CoordPolynomial out;
        for (const auto& [mono, c] : terms_) {
            for (std::size_t k = 0; k < mono.size(); ++k) {
                if (mono[k].first != v) continue;
                Monomial m2 = mono;
                const std::uint32_t e = m2[k].second;
                if (e == 1)
                    m2.erase(m2.begin() + static_cast<std::ptrdiff_t>(k));
                else
                    m2[k].second = e - 1;
                out.add_term(m2, Rational(c * e));
            }
        }
        return out;
    }

    /// Variables that actually occur.
    std::vector<std::uint32_t> support() const {
        std::vector<std::uint32_t> vars;
        for (const auto& [mono, c] : terms_)
            for (const auto& [v, e] : mono) vars.push_back(v);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        return vars;
    }

    /// Evaluates at a point; values[v] is the value of variable v.
    template <class U>
    U eval(std::span<const U> values) const {
        U acc = zero_of<U>();
        for (const auto& [mono, c] : terms_) {
            U term = convert<U>(c);
            for (const auto& [v, e] : mono)
                for (std::uint32_t k = 0; k < e; ++k) term = term * values[v];
            acc = acc + term;
        }
        return acc;
    }

    /// Replaces each variable v by subs[v].
    CoordPolynomial substitute(std::span<const CoordPolynomial> subs) const {
        CoordPolynomial out;
        for (const auto& [mono, c] : terms_) {
            CoordPolynomial term(c);
            for (const auto& [v, e] : mono)
                for (std::uint32_t k = 0; k < e; ++k) term = term * subs[v];
            out += term;
        }
        return out;
    }

  private:
    template <class U>
    static U convert(const Rational& c) {
        if constexpr (std::is_same_v<U, Rational>)
            return c;
        else
            return U(c.get_d());
    }

    static Monomial multiply(const Monomial& a, const Monomial& b) {
        Monomial out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
                out.push_back(a[i++]);
            else if (i == a.size() || b[j].first < a[i].first)
                out.push_back(b[j++]);
            else {
                out.emplace_back(a[i].first, a[i].second + b[j].second);
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::map<Monomial, Rational> terms_;
};

template <>
struct ring_traits<CoordPolynomial> {
    static constexpr bool exact = true;
    static constexpr bool field = false;
    static CoordPolynomial zero() { return {}; }
    static CoordPolynomial one() { return CoordPolynomial(1L); }
    static bool is_zero(const CoordPolynomial& p) { return p.is_zero(); }
};

} // namespace matpoly

#endif // MATPOLY_COORD_POLYNOMIAL_HPP
