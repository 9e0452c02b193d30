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

#ifndef MATPOLY_POLY_HPP
#define MATPOLY_POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace matpoly {

/// Polynomial degree with a distinguished value for the zero polynomial that
/// compares below every finite degree.
class Degree {
  public:
    constexpr explicit Degree(std::int64_t d) : value_(d) {}

    static constexpr Degree neg_inf() { return Degree(kNegInf, 0); }

    constexpr bool is_neg_inf() const noexcept { return value_ == kNegInf; }

    /// Finite value; the caller must have ruled out the zero polynomial.
    constexpr std::int64_t value() const {
        if (is_neg_inf()) fail(Errc::invalid_argument, "degree of zero polynomial");
        return value_;
    }

    constexpr auto operator<=>(const Degree&) const = default;

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
        return Degree(a.value_ + b.value_);
    }

  private:
    static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
    constexpr Degree(std::int64_t d, int) : value_(d) {}
    std::int64_t value_;
};

/// Dense univariate polynomial in z with coefficients indexed by ascending
/// degree. Trailing zeros are always stripped, so the zero polynomial is the
/// empty coefficient list.
template <Ring T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(T c) { return Poly(std::vector<T>{std::move(c)}); }

    /// c·z^k
    static Poly monomial(T c, std::size_t k) {
        std::vector<T> v(k + 1, zero_of<T>());
        v[k] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly z() { return monomial(one_of<T>(), 1); }
    static Poly one() { return constant(one_of<T>()); }

    bool is_zero() const noexcept { return c_.empty(); }

    Degree degree() const {
        return c_.empty() ? Degree::neg_inf()
                          : Degree(static_cast<std::int64_t>(c_.size()) - 1);
    }

    /// Number of stored coefficients, i.e. degree + 1 (0 for the zero poly).
    std::size_t size() const noexcept { return c_.size(); }

    const std::vector<T>& coeffs() const noexcept { return c_; }

    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : zero_of<T>(); }

    const T& leading() const {
        if (c_.empty()) fail(Errc::invalid_argument, "leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && leading() == one_of<T>(); }

    /// Horner evaluation; U may be any ring the coefficients embed into.
    T operator()(const T& x) const {
        T acc = zero_of<T>();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1, zero_of<T>());
        for (std::size_t k = 1; k < c_.size(); ++k)
            d[k - 1] = c_[k] * T(static_cast<long>(k));
        return Poly(std::move(d));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_of<T>());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_of<T>());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const T& s) {
        for (auto& x : c_) x = x * s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly() - a; }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, const Poly& a) {
        std::vector<T> v(a.c_.size(), zero_of<T>());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = s * a.c_[k];
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> v(a.c_.size() + b.c_.size() - 1, zero_of<T>());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (matpoly::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  private:
    void trim() {
        while (!c_.empty() && matpoly::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

template <Field T>
struct DivMod {
    Poly<T> quotient;
    Poly<T> remainder;
};

/// Euclidean division a = q·b + r with deg r < deg b.
template <Field T>
DivMod<T> divmod(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
    std::vector<T> r = a.coeffs();
    const std::size_t db = b.size() - 1;
    if (r.size() < b.size()) return {Poly<T>(), a};
    std::vector<T> q(r.size() - db, zero_of<T>());
    const T lead = b.leading();
    for (std::size_t k = r.size(); k-- > db;) {
        if (is_zero(r[k])) continue;
        T f = r[k] / lead;
        q[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * b.coeff(j);
    }
    r.resize(db);
    return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

/// True when b divides a exactly. Zero is divisible by everything, and only
/// zero is divisible by zero.
template <ExactField T>
bool divides(const Poly<T>& b, const Poly<T>& a) {
    if (b.is_zero()) return a.is_zero();
    return divmod(a, b).remainder.is_zero();
}

/// Divides out the leading coefficient; the zero polynomial is left as is.
template <Field T>
Poly<T> monic(const Poly<T>& p) {
    if (p.is_zero()) return p;
    T inv = one_of<T>() / p.leading();
    return p * inv;
}

/// Monic greatest common divisor.
template <ExactField T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    if (a.is_zero() && b.is_zero())
        fail(Errc::both_zero, "gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly<T> r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Exact quotient; throws if the division leaves a remainder.
template <ExactField T>
Poly<T> exact_quotient(const Poly<T>& a, const Poly<T>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(Errc::corrupted_descriptor, "division is not exact");
    return q;
}

namespace detail {

inline std::string coeff_text(const Rational& c) { return c.get_str(); }
inline std::string coeff_text(const Complex& c) {
    std::ostringstream os;
    os.precision(17);
    if (c.imag() == 0.0)
        os << c.real();
    else
        os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    return os.str();
}

inline bool negative(const Rational& c) { return sgn(c) < 0; }
inline bool negative(const Complex& c) { return c.imag() == 0.0 && c.real() < 0.0; }

} // namespace detail

/// Human-readable form such as "z^3 - z^2 + 1/2*z - 3".
template <Field T>
std::string to_string(const Poly<T>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        T c = p.coeff(k);
        if (is_zero(c)) continue;
        bool neg = detail::negative(c);
        if (neg) c = zero_of<T>() - c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const bool unit = c == one_of<T>();
        if (k == 0) {
            out += detail::coeff_text(c);
        } else {
            if (!unit) out += detail::coeff_text(c) + "*";
            out += "z";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace matpoly

#endif // MATPOLY_POLY_HPP
