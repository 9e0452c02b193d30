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

#ifndef MATPOLY_FIELD_HPP
#define MATPOLY_FIELD_HPP

#include <complex>
#include <concepts>
#include <string>

#include <gmpxx.h>

#include "error.hpp"

namespace matpoly {

/// Arbitrary-precision rational. mpq_class keeps values canonical (reduced,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Complex = std::complex<double>;

// Coefficient ring traits. `exact` marks the rings on which divisibility is
// decidable; `field` marks the ones with division.
template <class T>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr bool field = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
};

template <>
struct ring_traits<Complex> {
    static constexpr bool exact = false;
    static constexpr bool field = true;
    static Complex zero() { return {0.0, 0.0}; }
    static Complex one() { return {1.0, 0.0}; }
    static bool is_zero(const Complex& x) { return x == Complex{0.0, 0.0}; }
};

template <>
struct ring_traits<double> {
    static constexpr bool exact = false;
    static constexpr bool field = true;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool is_zero(double x) { return x == 0.0; }
};

template <class T>
concept Ring = requires(const T& a, const T& b) {
    { ring_traits<T>::zero() } -> std::convertible_to<T>;
    { ring_traits<T>::one() } -> std::convertible_to<T>;
    { ring_traits<T>::is_zero(a) } -> std::convertible_to<bool>;
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
};

template <class T>
concept Field = Ring<T> && ring_traits<T>::field;

template <class T>
concept ExactField = Field<T> && ring_traits<T>::exact;

template <Ring T>
inline T zero_of() {
    return ring_traits<T>::zero();
}
template <Ring T>
inline T one_of() {
    return ring_traits<T>::one();
}
template <Ring T>
inline bool is_zero(const T& x) {
    return ring_traits<T>::is_zero(x);
}

/// Parses "p/q" or "p" into a canonical rational. Rejects zero denominators.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        fail(Errc::invalid_argument, "malformed rational '" + text + "'");
    if (sgn(q.get_den()) == 0)
        fail(Errc::invalid_argument, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }
inline Complex to_complex(const Rational& q) { return {q.get_d(), 0.0}; }

} // namespace matpoly

#endif // MATPOLY_FIELD_HPP
