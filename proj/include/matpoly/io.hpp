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

#ifndef MATPOLY_IO_HPP
#define MATPOLY_IO_HPP

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "leaves.hpp"
#include "monic.hpp"

namespace matpoly::io {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input. `kind` is "parse", "field-mismatch" or
/// "usage"; `location` is a JSON pointer or flag name.
class InputError : public std::runtime_error {
  public:
    InputError(std::string kind, std::string message, std::string location = "")
        : std::runtime_error(std::move(message)), kind_(std::move(kind)), location_(std::move(location)) {}
    const std::string& kind() const noexcept { return kind_; }
    const std::string& location() const noexcept { return location_; }

  private:
    std::string kind_;
    std::string location_;
};

[[noreturn]] inline void parse_fail(const std::string& msg, const std::string& where) {
    throw InputError("parse", msg, where);
}

enum class Variable { z, z_inv };
enum class FieldKind { rational, complex };

/// A point of P_n or M_n. coeffs holds P_1 … P_n, or P_0 … P_n when the
/// leading coefficient is given explicitly. Either way the polynomial is
/// Σ_k P_k z^{n-k} ("z") or Σ_k P_k z^{-k} ("z_inv").
struct MatPolyDocument {
    std::size_t m = 0;
    std::size_t n = 0;
    Variable variable = Variable::z;
    FieldKind field = FieldKind::rational;
    bool explicit_leading = false;
    std::vector<Matrix<Rational>> rational;
    std::vector<Matrix<Complex>> complex;

    friend bool operator==(const MatPolyDocument&, const MatPolyDocument&) = default;
};

// ---- scalars ---------------------------------------------------------------

inline Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            parse_fail(std::string("bad rational: ") + e.what(), where);
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long>());
    parse_fail("expected a rational \"p/q\" string", where);
}

inline Complex complex_from_json(const Json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    parse_fail("expected a complex [re, im] pair", where);
}

inline Json to_json(const Rational& q) { return to_string(q); }
inline Json to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

template <class T>
Matrix<T> matrix_from_json(const Json& j, std::size_t m, const std::string& where) {
    if (!j.is_array() || j.size() != m) parse_fail("expected " + std::to_string(m) + " rows", where);
    Matrix<T> M(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::string row = where + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != m) parse_fail("expected " + std::to_string(m) + " columns", row);
        for (std::size_t k = 0; k < m; ++k) {
            const std::string cell = row + "/" + std::to_string(k);
            if constexpr (std::is_same_v<T, Rational>)
                M(i, k) = rational_from_json(j[i][k], cell);
            else
                M(i, k) = complex_from_json(j[i][k], cell);
        }
    }
    return M;
}

template <class T>
Json to_json(const Matrix<T>& M) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < M.cols(); ++k) row.push_back(to_json(M(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const Poly<Rational>& p) {
    Json c = Json::array();
    for (const auto& x : p.coeffs()) c.push_back(to_json(x));
    return Json{{"coeffs", std::move(c)}, {"text", to_string(p)}};
}

inline Json to_json(const Poly<Complex>& p) {
    Json c = Json::array();
    for (const auto& x : p.coeffs()) c.push_back(to_json(x));
    return Json{{"coeffs", std::move(c)}};
}

template <class T>
Json to_json(const MatPoly<T>& M) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < M.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < M.size(); ++k) row.push_back(to_json(M(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const std::pair<Complex, Complex>& xy) {
    return Json{{"x", to_json(xy.first)}, {"y", to_json(xy.second)}};
}

template <class T>
Json to_json(const std::vector<T>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

// ---- documents -------------------------------------------------------------

inline MatPolyDocument document_from_json(const Json& j) {
    if (!j.is_object()) parse_fail("document must be a JSON object", "");
    const auto size_field = [&](const char* key) -> std::size_t {
        if (!j.contains(key) || !j[key].is_number_unsigned()) parse_fail(std::string("missing or invalid '") + key + "'", std::string("/") + key);
        return j[key].get<std::size_t>();
    };
    MatPolyDocument d;
    d.m = size_field("m");
    d.n = size_field("n");
    if (d.m == 0) parse_fail("m must be positive", "/m");
    const std::string var = j.value("variable", "z");
    if (var == "z")
        d.variable = Variable::z;
    else if (var == "z_inv")
        d.variable = Variable::z_inv;
    else
        parse_fail("variable must be \"z\" or \"z_inv\"", "/variable");
    const std::string fld = j.value("field", "rational");
    if (fld == "rational")
        d.field = FieldKind::rational;
    else if (fld == "complex")
        d.field = FieldKind::complex;
    else
        parse_fail("field must be \"rational\" or \"complex\"", "/field");
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) parse_fail("missing 'coeffs' array", "/coeffs");
    const Json& c = j["coeffs"];
    if (c.size() == d.n + 1)
        d.explicit_leading = true;
    else if (c.size() != d.n)
        parse_fail("expected n or n+1 coefficient matrices", "/coeffs");
    for (std::size_t k = 0; k < c.size(); ++k) {
        const std::string where = "/coeffs/" + std::to_string(k);
        if (d.field == FieldKind::rational)
            d.rational.push_back(matrix_from_json<Rational>(c[k], d.m, where));
        else
            d.complex.push_back(matrix_from_json<Complex>(c[k], d.m, where));
    }
    return d;
}

inline MatPolyDocument parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        parse_fail(e.what(), "byte " + std::to_string(e.byte));
    }
    return document_from_json(j);
}

inline Json to_json(const MatPolyDocument& d) {
    Json j;
    j["m"] = d.m;
    j["n"] = d.n;
    j["variable"] = d.variable == Variable::z ? "z" : "z_inv";
    j["field"] = d.field == FieldKind::rational ? "rational" : "complex";
    j["coeffs"] = d.field == FieldKind::rational ? to_json(d.rational) : to_json(d.complex);
    return j;
}

template <class T>
MatPolyDocument make_document(const std::vector<Matrix<T>>& coeffs, std::size_t m, std::size_t n,
                              Variable var, bool explicit_leading = false) {
    MatPolyDocument d;
    d.m = m;
    d.n = n;
    d.variable = var;
    d.explicit_leading = explicit_leading;
    if constexpr (std::is_same_v<T, Rational>) {
        d.field = FieldKind::rational;
        d.rational = coeffs;
    } else {
        d.field = FieldKind::complex;
        d.complex = coeffs;
    }
    return d;
}

namespace detail {

template <class T>
std::vector<Matrix<T>> full_coefficients(const MatPolyDocument& d) {
    std::vector<Matrix<T>> c;
    if constexpr (std::is_same_v<T, Rational>) {
        if (d.field != FieldKind::rational)
            throw InputError("field-mismatch", "this command needs a rational document", "/field");
        c = d.rational;
    } else {
        if (d.field == FieldKind::complex) {
            c = d.complex;
        } else {
            for (const auto& M : d.rational) {
                Matrix<Complex> C(d.m);
                for (std::size_t i = 0; i < d.m; ++i)
                    for (std::size_t k = 0; k < d.m; ++k) C(i, k) = to_complex(M(i, k));
                c.push_back(std::move(C));
            }
        }
    }
    if (!d.explicit_leading) c.insert(c.begin(), Matrix<T>::identity(d.m));
    return c;
}

} // namespace detail

/// Σ_k P_k z^{n-k}. For "z_inv" documents this is z^n·P(z).
template <class T>
MatPoly<T> to_matpoly(const MatPolyDocument& d) {
    auto c = detail::full_coefficients<T>(d);
    std::vector<Matrix<T>> asc(c.rbegin(), c.rend());
    return MatPoly<T>::from_coefficients(asc);
}

/// The point I + Σ_k P_k z^{-k} of M_n; requires P_0 = I.
template <class T>
MonicZinv<T> to_point(const MatPolyDocument& d) {
    auto c = detail::full_coefficients<T>(d);
    if (!(c.front() == Matrix<T>::identity(d.m)))
        fail(Errc::not_monic, "leading coefficient is not the identity");
    c.erase(c.begin());
    return MonicZinv<T>(d.m, std::move(c));
}

// ---- results ---------------------------------------------------------------

inline Json to_json(const LeafDescriptor& S) {
    Json j;
    j["m"] = S.m;
    j["n"] = S.n;
    Json inv = Json::array();
    for (const auto& d : S.invariants) inv.push_back(to_string(d));
    j["invariants"] = std::move(inv);
    j["invariant_polynomials"] = to_json(S.invariants);
    j["type"] = S.type_alpha;
    j["dimension"] = S.dimension;
    j["determinant"] = to_json(S.determinant);
    return j;
}

} // namespace matpoly::io

#endif // MATPOLY_IO_HPP
