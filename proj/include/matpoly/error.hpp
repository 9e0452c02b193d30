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

#ifndef MATPOLY_ERROR_HPP
#define MATPOLY_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace matpoly {

enum class Errc {
    division_by_zero,
    both_zero,
    dimension_mismatch,
    index_out_of_range,
    not_exact,
    not_monic,
    degree_exceeded,
    non_dominant,
    corrupted_descriptor,
    ill_conditioned,
    polish_diverged,
    ambiguous_kernel,
    dependent_eigenvectors,
    divisor_residual,
    not_generic,
    chart_excluded,
    degenerate_inner_product,
    drift_exceeded,
    invalid_argument,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
    case Errc::division_by_zero: return "division-by-zero-polynomial";
    case Errc::both_zero: return "both-inputs-zero";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::not_exact: return "non-exact-field";
    case Errc::not_monic: return "non-monic";
    case Errc::degree_exceeded: return "degree-exceeded";
    case Errc::non_dominant: return "non-dominant";
    case Errc::corrupted_descriptor: return "corrupted-descriptor";
    case Errc::ill_conditioned: return "ill-conditioned";
    case Errc::polish_diverged: return "polish-diverged";
    case Errc::ambiguous_kernel: return "ambiguous-kernel";
    case Errc::dependent_eigenvectors: return "dependent-eigenvectors";
    case Errc::divisor_residual: return "divisor-residual";
    case Errc::not_generic: return "not-generic";
    case Errc::chart_excluded: return "chart-excluded";
    case Errc::degenerate_inner_product: return "inner-product-degenerate";
    case Errc::drift_exceeded: return "drift-exceeded";
    case Errc::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto a stable machine-readable kind.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }
    std::string_view kind() const noexcept { return errc_name(code_); }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace matpoly

#endif // MATPOLY_ERROR_HPP
