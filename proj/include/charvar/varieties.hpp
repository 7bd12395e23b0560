/*
 * Copyright 2026 The charvar Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CHARVAR_VARIETIES_HPP
#define CHARVAR_VARIETIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "charvar/certificate.hpp"
#include "charvar/links.hpp"

namespace charvar {

enum class FactorKind { ReducibleSurface, ChebLinearFamily, ExplicitIrreducible };

std::string_view factor_kind_name(FactorKind k) noexcept;

struct FactorReport {
  FactorKind kind = FactorKind::ExplicitIrreducible;
  /// Integer polynomial this factor contributes to the product check.
  Polynomial poly;
  /// ChebLinearFamily: poly = univariate(inner).
  std::optional<Polynomial> univariate;
  std::optional<Polynomial> inner;
  /// ExplicitIrreducible only.
  CertPtr certificate;
  int multiplicity = 1;
  long components = 0;
  CertCheck check;
};

struct ComponentReport {
  LinkSpec link;
  std::vector<FactorReport> factors;
  long component_count = 0;
  long expected_count = 0;
  /// sigma with sigma * prod(factors) == full; 0 when the product check fails.
  int sign = 0;
  bool product_check = false;
  bool certificates_ok = false;
  /// Factors are pairwise non-associate and families miss each other.
  bool distinct_check = false;
  std::vector<std::string> flags;
  std::vector<std::string> notes;

  bool ok() const {
    return product_check && certificates_ok && distinct_check && component_count == expected_count;
  }
};

/// Word-derived character polynomials for b(2p, m); see cache.hpp for an
/// on-disk variant.
using WordPolySource = std::function<WordCharPolys(long p, long m)>;
WordPolySource direct_word_source();

/// Rows of the pretzel component table that apply to (m, n), as
/// (condition, count) pairs.
std::vector<std::pair<std::string, long>> thm1_rows(long m, long n);
/// The common value of the applicable rows; std::logic_error if none apply
/// or two of them disagree.
long thm1_expected_count(long m, long n);

ComponentReport count_components_pretzel(long m, long n);
/// p > 3, p not divisible by 3; std::invalid_argument otherwise.
ComponentReport verify_thm2(long p, const WordPolySource& source = direct_word_source());
/// k >= 0; std::invalid_argument otherwise.
ComponentReport verify_thm3(long k, const WordPolySource& source = direct_word_source());

/// The certificate chain used for the generic pretzel case.
CertPtr pretzel_generic_certificate(long m, long n);
/// R = y D_m(beta) - (xz - y) D_{m-1}(beta), the cofactor of S_{m-1}(beta)
/// for n = -1, and its certificate chain. D_k = S_k - S_{k-1}.
Polynomial pretzel_R(long m);
CertPtr pretzel_R_certificate(long m);
CertPtr thm2_certificate();
CertPtr thm3_certificate(long k);

struct SurfaceCheck {
  bool symbolic = false;
  double max_abs_diagonal = 0;   // max |gamma - 2| over diagonal samples
  double min_abs_generic = 0;    // min |gamma - 2| over generic samples
  bool ok = false;
};

/// gamma - 2 == x^2 + y^2 + z^2 - xyz - 4 exactly, vanishes on diagonal
/// (abelian) samples and not on generic ones.
SurfaceCheck reducible_surface_check(int samples = 100);

nlohmann::json to_json(const ComponentReport& r);
std::string to_text(const ComponentReport& r);

}  // namespace charvar

#endif  // CHARVAR_VARIETIES_HPP
