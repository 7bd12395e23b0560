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

#ifndef CHARVAR_CERTIFICATE_HPP
#define CHARVAR_CERTIFICATE_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "charvar/polynomial.hpp"

namespace charvar {

// Irreducibility certificates over C. Each step either closes the proof or
// reduces it to an inner certificate about a related polynomial:
//
//   LinearInVariable(v)     P = f v + g, f != 0, gcd(f, g) = 1.
//   SquareObstruction(v, s) P is even in v and P(v^2 -> s) is certified.
//                           Then P = c (g + v f)(g - v f) is the only way
//                           P can split, which forces both P|v=0 and the
//                           leading v-coefficient to be a constant times a
//                           square; one of them is shown not to be.
//   VariableChange          s := c o + d with c, d free of o, and
//                           P_new(s) = mu P with mu = lambda c^k; both P and
//                           P_new coprime to c. Irreducibility survives the
//                           localization at c in both directions.
//   LinearAutomorphism      P_new = P(phi) for an invertible affine phi.
//   SpecializationSlice     lc_x(P) is a constant or lambda v with v not
//                           dividing P, so any splitting keeps positive
//                           x-degree in both factors at v = v0 != 0.
//   DegenerateExplicit      total degree 1.
enum class CertKind {
  LinearInVariable,
  SquareObstruction,
  VariableChange,
  LinearAutomorphism,
  SpecializationSlice,
  DegenerateExplicit,
};

std::string_view cert_kind_name(CertKind k) noexcept;

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

struct Certificate {
  CertKind kind = CertKind::LinearInVariable;
  Var var = Var::x;           // linear/descent/slot/lead variable
  Var aux = Var::t;           // fresh descent variable, eliminated variable, slice variable
  Polynomial image;           // VariableChange: slot := image
  Polynomial target;          // VariableChange: the transformed polynomial
  Polynomial multiplier{1};   // VariableChange
  std::vector<std::pair<Var, Polynomial>> map;  // LinearAutomorphism
  mpz_class value;            // SpecializationSlice
  std::string note;
  CertPtr inner;
};

CertPtr linear_in(Var v);
CertPtr square_obstruction(Var v, Var fresh, CertPtr inner);
CertPtr variable_change(Var slot, Var eliminated, Polynomial image, Polynomial target, Polynomial multiplier,
                        CertPtr inner);
CertPtr linear_automorphism(std::vector<std::pair<Var, Polynomial>> map, CertPtr inner);
CertPtr specialization_slice(Var lead, Var slice, const mpz_class& value, CertPtr inner);
CertPtr degenerate_explicit(std::string note);

struct CertCheck {
  bool ok = false;
  /// Name of the sub-check that failed, empty on success.
  std::string failed;
  /// One line per step, outermost first.
  std::vector<std::string> trail;
};

/// Runs every mechanical check of the chain against p.
CertCheck check_certificate(const Certificate& cert, const Polynomial& p);

/// Checks that inner - delta is irreducible for every complex delta and that
/// the univariate polynomial has no repeated roots, so that u(inner) splits
/// into distinct_root_count(u) distinct irreducible surfaces.
CertCheck check_family(const Polynomial& univariate, const Polynomial& inner);

nlohmann::json to_json(const Certificate& cert);

}  // namespace charvar

#endif  // CHARVAR_CERTIFICATE_HPP
