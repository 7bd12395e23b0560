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

#include "charvar/varieties.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "charvar/chebyshev.hpp"
#include "charvar/gcd.hpp"
#include "charvar/numeric.hpp"
#include "charvar/polynomial_json.hpp"

namespace charvar {

std::string_view factor_kind_name(FactorKind k) noexcept {
  switch (k) {
    case FactorKind::ReducibleSurface: return "ReducibleSurface";
    case FactorKind::ChebLinearFamily: return "ChebLinearFamily";
    case FactorKind::ExplicitIrreducible: return "ExplicitIrreducible";
  }
  return "?";
}

WordPolySource direct_word_source() {
  return [](long p, long m) {
    thread_local TraceEngine engine;
    return word_char_polys(p, m, engine);
  };
}

namespace {

const Polynomial X = var(Var::x);
const Polynomial Y = var(Var::y);
const Polynomial Z = var(Var::z);
const Polynomial T = var(Var::t);
const Polynomial W = var(Var::w);

FactorReport surface_factor() {
  FactorReport f;
  f.kind = FactorKind::ReducibleSurface;
  f.poly = gamma_poly() - Polynomial(2);
  f.univariate = T - Polynomial(2);
  f.inner = gamma_poly();
  f.components = 1;
  return f;
}

// Constant univariates contribute nothing and are folded into the sign.
std::optional<FactorReport> family_factor(const Polynomial& univariate, const Polynomial& inner) {
  if (univariate.is_constant()) return std::nullopt;
  FactorReport f;
  f.kind = FactorKind::ChebLinearFamily;
  f.univariate = normalize_sign(univariate);
  f.inner = inner;
  f.poly = substitute(*f.univariate, Var::t, inner);
  return f;
}

FactorReport explicit_factor(const Polynomial& poly, CertPtr cert) {
  FactorReport f;
  f.kind = FactorKind::ExplicitIrreducible;
  f.poly = poly;
  f.certificate = std::move(cert);
  f.components = 1;
  return f;
}

mpq_class eval_rational(const Polynomial& u, const mpq_class& at) {
  const auto coeffs = u.coefficients_in(Var::t);
  mpq_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * at + mpq_class(it->constant_value());
  return acc;
}

// lc(b) a - lc(a) b when it is a constant, i.e. a and b differ by an affine
// change of value.
std::optional<mpz_class> affine_gap(const Polynomial& a, const Polynomial& b) {
  const Polynomial d = a.scaled(b.leading_coefficient()) - b.scaled(a.leading_coefficient());
  if (!d.is_constant()) return std::nullopt;
  return d.constant_term();
}

// Empty when the two factors cut out different irreducible components.
std::optional<std::string> overlap(const FactorReport& a, const FactorReport& b) {
  const bool fa = a.kind == FactorKind::ChebLinearFamily;
  const bool fb = b.kind == FactorKind::ChebLinearFamily;
  if (!fa && !fb) {
    if (primitive_part(a.poly) == primitive_part(b.poly)) return "factors " + to_string(a.poly) + " are associates";
    return std::nullopt;
  }
  if (fa && fb) {
    if (*a.inner == *b.inner) {
      if (!coprime(*a.univariate, *b.univariate)) return "families over " + to_string(*a.inner) + " share a root";
      return std::nullopt;
    }
    if (affine_gap(*a.inner, *b.inner)) return "families over affinely related inner polynomials";
    return std::nullopt;
  }
  const FactorReport& fam = fa ? a : b;
  const FactorReport& ex = fa ? b : a;
  const auto gap = affine_gap(ex.poly, *fam.inner);
  if (!gap) return std::nullopt;
  // lc(I) P - lc(P) I = K means P is a multiple of I - delta, delta = -K / lc(P).
  const mpq_class delta = mpq_class(-*gap) / mpq_class(ex.poly.leading_coefficient());
  if (eval_rational(*fam.univariate, delta) == 0) return "explicit factor " + to_string(ex.poly) + " lies in the family";
  return std::nullopt;
}

void finish(ComponentReport& r, const Polynomial& full) {
  r.certificates_ok = true;
  r.component_count = 0;
  Polynomial product(1);
  for (auto& f : r.factors) {
    if (f.kind == FactorKind::ExplicitIrreducible) {
      f.check = f.certificate ? check_certificate(*f.certificate, f.poly) : CertCheck{false, "no certificate", {}};
    } else {
      f.check = check_family(*f.univariate, *f.inner);
      if (f.check.ok) {
        f.components = distinct_root_count(*f.univariate);
        if (f.components != f.univariate->total_degree()) {
          throw std::logic_error("repeated root in " + to_string(*f.univariate) + ": components would carry multiplicity");
        }
      }
    }
    if (!f.check.ok) r.certificates_ok = false;
    r.component_count += f.components;
    product *= pow(f.poly, f.multiplicity);
  }
  if (product == full) {
    r.sign = 1;
  } else if (-product == full) {
    r.sign = -1;
  } else {
    r.sign = 0;
  }
  r.product_check = r.sign != 0;
  r.distinct_check = true;
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    for (std::size_t j = i + 1; j < r.factors.size(); ++j) {
      if (auto why = overlap(r.factors[i], r.factors[j])) {
        r.distinct_check = false;
        r.notes.push_back(*why);
      }
    }
  }
}

Polynomial beta1() { return W * Y + Polynomial(2) - Z * Z; }

}  // namespace

std::vector<std::pair<std::string, long>> thm1_rows(long m, long n) {
  std::vector<std::pair<std::string, long>> rows;
  const bool generic = m != 0 && m != 1 && n != -1 && n != 0;
  if (m == 0 && n != -1) rows.emplace_back("m = 0", std::labs(n + 1));
  if (m >= 0 && n == 0) rows.emplace_back("m >= 0, n = 0", m + 1);
  if (m <= -1 && n == 0) rows.emplace_back("m <= -1, n = 0", -m);
  if (m == 1 && n != 2 && n != 3) rows.emplace_back("m = 1, n not in {2, 3}", 2);
  if (m == 1 && (n == 2 || n == 3)) rows.emplace_back("m = 1, n in {2, 3}", 3);
  if (n == -1) rows.emplace_back("n = -1", std::labs(m) + 1);
  if (generic) rows.emplace_back("m not in {0, 1}, n not in {-1, 0}", 2);
  return rows;
}

long thm1_expected_count(long m, long n) {
  const auto rows = thm1_rows(m, n);
  if (rows.empty()) throw std::logic_error("no table row covers (" + std::to_string(m) + ", " + std::to_string(n) + ")");
  for (const auto& [cond, count] : rows) {
    if (count != rows.front().second) {
      throw std::logic_error("table rows '" + rows.front().first + "' and '" + cond + "' disagree at (" +
                             std::to_string(m) + ", " + std::to_string(n) + ")");
    }
  }
  return rows.front().second;
}

Polynomial pretzel_R(long m) {
  const Polynomial b = pretzel_beta();
  return Y * cheb_diff_at(m, b) - (X * Z - Y) * cheb_diff_at(m - 1, b);
}

CertPtr pretzel_R_certificate(long m) {
  // w = xz - y, then z^2 -> t, then t -> wy + 2 - z leaves y D_m(z) - w D_{m-1}(z).
  const Polynomial b1 = beta1();
  const Polynomial R1 = Y * cheb_diff_at(m, b1) - W * cheb_diff_at(m - 1, b1);
  const Polynomial R2 = Y * cheb_diff(m) - W * cheb_diff(m - 1);
  const Polynomial R2z = substitute(R2, Var::t, Z);
  auto step3 = variable_change(Var::z, Var::t, W * Y + Polynomial(2) - T, R2z, Polynomial(1), linear_in(Var::y));
  auto step2 = square_obstruction(Var::z, Var::t, step3);
  return variable_change(Var::w, Var::x, X * Z - Y, R1, Polynomial(1), step2);
}

CertPtr pretzel_generic_certificate(long m, long n) {
  const Polynomial b1 = beta1();
  const Polynomial a1 = Y * cheb_at(m - 1, b1) - W * cheb_at(m - 2, b1);
  const Polynomial Q1 = W * cheb_at(n - 1, a1) - cheb_diff_at(m, b1) * cheb_at(n - 2, a1);

  const Polynomial sm1 = cheb_at(m - 1, Z);
  const Polynomial sm2 = cheb_at(m - 2, Z);
  const Polynomial a2 = Y * sm1 - W * sm2;
  const Polynomial Q2 = W * cheb_at(n - 1, a2) - cheb_diff_at(m, Z) * cheb_at(n - 2, a2);

  // x := alpha_2 frees w: Q3(alpha_2, y, z) = S_{m-2}(z) Q2.
  const Polynomial Q3 = (Y * sm1 - X) * cheb_at(n - 1, X) - sm2 * cheb_diff_at(m, Z) * cheb_at(n - 2, X);

  auto step4 = variable_change(Var::x, Var::w, a2, Q3, sm2, linear_in(Var::y));
  auto step3 = variable_change(Var::z, Var::t, W * Y + Polynomial(2) - T, Q2, Polynomial(1), step4);
  auto step2 = square_obstruction(Var::z, Var::t, step3);
  return variable_change(Var::w, Var::x, X * Z - Y, Q1, Polynomial(1), step2);
}

CertPtr thm2_certificate() {
  std::vector<std::pair<Var, Polynomial>> map{{Var::x, X + Y}, {Var::y, X - Y}};
  return linear_automorphism(std::move(map), square_obstruction(Var::y, Var::t, linear_in(Var::t)));
}

CertPtr thm3_certificate(long k) {
  if (k == 0) return linear_in(Var::z);
  std::vector<std::pair<Var, Polynomial>> map{{Var::x, X + Y}, {Var::y, X - Y}};
  auto inner = linear_automorphism(std::move(map), square_obstruction(Var::x, Var::t, linear_in(Var::t)));
  return specialization_slice(Var::x, Var::z, 2, inner);
}

ComponentReport count_components_pretzel(long m, long n) {
  ComponentReport r;
  r.link = Pretzel{m, n};
  const CharPoly cp = pretzel_char_poly(m, n);
  r.expected_count = thm1_expected_count(m, n);
  const Polynomial Q = cp.nonabelian.value_or(Polynomial{});
  const Polynomial b = pretzel_beta();

  if (cp.degenerate) {
    r.flags.push_back("character variety is C^3 (two-component unlink)");
    r.notes.push_back("Q vanishes identically; the whole trace space is one component");
    finish(r, Polynomial{});
    // The product of no factors is 1, while the formula gives 0 here.
    r.product_check = cp.full.is_zero();
    r.sign = 1;
    r.component_count = 1;
    return r;
  }

  r.factors.push_back(surface_factor());
  if (m == 0) {
    const long k = n >= 0 ? n : -(n + 2);
    if (auto f = family_factor(cheb(k), X * Z - Y)) r.factors.push_back(std::move(*f));
  } else if (n == 0) {
    if (auto f = family_factor(cheb_diff(m), b)) r.factors.push_back(std::move(*f));
  } else if (m == 1) {
    if (n == 2) {
      r.factors.push_back(explicit_factor(Z - Polynomial(1), degenerate_explicit("z - 1")));
      r.factors.push_back(explicit_factor(Z + Polynomial(1), degenerate_explicit("z + 1")));
    } else if (n == 3) {
      r.factors.push_back(explicit_factor(Z, degenerate_explicit("z")));
      r.factors.push_back(explicit_factor(Y * Z - X, linear_in(Var::x)));
    } else {
      r.factors.push_back(explicit_factor(Q, linear_in(Var::x)));
    }
  } else if (n == -1) {
    if (auto f = family_factor(cheb(m - 1), b)) r.factors.push_back(std::move(*f));
    r.factors.push_back(explicit_factor(pretzel_R(m), pretzel_R_certificate(m)));
  } else {
    r.factors.push_back(explicit_factor(Q, pretzel_generic_certificate(m, n)));
  }
  finish(r, cp.full);
  return r;
}

ComponentReport verify_thm2(long p, const WordPolySource& source) {
  const Polynomial Q = thm2_Q(p);  // validates p
  ComponentReport r;
  r.link = TwoBridge{p, 3};
  r.expected_count = 2;
  r.factors.push_back(surface_factor());
  r.factors.push_back(explicit_factor(Q, thm2_certificate()));
  const WordCharPolys word = source(p, 3);
  finish(r, word.standard);
  const Polynomial product = r.factors[0].poly * Q;
  const int conj = word.conjugate == product ? 1 : word.conjugate == -product ? -1 : 0;
  if (conj == 0) {
    r.product_check = false;
    r.notes.push_back("conjugate word form does not match the closed form");
  } else {
    r.notes.push_back("conjugate word form has sign " + std::to_string(conj));
  }
  return r;
}

ComponentReport verify_thm3(long k, const WordPolySource& source) {
  if (k < 0) throw std::invalid_argument("twisted Whitehead link needs k >= 0");
  const WhiteheadFactors wf = thm3_factors(k);
  ComponentReport r;
  r.link = TwistedWhitehead{k};
  r.expected_count = wf.odd ? wf.n + 1 : wf.n + 2;
  r.factors.push_back(surface_factor());
  if (auto f = family_factor(wf.cheb_univariate, gamma_poly())) r.factors.push_back(std::move(*f));
  r.factors.push_back(explicit_factor(wf.Q, thm3_certificate(k)));
  const TwoBridge tb = as_two_bridge(TwistedWhitehead{k});
  const WordCharPolys word = source(tb.p, tb.m);
  finish(r, word.standard);
  const Polynomial product = wf.reducible * wf.cheb_factor * wf.Q;
  if (word.conjugate != product && word.conjugate != -product) {
    r.product_check = false;
    r.notes.push_back("conjugate word form does not match the closed form");
  }
  r.notes.push_back(std::string(wf.odd ? "odd" : "even") + " case, n = " + std::to_string(wf.n));
  return r;
}

SurfaceCheck reducible_surface_check(int samples) {
  SurfaceCheck s;
  const Polynomial g2 = X * X + Y * Y + Z * Z - X * Y * Z - Polynomial(4);
  s.symbolic = g2 == gamma_poly() - Polynomial(2);
  s.min_abs_generic = INFINITY;
  for (int i = 0; i < samples; ++i) {
    const auto seed = static_cast<std::uint64_t>(i);
    s.max_abs_diagonal = std::max(s.max_abs_diagonal, std::abs(eval(g2, trace_coordinates(random_diagonal_rep(seed)))));
    s.min_abs_generic = std::min(s.min_abs_generic, std::abs(eval(g2, trace_coordinates(random_rep(seed)))));
  }
  s.ok = s.symbolic && s.max_abs_diagonal < 1e-10 && s.min_abs_generic > 1e-10;
  return s;
}

nlohmann::json to_json(const ComponentReport& r) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : r.factors) {
    nlohmann::json j{
        {"kind", factor_kind_name(f.kind)},
        {"polynomial", to_json(f.poly)},
        {"text", to_string(f.poly)},
        {"multiplicity", f.multiplicity},
        {"components", f.components},
        {"certificate_ok", f.check.ok},
        {"diagnostic", f.check.trail},
    };
    if (!f.check.failed.empty()) j["failed"] = f.check.failed;
    if (f.univariate) j["univariate"] = to_string(*f.univariate);
    if (f.inner) j["inner"] = to_string(*f.inner);
    if (f.certificate) j["certificate"] = to_json(*f.certificate);
    factors.push_back(std::move(j));
  }
  return {
      {"link", to_string(r.link)},
      {"sign", r.sign},
      {"factors", std::move(factors)},
      {"component_count", r.component_count},
      {"expected_count", r.expected_count},
      {"product_check", r.product_check},
      {"certificates_ok", r.certificates_ok},
      {"distinct_check", r.distinct_check},
      {"ok", r.ok()},
      {"flags", r.flags},
      {"notes", r.notes},
  };
}

std::string to_text(const ComponentReport& r) {
  std::ostringstream out;
  out << to_string(r.link) << ": " << r.component_count << " components (expected " << r.expected_count << ")\n";
  for (const auto& flag : r.flags) out << "  flag: " << flag << "\n";
  for (const auto& f : r.factors) {
    out << "  " << factor_kind_name(f.kind) << " " << to_string(f.poly);
    if (f.multiplicity != 1) out << " ^" << f.multiplicity;
    out << " -> " << f.components << (f.check.ok ? " [certified]" : " [FAILED: " + f.check.failed + "]") << "\n";
    for (const auto& line : f.check.trail) out << "      " << line << "\n";
  }
  out << "  sign " << r.sign << ", product " << (r.product_check ? "ok" : "MISMATCH") << ", certificates "
      << (r.certificates_ok ? "ok" : "FAILED") << ", distinct " << (r.distinct_check ? "ok" : "FAILED") << "\n";
  for (const auto& note : r.notes) out << "  note: " << note << "\n";
  return out.str();
}

}  // namespace charvar
