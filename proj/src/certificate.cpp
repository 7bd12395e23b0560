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

#include "charvar/certificate.hpp"

#include <stdexcept>

#include "charvar/chebyshev.hpp"
#include "charvar/gcd.hpp"

namespace charvar {

std::string_view cert_kind_name(CertKind k) noexcept {
  switch (k) {
    case CertKind::LinearInVariable: return "LinearInVariable";
    case CertKind::SquareObstruction: return "SquareObstruction";
    case CertKind::VariableChange: return "VariableChange";
    case CertKind::LinearAutomorphism: return "LinearAutomorphism";
    case CertKind::SpecializationSlice: return "SpecializationSlice";
    case CertKind::DegenerateExplicit: return "DegenerateExplicit";
  }
  return "?";
}

namespace {

std::shared_ptr<Certificate> make(CertKind kind) {
  auto c = std::make_shared<Certificate>();
  c->kind = kind;
  return c;
}

}  // namespace

CertPtr linear_in(Var v) {
  auto c = make(CertKind::LinearInVariable);
  c->var = v;
  return c;
}

CertPtr square_obstruction(Var v, Var fresh, CertPtr inner) {
  auto c = make(CertKind::SquareObstruction);
  c->var = v;
  c->aux = fresh;
  c->inner = std::move(inner);
  return c;
}

CertPtr variable_change(Var slot, Var eliminated, Polynomial image, Polynomial target, Polynomial multiplier,
                        CertPtr inner) {
  auto c = make(CertKind::VariableChange);
  c->var = slot;
  c->aux = eliminated;
  c->image = std::move(image);
  c->target = std::move(target);
  c->multiplier = std::move(multiplier);
  c->inner = std::move(inner);
  return c;
}

CertPtr linear_automorphism(std::vector<std::pair<Var, Polynomial>> map, CertPtr inner) {
  auto c = make(CertKind::LinearAutomorphism);
  c->map = std::move(map);
  c->inner = std::move(inner);
  return c;
}

CertPtr specialization_slice(Var lead, Var slice, const mpz_class& value, CertPtr inner) {
  auto c = make(CertKind::SpecializationSlice);
  c->var = lead;
  c->aux = slice;
  c->value = value;
  c->inner = std::move(inner);
  return c;
}

CertPtr degenerate_explicit(std::string note) {
  auto c = make(CertKind::DegenerateExplicit);
  c->note = std::move(note);
  return c;
}

namespace {

std::string vn(Var v) { return std::string(var_name(v)); }

CertCheck fail(CertCheck r, std::string what) {
  r.ok = false;
  r.trail.push_back("FAILED: " + what);
  r.failed = std::move(what);
  return r;
}

CertCheck pass(std::string line) {
  CertCheck r;
  r.ok = true;
  r.trail.push_back(std::move(line));
  return r;
}

CertCheck then(std::string line, const Certificate* inner, const Polynomial& next) {
  CertCheck r;
  r.trail.push_back(std::move(line));
  if (!inner) return fail(std::move(r), "missing inner certificate");
  CertCheck rest = check_certificate(*inner, next);
  r.ok = rest.ok;
  r.failed = std::move(rest.failed);
  for (auto& l : rest.trail) r.trail.push_back(std::move(l));
  return r;
}

// m == lambda * c^k for a nonzero integer lambda and k >= 0.
bool is_power_multiple(Polynomial m, const Polynomial& c) {
  if (m.is_zero()) return false;
  if (!c.is_constant()) {
    while (!m.is_constant()) {
      auto q = try_divide(m, c);
      if (!q) return false;
      m = std::move(*q);
    }
  }
  return m.is_constant();
}

// Fraction-free Gaussian elimination.
mpz_class determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

CertCheck check_linear(const Certificate& c, const Polynomial& p) {
  const std::string head = "linear in " + vn(c.var);
  const int d = p.degree_in(c.var);
  if (d != 1) return fail({}, head + ": degree is " + (d == kMinusInfinity ? "-inf" : std::to_string(d)) + ", not 1");
  const Polynomial f = p.coeff_in(c.var, 1);
  const Polynomial g = p.coeff_in(c.var, 0);
  const Polynomial h = gcd(f, g);
  if (!h.is_constant()) return fail({}, head + ": gcd of coefficients is " + to_string(h));
  return pass(head + ": coefficient " + to_string(f) + " coprime to the rest");
}

CertCheck check_square(const Certificate& c, const Polynomial& p) {
  const Var v = c.var;
  const Var s = c.aux;
  const std::string head = "square obstruction in " + vn(v) + " (" + vn(v) + "^2 -> " + vn(s) + ")";
  if (v == s) return fail({}, head + ": descent variable must differ");
  if (p.depends_on(s)) return fail({}, head + ": polynomial already mentions " + vn(s));
  if (!p.depends_on(v)) return then(head + ": free of " + vn(v) + ", descent is a renaming", c.inner.get(), p);
  std::vector<Term> descended;
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono[v];
    if (e % 2 != 0) return fail({}, head + ": odd power of " + vn(v));
    descended.push_back({t.mono.with(v, 0).with(s, e / 2), t.coeff});
  }
  const Polynomial next = Polynomial::from_terms(std::move(descended));

  const Polynomial slice = specialize(p, v, 0);
  std::string reason;
  if (!is_square_up_to_constant(slice)) {
    reason = vn(v) + " = 0 slice " + to_string(slice) + " is not a constant times a square";
  } else {
    const Polynomial lc = p.coeff_in(v, static_cast<unsigned>(p.degree_in(v)));
    if (!is_square_up_to_constant(lc)) {
      reason = "leading coefficient " + to_string(lc) + " is not a constant times a square";
    } else {
      return fail({}, head + ": both the " + vn(v) + " = 0 slice and the leading coefficient are squares");
    }
  }
  return then(head + ": " + reason, c.inner.get(), next);
}

CertCheck check_change(const Certificate& c, const Polynomial& p) {
  const Var slot = c.var;
  const Var old = c.aux;
  const std::string head = "variable change " + vn(slot) + " := " + to_string(c.image);
  if (slot == old) return fail({}, head + ": slot and eliminated variable coincide");
  if (p.depends_on(slot)) return fail({}, head + ": polynomial already mentions " + vn(slot));
  if (c.target.depends_on(old)) return fail({}, head + ": transformed polynomial still mentions " + vn(old));
  if (c.image.depends_on(slot) || c.image.degree_in(old) != 1) {
    return fail({}, head + ": image must be of degree 1 in " + vn(old) + " and free of " + vn(slot));
  }
  const Polynomial coeff = c.image.coeff_in(old, 1);
  if (!is_power_multiple(c.multiplier, coeff)) {
    return fail({}, head + ": multiplier " + to_string(c.multiplier) + " is not a unit after inverting " + to_string(coeff));
  }
  if (substitute(c.target, slot, c.image) != c.multiplier * p) {
    return fail({}, head + ": transformed polynomial does not pull back to the original");
  }
  if (!coprime(coeff, p)) return fail({}, head + ": " + to_string(coeff) + " divides into the original");
  if (!coprime(coeff, c.target)) return fail({}, head + ": " + to_string(coeff) + " divides into the transformed polynomial");
  return then(head + " (coefficient " + to_string(coeff) + " coprime to both sides)", c.inner.get(), c.target);
}

CertCheck check_automorphism(const Certificate& c, const Polynomial& p) {
  std::string head = "linear automorphism";
  for (const auto& [v, img] : c.map) head += " " + vn(v) + " -> " + to_string(img) + ";";
  head.pop_back();
  const std::size_t n = c.map.size();
  if (n == 0) return fail({}, head + ": empty map");
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial& img = c.map[i].second;
    if (img.total_degree() > 1) return fail({}, head + ": image is not affine");
    for (Var u : kAllVars) {
      bool in_domain = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (c.map[j].first != u) continue;
        in_domain = true;
        m[i][j] = img.coeff_in(u, 1).constant_term();
      }
      if (!in_domain && img.depends_on(u)) return fail({}, head + ": image mentions " + vn(u) + " outside the domain");
    }
  }
  const mpz_class det = determinant(m);
  if (det == 0) return fail({}, head + ": singular linear part");
  return then(head + " (determinant " + det.get_str() + ")", c.inner.get(), substitute(p, c.map));
}

CertCheck check_slice(const Certificate& c, const Polynomial& p) {
  const Var x = c.var;
  const Var v = c.aux;
  const std::string head = "slice " + vn(v) + " = " + c.value.get_str() + " keeping " + vn(x) + "-degree";
  const int d = p.degree_in(x);
  if (d < 1) return fail({}, head + ": polynomial is free of " + vn(x));
  const Polynomial lc = p.coeff_in(x, static_cast<unsigned>(d));
  std::string why;
  if (lc.is_constant()) {
    why = "leading coefficient is constant";
  } else {
    if (lc.size() != 1 || lc.leading_term().mono != Monomial::of(v)) {
      return fail({}, head + ": leading coefficient " + to_string(lc) + " is neither constant nor a multiple of " + vn(v));
    }
    if (c.value == 0) return fail({}, head + ": slice value must be nonzero");
    if (specialize(p, v, 0).is_zero()) return fail({}, head + ": " + vn(v) + " divides the polynomial");
    why = "leading coefficient " + to_string(lc) + ", " + vn(v) + " not a factor";
  }
  const Polynomial next = specialize(p, v, c.value);
  if (next.degree_in(x) != d) return fail({}, head + ": slice drops the " + vn(x) + "-degree");
  return then(head + ": " + why, c.inner.get(), next);
}

}  // namespace

CertCheck check_certificate(const Certificate& cert, const Polynomial& p) {
  switch (cert.kind) {
    case CertKind::LinearInVariable: return check_linear(cert, p);
    case CertKind::SquareObstruction: return check_square(cert, p);
    case CertKind::VariableChange: return check_change(cert, p);
    case CertKind::LinearAutomorphism: return check_automorphism(cert, p);
    case CertKind::SpecializationSlice: return check_slice(cert, p);
    case CertKind::DegenerateExplicit:
      if (p.total_degree() != 1) return fail({}, "explicit (" + cert.note + "): total degree is not 1");
      return pass("explicit (" + cert.note + "): total degree 1");
  }
  return fail({}, "unknown certificate kind");
}

namespace {

// inner - delta irreducible for every delta, by one of three patterns.
std::optional<std::string> family_pattern(const Polynomial& inner) {
  for (Var v : kAllVars) {
    if (inner.degree_in(v) != 1) continue;
    const Polynomial f = inner.coeff_in(v, 1);
    const Polynomial g = inner.coeff_in(v, 0);
    if (f.is_constant()) return "linear in " + vn(v) + " with constant coefficient";
    if (f.size() != 1) continue;
    // f is a monomial: gcd(f, g - delta) = 1 iff no variable of f divides
    // g - delta, which holds for all delta when every slice is nonconstant.
    bool all = true;
    for (Var u : kAllVars) {
      if (f.depends_on(u) && specialize(g, u, 0).is_constant()) all = false;
    }
    if (all) return "linear in " + vn(v) + " with monomial coefficient " + to_string(f) + " and nonconstant slices";
  }
  for (Var v : kAllVars) {
    if (inner.degree_in(v) != 2) continue;
    const Polynomial a = inner.coeff_in(v, 2);
    if (!a.is_constant()) continue;
    const Polynomial b = inner.coeff_in(v, 1);
    const Polynomial e = inner.coeff_in(v, 0);
    // delta only moves the constant term of the discriminant
    const Polynomial disc = b * b - (a * e).scaled(4);
    for (Var u : kAllVars) {
      const int d = disc.degree_in(u);
      if (d < 1) continue;
      const Polynomial lc = disc.coeff_in(u, static_cast<unsigned>(d));
      if (!is_square_up_to_constant(lc)) {
        return "quadratic in " + vn(v) + ", discriminant has leading " + vn(u) + "-coefficient " + to_string(lc);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CertCheck check_family(const Polynomial& univariate, const Polynomial& inner) {
  CertCheck r;
  for (Var v : {Var::x, Var::y, Var::z, Var::w}) {
    if (univariate.depends_on(v)) return fail(std::move(r), "univariate factor must be a polynomial in t");
  }
  if (univariate.is_zero()) return fail(std::move(r), "univariate factor is zero");
  if (inner.is_constant() || inner.depends_on(Var::t)) return fail(std::move(r), "inner polynomial must be nonconstant and free of t");
  const long roots = distinct_root_count(univariate);
  const int degree = univariate.is_constant() ? 0 : univariate.degree_in(Var::t);
  if (roots != degree) return fail(std::move(r), "univariate factor " + to_string(univariate) + " has repeated roots");
  r.trail.push_back("univariate " + to_string(univariate) + ": " + std::to_string(roots) + " distinct roots");
  auto why = family_pattern(inner);
  if (!why) return fail(std::move(r), "no certificate pattern shows " + to_string(inner) + " - delta irreducible");
  r.trail.push_back(to_string(inner) + " - delta irreducible for all delta: " + *why);
  r.ok = true;
  return r;
}

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json j{{"kind", std::string(cert_kind_name(cert.kind))}};
  switch (cert.kind) {
    case CertKind::LinearInVariable:
      j["variable"] = vn(cert.var);
      break;
    case CertKind::SquareObstruction:
      j["variable"] = vn(cert.var);
      j["descent_variable"] = vn(cert.aux);
      break;
    case CertKind::VariableChange:
      j["slot"] = vn(cert.var);
      j["eliminated"] = vn(cert.aux);
      j["image"] = to_string(cert.image);
      j["target"] = to_string(cert.target);
      j["multiplier"] = to_string(cert.multiplier);
      break;
    case CertKind::LinearAutomorphism: {
      nlohmann::json m = nlohmann::json::object();
      for (const auto& [v, img] : cert.map) m[vn(v)] = to_string(img);
      j["map"] = std::move(m);
      break;
    }
    case CertKind::SpecializationSlice:
      j["lead_variable"] = vn(cert.var);
      j["slice_variable"] = vn(cert.aux);
      j["value"] = cert.value.get_str();
      break;
    case CertKind::DegenerateExplicit:
      j["note"] = cert.note;
      break;
  }
  if (cert.inner) j["inner"] = to_json(*cert.inner);
  return j;
}

}  // namespace charvar
