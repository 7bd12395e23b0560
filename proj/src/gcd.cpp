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

#include "charvar/gcd.hpp"

#include <map>
#include <stdexcept>

namespace charvar {

namespace {

// r - c*m*d, all inputs sorted descending.
std::vector<Term> subtract_shifted(const std::vector<Term>& r, const Polynomial& d, Monomial m, const mpz_class& c) {
  std::vector<Term> out;
  out.reserve(r.size() + d.size());
  auto i = r.begin();
  auto dt = d.terms();
  auto j = dt.begin();
  mpz_class prod;
  while (i != r.end() && j != dt.end()) {
    const Monomial mj = j->mono * m;
    if (i->mono > mj) {
      out.push_back(*i++);
    } else if (mj > i->mono) {
      prod = -c * j->coeff;
      out.push_back({mj, prod});
      ++j;
    } else {
      prod = i->coeff - c * j->coeff;
      if (prod != 0) out.push_back({mj, prod});
      ++i;
      ++j;
    }
  }
  for (; i != r.end(); ++i) out.push_back(*i);
  for (; j != dt.end(); ++j) out.push_back({j->mono * m, -c * j->coeff});
  return out;
}

std::optional<Var> main_variable(const Polynomial& p, const Polynomial& q) {
  for (Var v : kAllVars) {
    if (p.depends_on(v) || q.depends_on(v)) return v;
  }
  return std::nullopt;
}

using VarMask = unsigned;

VarMask variables_of(const Polynomial& p) {
  VarMask m = 0;
  const Exponents e = p.max_exponents();
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (e[i] != 0) m |= 1u << i;
  }
  return m;
}

// Coefficients of p as a polynomial in the variables outside keep.
std::vector<Polynomial> coefficients_outside(const Polynomial& p, VarMask keep) {
  std::map<std::uint64_t, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    Exponents inner = t.mono.exponents();
    Exponents outer{};
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if ((keep >> i & 1u) == 0) std::swap(inner[i], outer[i]);
    }
    groups[Monomial::from_exponents(outer).bits()].push_back({Monomial::from_exponents(inner), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(groups.size());
  for (auto& [key, terms] : groups) out.push_back(Polynomial::from_terms(std::move(terms)));
  return out;
}

// Univariate view over the ring of the remaining variables.
using UPoly = std::vector<Polynomial>;

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int degree(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const int db = degree(b);
  const Polynomial& lcb = b.back();
  int e = degree(a) - db + 1;
  while (!a.empty() && degree(a) >= db) {
    const Polynomial lr = a.back();
    const int s = degree(a) - db;
    for (auto& c : a) c = c * lcb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + s)] -= lr * b[static_cast<std::size_t>(j)];
    trim(a);
    --e;
  }
  if (e > 0) {
    const Polynomial f = pow(lcb, e);
    for (auto& c : a) c = c * f;
  }
  return a;
}

UPoly primitive_in(const UPoly& u, Polynomial* content_out = nullptr) {
  Polynomial c;
  for (const auto& k : u) {
    if (k.is_zero()) continue;
    c = gcd(c, k);
    if (c == Polynomial(1)) break;
  }
  if (content_out) *content_out = c;
  UPoly out;
  out.reserve(u.size());
  for (const auto& k : u) out.push_back(exact_divide(k, c));
  return out;
}

// gcd of two polynomials that are primitive in v and both depend on v.
UPoly subresultant_gcd(UPoly a, UPoly b) {
  if (degree(a) < degree(b)) std::swap(a, b);
  Polynomial g(1);
  Polynomial h(1);
  for (;;) {
    const int delta = degree(a) - degree(b);
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) return UPoly{Polynomial(1)};
    const Polynomial divisor = g * pow(h, delta);
    for (auto& c : r) c = exact_divide(c, divisor);
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_divide(pow(g, delta), pow(h, delta - 1));
    }
  }
  return primitive_in(b);
}

}  // namespace

mpz_class integer_content(const Polynomial& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial normalize_sign(const Polynomial& p) {
  if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
  return p;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  const mpz_class c = integer_content(p);
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  const bool flip = p.leading_coefficient() < 0;
  for (auto& t : terms) {
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    if (flip) t.coeff = -t.coeff;
  }
  return Polynomial::from_sorted_terms(std::move(terms));
}

std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return Polynomial{};
  const Exponents ep = p.max_exponents();
  const Exponents ed = d.max_exponents();
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (ed[i] > ep[i]) return std::nullopt;
  }
  const Monomial lm = d.leading_term().mono;
  const mpz_class& lc = d.leading_coefficient();

  if (d.size() == 1) {
    std::vector<Term> q;
    q.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (!lm.divides(t.mono) || !mpz_divisible_p(t.coeff.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
      mpz_class c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), lc.get_mpz_t());
      q.push_back({t.mono / lm, std::move(c)});
    }
    return Polynomial::from_sorted_terms(std::move(q));
  }

  std::vector<Term> r(p.terms().begin(), p.terms().end());
  std::vector<Term> q;
  while (!r.empty()) {
    const Term& lt = r.front();
    if (!lm.divides(lt.mono) || !mpz_divisible_p(lt.coeff.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), lt.coeff.get_mpz_t(), lc.get_mpz_t());
    const Monomial m = lt.mono / lm;
    r = subtract_shifted(r, d, m, c);
    q.push_back({m, std::move(c)});
  }
  return Polynomial::from_sorted_terms(std::move(q));
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
  auto q = try_divide(p, d);
  if (!q) throw std::domain_error("inexact polynomial division");
  return std::move(*q);
}

Polynomial content_in(const Polynomial& p, Var v) {
  Polynomial c;
  for (const auto& k : p.coefficients_in(v)) {
    if (k.is_zero()) continue;
    c = gcd(c, k);
    if (c == Polynomial(1)) break;
  }
  return c;
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return normalize_sign(q);
  if (q.is_zero()) return normalize_sign(p);
  if (p.is_constant() || q.is_constant()) {
    mpz_class g;
    const mpz_class a = integer_content(p);
    const mpz_class b = integer_content(q);
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return Polynomial(g);
  }
  // A common factor lives in the smaller variable set, so it divides every
  // coefficient of the larger polynomial over the extra variables.
  const VarMask mp = variables_of(p);
  const VarMask mq = variables_of(q);
  if (mp != mq && (mp & mq) == mp) {
    Polynomial g = p;
    for (const auto& c : coefficients_outside(q, mp)) {
      g = gcd(g, c);
      if (g == Polynomial(1)) break;
    }
    return g;
  }
  if (mp != mq && (mp & mq) == mq) return gcd(q, p);

  const Var v = *main_variable(p, q);
  const bool in_p = p.depends_on(v);
  const bool in_q = q.depends_on(v);
  if (!in_p) return gcd(p, content_in(q, v));
  if (!in_q) return gcd(content_in(p, v), q);

  Polynomial cp;
  Polynomial cq;
  UPoly up = primitive_in(p.coefficients_in(v), &cp);
  UPoly uq = primitive_in(q.coefficients_in(v), &cq);
  const Polynomial c = gcd(cp, cq);
  const UPoly g = subresultant_gcd(std::move(up), std::move(uq));
  return normalize_sign(c * Polynomial::from_coefficients(v, g));
}

bool coprime(const Polynomial& p, const Polynomial& q) {
  const Polynomial g = gcd(p, q);
  return !g.is_zero() && g.is_constant();
}

std::optional<Polynomial> is_perfect_square(const Polynomial& p) {
  if (p.is_zero()) return Polynomial{};
  for (unsigned e : p.max_exponents()) {
    if (e % 2 != 0) return std::nullopt;
  }
  const Term& lt = p.leading_term();
  if (lt.coeff < 0 || !mpz_perfect_square_p(lt.coeff.get_mpz_t())) return std::nullopt;
  Exponents half = lt.mono.exponents();
  for (auto& e : half) {
    if (e % 2 != 0) return std::nullopt;
    e /= 2;
  }
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), lt.coeff.get_mpz_t());
  const Monomial lead = Monomial::from_exponents(half);
  Polynomial r = Polynomial::monomial(lead, root);
  Polynomial rest = p - r * r;
  const mpz_class two_lc = 2 * root;
  while (!rest.is_zero()) {
    const Term& next = rest.leading_term();
    if (!lead.divides(next.mono) || !mpz_divisible_p(next.coeff.get_mpz_t(), two_lc.get_mpz_t())) return std::nullopt;
    const Monomial m = next.mono / lead;
    if (!(m < lead)) return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), next.coeff.get_mpz_t(), two_lc.get_mpz_t());
    const Polynomial term = Polynomial::monomial(m, c);
    // (r + term)^2 = r^2 + term*(2r + term)
    rest -= term * (r.scaled(2) + term);
    r += term;
  }
  return r;
}

bool is_square_up_to_constant(const Polynomial& p) {
  if (p.is_constant()) return true;
  return is_perfect_square(primitive_part(p)).has_value();
}

}  // namespace charvar
