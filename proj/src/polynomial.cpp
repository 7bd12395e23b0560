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

#include "charvar/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace charvar {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames{"x", "y", "z", "t", "w"};

bool descending(const Term& a, const Term& b) { return a.mono > b.mono; }

void check_product_fits(const Polynomial& a, const Polynomial& b) {
  const Exponents ea = a.max_exponents();
  const Exponents eb = b.max_exponents();
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (ea[i] + eb[i] > Monomial::kMaxExponent) throw std::overflow_error("polynomial exponent overflow");
  }
  if (a.total_degree() + b.total_degree() > static_cast<int>(Monomial::kMaxDegree))
    throw std::overflow_error("polynomial degree overflow");
}

}  // namespace

std::string_view var_name(Var v) noexcept { return kNames[index(v)]; }

std::optional<Var> parse_var(std::string_view name) noexcept {
  for (Var v : kAllVars) {
    if (kNames[index(v)] == name) return v;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, unsigned e) {
  if (e > kMaxExponent) throw std::overflow_error("monomial exponent out of range");
  return Monomial((std::uint64_t{e} << kTotalShift) | (std::uint64_t{e} << shift(v)));
}

Monomial Monomial::from_exponents(const Exponents& e) {
  std::uint64_t bits = 0;
  unsigned total = 0;
  for (Var v : kAllVars) {
    const unsigned k = e[index(v)];
    if (k > kMaxExponent) throw std::overflow_error("monomial exponent out of range");
    total += k;
    bits |= std::uint64_t{k} << shift(v);
  }
  if (total > kMaxDegree) throw std::overflow_error("monomial degree out of range");
  return Monomial(bits | (std::uint64_t{total} << kTotalShift));
}

Exponents Monomial::exponents() const noexcept {
  Exponents e{};
  for (Var v : kAllVars) e[index(v)] = (*this)[v];
  return e;
}

bool Monomial::divides(Monomial other) const noexcept {
  for (Var v : kAllVars) {
    if ((*this)[v] > other[v]) return false;
  }
  return true;
}

Monomial Monomial::with(Var v, unsigned e) const {
  Exponents ex = exponents();
  ex[index(v)] = e;
  return from_exponents(ex);
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back({Monomial{}, mpz_class(c)});
}

Polynomial::Polynomial(const mpz_class& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(Var v) { return monomial(Monomial::of(v), 1); }

Polynomial Polynomial::monomial(Monomial m, const mpz_class& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), descending);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  Polynomial p;
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

mpz_class Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? mpz_class(0) : terms_[0].coeff;
}

mpz_class Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.front();
}

int Polynomial::total_degree() const noexcept {
  return terms_.empty() ? kMinusInfinity : static_cast<int>(terms_.front().mono.degree());
}

int Polynomial::degree_in(Var v) const noexcept {
  if (terms_.empty()) return kMinusInfinity;
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[v]);
  return static_cast<int>(d);
}

Exponents Polynomial::max_exponents() const noexcept {
  Exponents e{};
  for (const auto& t : terms_) {
    for (Var v : kAllVars) e[index(v)] = std::max(e[index(v)], t.mono[v]);
  }
  return e;
}

bool Polynomial::depends_on(Var v) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono[v] != 0; });
}

bool Polynomial::is_univariate_in(Var v) const noexcept {
  for (const auto& t : terms_) {
    if (t.mono.degree() != t.mono[v]) return false;
  }
  return true;
}

Polynomial Polynomial::coeff_in(Var v, unsigned d) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[v] == d) out.push_back({t.mono.with(v, 0), t.coeff});
  }
  return from_sorted_terms(std::move(out));
}

std::vector<Polynomial> Polynomial::coefficients_in(Var v) const {
  if (terms_.empty()) return {};
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree_in(v)) + 1);
  for (const auto& t : terms_) buckets[t.mono[v]].push_back({t.mono.with(v, 0), t.coeff});
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_sorted_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(Var v, std::span<const Polynomial> coeffs) {
  std::vector<Term> all;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    for (const auto& t : coeffs[e].terms_) {
      if (t.mono[v] != 0) throw std::invalid_argument("coefficient depends on the main variable");
      all.push_back({t.mono * Monomial::of(v, static_cast<unsigned>(e)), t.coeff});
    }
  }
  return from_terms(std::move(all));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    if (i->mono > j->mono) {
      out.push_back(std::move(*i++));
    } else if (j->mono > i->mono) {
      out.push_back(*j++);
    } else {
      mpz_class c = i->coeff + j->coeff;
      if (c != 0) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
  for (; j != o.terms_.end(); ++j) out.push_back(*j);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::times_monomial(Monomial m, const mpz_class& c) const {
  if (c == 0 || terms_.empty()) return {};
  check_product_fits(*this, monomial(m, c));
  Polynomial p = *this;
  for (auto& t : p.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  check_product_fits(a, b);

  const Polynomial& outer = a.size() <= b.size() ? a : b;
  const Polynomial& inner = a.size() <= b.size() ? b : a;
  std::unordered_map<std::uint64_t, mpz_class> acc;
  acc.reserve(std::min<std::size_t>(outer.size() * inner.size(), 1u << 20));
  for (const auto& s : outer.terms_) {
    for (const auto& t : inner.terms_) {
      mpz_class& slot = acc[(s.mono * t.mono).bits()];
      mpz_addmul(slot.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [bits, c] : acc) {
    if (c == 0) continue;
    out.push_back({Monomial::from_bits(bits), std::move(c)});
  }
  std::sort(out.begin(), out.end(), descending);
  return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial pow(const Polynomial& p, long k) {
  if (k < 0) throw std::domain_error("pow: negative exponent");
  Polynomial result(1);
  Polynomial base = p;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, Var v, const Polynomial& s) {
  if (!p.depends_on(v)) return p;
  const auto coeffs = p.coefficients_in(v);
  Polynomial result = coeffs.back();
  for (std::size_t e = coeffs.size() - 1; e-- > 0;) {
    result = result * s;
    result += coeffs[e];
  }
  return result;
}

Polynomial substitute(const Polynomial& p, std::span<const std::pair<Var, Polynomial>> images) {
  std::array<const Polynomial*, kVarCount> image{};
  for (const auto& [v, s] : images) image[index(v)] = &s;

  const Exponents maxe = p.max_exponents();
  std::array<std::vector<Polynomial>, kVarCount> powers;
  for (Var v : kAllVars) {
    if (image[index(v)] == nullptr) continue;
    auto& pw = powers[index(v)];
    pw.push_back(Polynomial(1));
    for (unsigned e = 1; e <= maxe[index(v)]; ++e) pw.push_back(pw.back() * *image[index(v)]);
  }

  Polynomial result;
  for (const auto& t : p.terms()) {
    Exponents rest = t.mono.exponents();
    Polynomial prod;
    bool first = true;
    for (Var v : kAllVars) {
      if (image[index(v)] == nullptr) continue;
      const unsigned e = rest[index(v)];
      rest[index(v)] = 0;
      if (e == 0) continue;
      prod = first ? powers[index(v)][e] : prod * powers[index(v)][e];
      first = false;
    }
    const Polynomial mono = Polynomial::monomial(Monomial::from_exponents(rest), t.coeff);
    result += first ? mono : prod * mono;
  }
  return result;
}

Polynomial specialize(const Polynomial& p, Var v, const mpz_class& value) {
  std::vector<Term> out;
  out.reserve(p.size());
  mpz_class pw;
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono[v];
    mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), e);
    mpz_class c = t.coeff * pw;
    if (c != 0) out.push_back({t.mono.with(v, 0), std::move(c)});
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial derivative(const Polynomial& p, Var v) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono[v];
    if (e == 0) continue;
    out.push_back({t.mono.with(v, e - 1), t.coeff * e});
  }
  return Polynomial::from_terms(std::move(out));
}

// -------------------------------------------------------------- evaluation

Assignment::Assignment(std::initializer_list<std::pair<Var, std::complex<double>>> values) {
  for (const auto& [v, c] : values) set(v, c);
}

Assignment& Assignment::set(Var v, std::complex<double> value) {
  values_[index(v)] = value;
  return *this;
}

namespace {

struct EvalTerm {
  Exponents e;
  std::complex<double> c;
};

std::complex<double> horner(std::span<const EvalTerm> terms, std::size_t level,
                            const std::array<std::complex<double>, kVarCount>& values) {
  if (level == kVarCount) {
    std::complex<double> s = 0;
    for (const auto& t : terms) s += t.c;
    return s;
  }
  const std::complex<double> v = values[level];
  std::complex<double> acc = 0;
  std::size_t i = 0;
  unsigned prev = terms.empty() ? 0 : terms[0].e[level];
  while (i < terms.size()) {
    const unsigned e = terms[i].e[level];
    std::size_t j = i;
    while (j < terms.size() && terms[j].e[level] == e) ++j;
    for (unsigned k = e; k < prev; ++k) acc *= v;
    acc += horner(terms.subspan(i, j - i), level + 1, values);
    prev = e;
    i = j;
  }
  for (unsigned k = 0; k < prev; ++k) acc *= v;
  return acc;
}

}  // namespace

std::complex<double> eval(const Polynomial& p, const Assignment& values) {
  std::array<std::complex<double>, kVarCount> vals{};
  for (Var v : kAllVars) {
    if (values[v]) {
      vals[index(v)] = *values[v];
    } else if (p.depends_on(v)) {
      throw std::invalid_argument("eval: no value for variable " + std::string(var_name(v)));
    }
  }
  std::vector<EvalTerm> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono.exponents(), std::complex<double>(t.coeff.get_d(), 0.0)});
  std::sort(terms.begin(), terms.end(), [](const EvalTerm& a, const EvalTerm& b) { return a.e > b.e; });
  return horner(terms, 0, vals);
}

// -------------------------------------------------------------- rendering

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const mpz_class mag = abs(t.coeff);
    bool need_star = false;
    if (mag != 1 || t.mono.is_one()) {
      out << mag.get_str();
      need_star = true;
    }
    for (Var v : kAllVars) {
      const unsigned e = t.mono[v];
      if (e == 0) continue;
      if (need_star) out << '*';
      out << var_name(v);
      if (e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace charvar
