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

#ifndef CHARVAR_POLYNOMIAL_HPP
#define CHARVAR_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace charvar {

// Ring variables in monomial-order priority: x > y > z > t > w.
// x, y, z are the trace coordinates, t is the Chebyshev indeterminate and
// w is a scratch variable for variable changes inside certificates.
enum class Var : std::uint8_t { x = 0, y = 1, z = 2, t = 3, w = 4 };

inline constexpr std::size_t kVarCount = 5;
inline constexpr std::array<Var, kVarCount> kAllVars{Var::x, Var::y, Var::z, Var::t, Var::w};

constexpr std::size_t index(Var v) noexcept { return static_cast<std::size_t>(v); }
std::string_view var_name(Var v) noexcept;
std::optional<Var> parse_var(std::string_view name) noexcept;

using Exponents = std::array<unsigned, kVarCount>;

/// Packed exponent vector. Layout (most significant first):
/// [total:14][x:10][y:10][z:10][t:10][w:10], so integer comparison of the
/// packed word is graded-lex comparison and multiplication is addition.
class Monomial {
 public:
  static constexpr unsigned kFieldBits = 10;
  static constexpr unsigned kMaxExponent = (1u << kFieldBits) - 1;
  static constexpr unsigned kMaxDegree = (1u << 14) - 1;

  constexpr Monomial() = default;

  static Monomial of(Var v, unsigned e = 1);
  static Monomial from_exponents(const Exponents& e);
  static constexpr Monomial from_bits(std::uint64_t bits) { return Monomial(bits); }

  unsigned operator[](Var v) const noexcept {
    return static_cast<unsigned>((bits_ >> shift(v)) & kMaxExponent);
  }
  unsigned degree() const noexcept { return static_cast<unsigned>(bits_ >> kTotalShift); }
  Exponents exponents() const noexcept;
  bool is_one() const noexcept { return bits_ == 0; }
  bool divides(Monomial other) const noexcept;
  Monomial with(Var v, unsigned e) const;
  std::uint64_t bits() const noexcept { return bits_; }

  // No overflow check; Polynomial multiplication validates degree bounds first.
  friend Monomial operator*(Monomial a, Monomial b) noexcept { return Monomial(a.bits_ + b.bits_); }
  // Requires b.divides(a).
  friend Monomial operator/(Monomial a, Monomial b) noexcept { return Monomial(a.bits_ - b.bits_); }
  friend auto operator<=>(Monomial, Monomial) = default;

 private:
  static constexpr unsigned kTotalShift = kFieldBits * kVarCount;
  static constexpr unsigned shift(Var v) noexcept {
    return kFieldBits * static_cast<unsigned>(kVarCount - 1 - index(v));
  }
  explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

struct Term {
  Monomial mono;
  mpz_class coeff;

  friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
};

inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Multivariate polynomial over the integers. Terms are kept strictly
/// descending in graded-lex order with no zero coefficients, so structural
/// equality is polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  static Polynomial variable(Var v);
  static Polynomial monomial(Monomial m, const mpz_class& c);
  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);
  /// Trusted constructor: terms already strictly descending and nonzero.
  static Polynomial from_sorted_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  mpz_class constant_value() const;  // requires is_constant()
  mpz_class constant_term() const;

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading_term() const;
  const mpz_class& leading_coefficient() const { return leading_term().coeff; }

  int total_degree() const noexcept;
  /// kMinusInfinity for the zero polynomial.
  int degree_in(Var v) const noexcept;
  Exponents max_exponents() const noexcept;
  bool depends_on(Var v) const noexcept;
  bool is_univariate_in(Var v) const noexcept;

  /// Coefficient of v^d as a polynomial in the remaining variables.
  Polynomial coeff_in(Var v, unsigned d) const;
  /// All coefficients in v, indexed by degree; empty for zero.
  std::vector<Polynomial> coefficients_in(Var v) const;
  static Polynomial from_coefficients(Var v, std::span<const Polynomial> coeffs);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial scaled(const mpz_class& c) const;
  Polynomial times_monomial(Monomial m, const mpz_class& c) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  std::vector<Term> terms_;
};

/// Polynomial in variable v (shorthand for tests and formula code).
inline Polynomial var(Var v) { return Polynomial::variable(v); }

/// Throws std::domain_error for negative k.
Polynomial pow(const Polynomial& p, long k);

/// Replaces every occurrence of v by s.
Polynomial substitute(const Polynomial& p, Var v, const Polynomial& s);

/// Simultaneous substitution v_i -> s_i (images may mention any variable).
Polynomial substitute(const Polynomial& p, std::span<const std::pair<Var, Polynomial>> images);

/// p with v set to an integer value.
Polynomial specialize(const Polynomial& p, Var v, const mpz_class& value);

Polynomial derivative(const Polynomial& p, Var v);

/// Complex values for the variables of a polynomial.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<Var, std::complex<double>>> values);
  Assignment& set(Var v, std::complex<double> value);
  const std::optional<std::complex<double>>& operator[](Var v) const { return values_[index(v)]; }

 private:
  std::array<std::optional<std::complex<double>>, kVarCount> values_{};
};

/// Horner evaluation, nested by variable. Throws std::invalid_argument if
/// a variable of p has no value.
std::complex<double> eval(const Polynomial& p, const Assignment& values);

/// Deterministic text form, terms in descending monomial order,
/// e.g. "x^2*z^2 - 2*x*y*z + y^2 - 1".
std::string to_string(const Polynomial& p);

}  // namespace charvar

#endif  // CHARVAR_POLYNOMIAL_HPP
