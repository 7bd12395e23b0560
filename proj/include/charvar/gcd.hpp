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

#ifndef CHARVAR_GCD_HPP
#define CHARVAR_GCD_HPP

#include <optional>

#include "charvar/polynomial.hpp"

namespace charvar {

/// Nonnegative gcd of all coefficients; 0 for the zero polynomial.
mpz_class integer_content(const Polynomial& p);

/// p or -p, whichever has a positive leading coefficient.
Polynomial normalize_sign(const Polynomial& p);

/// p divided by its integer content, with positive leading coefficient.
Polynomial primitive_part(const Polynomial& p);

/// Quotient q with p == d*q, or nullopt when d does not divide p.
/// Throws std::domain_error for d == 0.
std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& d);

/// As try_divide, but throws std::domain_error when the division is inexact.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);

/// Greatest common divisor over the integers, normalized to a positive
/// leading coefficient; gcd(p, 0) = normalize_sign(p).
///
/// Recursive: p and q are viewed as univariate in their highest variable
/// over the ring of the remaining ones, contents are split off and the
/// primitive parts run through a subresultant pseudo-remainder sequence.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// True when gcd(p, q) is a nonzero constant (coprime over any field).
bool coprime(const Polynomial& p, const Polynomial& q);

/// Content of p viewed as a polynomial in v: the gcd of its v-coefficients.
Polynomial content_in(const Polynomial& p, Var v);

/// r with r*r == p over the integers and positive leading coefficient,
/// or nullopt when p is not a square there. Zero is the square of zero.
std::optional<Polynomial> is_perfect_square(const Polynomial& p);

/// True when p = c*r^2 for a complex constant c and a complex polynomial r.
/// For integer polynomials that is exactly "the primitive part is an
/// integer square"; zero and constants count as squares.
bool is_square_up_to_constant(const Polynomial& p);

}  // namespace charvar

#endif  // CHARVAR_GCD_HPP
