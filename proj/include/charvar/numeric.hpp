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

#ifndef CHARVAR_NUMERIC_HPP
#define CHARVAR_NUMERIC_HPP

#include <complex>
#include <cstdint>

#include "charvar/polynomial.hpp"
#include "charvar/word.hpp"

namespace charvar {

using Complex = std::complex<double>;

struct Mat2C {
  Complex a{1}, b{0}, c{0}, d{1};  // [[a, b], [c, d]]

  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }
  /// Adjugate; the inverse for determinant 1.
  Mat2C inverse() const { return {d, -b, -c, a}; }
  double max_abs() const;

  friend Mat2C operator*(const Mat2C& m, const Mat2C& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
};

struct RepPair {
  Mat2C A;
  Mat2C B;
};

/// Deterministic per seed (mt19937_64, doubles from the top 53 bits).
/// Entries are uniform in [0,1) + i[0,1); samples with |det| < 1e-6 are
/// redrawn, the rest scaled by a square root of 1/det.
RepPair random_rep(std::uint64_t seed);

/// Diagonal SL2 pair, entries drawn as above; an abelian representation.
RepPair random_diagonal_rep(std::uint64_t seed);

/// x = tr A, y = tr B, z = tr AB.
Assignment trace_coordinates(const RepPair& rep);

Mat2C evaluate(const GroupWord& w, const RepPair& rep);

/// tr(A B A^-1 B^-1) - gamma(x, y, z).
Complex commutator_trace_check(const RepPair& rep);

/// |tr(a w A B) - tr(w B) - charpoly(x, y, z)| for the Riley word of b(2p, m).
double relator_residual(long p, long m, const RepPair& rep, const Polynomial& charpoly);
/// As above, computing the character polynomial first.
double relator_residual(long p, long m, const RepPair& rep);

/// Largest entry modulus of A and B.
double max_entry(const RepPair& rep);

}  // namespace charvar

#endif  // CHARVAR_NUMERIC_HPP
