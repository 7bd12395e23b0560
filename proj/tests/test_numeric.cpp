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


#include <gtest/gtest.h>

#include <numeric>

#include "charvar/links.hpp"
#include "charvar/numeric.hpp"
#include "charvar/trace.hpp"
#include "test_util.hpp"

namespace charvar {
namespace {

TEST(Numeric, RandomRepIsSL2AndDeterministic) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const RepPair r = random_rep(seed);
    ASSERT_LT(std::abs(r.A.det() - 1.0), 1e-12) << seed;
    ASSERT_LT(std::abs(r.B.det() - 1.0), 1e-12) << seed;
  }
  const RepPair a = random_rep(42);
  const RepPair b = random_rep(42);
  EXPECT_EQ(a.A.a, b.A.a);
  EXPECT_EQ(a.B.d, b.B.d);
  EXPECT_NE(random_rep(43).A.a, a.A.a);
}

TEST(Numeric, DiagonalRepIsAbelian) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const RepPair r = random_diagonal_rep(seed);
    EXPECT_EQ(r.A.b, Complex(0));
    EXPECT_EQ(r.B.c, Complex(0));
    EXPECT_LT(std::abs(r.A.det() - 1.0), 1e-12);
    EXPECT_LT(std::abs(commutator_trace_check(r)), 1e-10);
    EXPECT_LT(std::abs(eval(gamma_poly() - Polynomial(2), trace_coordinates(r))), 1e-10);
  }
}

TEST(Numeric, CommutatorTrace) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_LT(std::abs(commutator_trace_check(random_rep(seed))), 1e-8) << seed;
  }
  RepPair same = random_rep(5);
  same.B = same.A;
  const Mat2C comm = same.A * same.B * same.A.inverse() * same.B.inverse();
  EXPECT_LT(std::abs(comm.trace() - 2.0), 1e-10);
  EXPECT_LT(std::abs(eval(gamma_poly(), trace_coordinates(same)) - 2.0), 1e-10);
  EXPECT_LT(std::abs(commutator_trace_check(same)), 1e-8);
}

TEST(Numeric, EvaluateWord) {
  const RepPair r = random_rep(9);
  const Mat2C m = evaluate(parse_word("abA"), r);
  const Mat2C e = r.A * r.B * r.A.inverse();
  EXPECT_LT(std::abs(m.a - e.a) + std::abs(m.b - e.b) + std::abs(m.c - e.c) + std::abs(m.d - e.d), 1e-12);
  EXPECT_EQ(evaluate(GroupWord(), r).trace(), Complex(2));
}

TEST(Numeric, RelatorResidualExamples) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_LT(relator_residual(4, 3, random_rep(seed)), 1e-6);
    EXPECT_LT(relator_residual(2, 1, random_rep(seed)), 1e-6);
  }
  const RepPair id{};
  EXPECT_LT(relator_residual(4, 3, id), 1e-12);
}

TEST(Numeric, RelatorResidualAcrossSmallLinks) {
  for (long p = 2; p <= 10; ++p) {
    for (long m = 1; m < p; m += 2) {
      if (std::gcd(p, m) != 1) continue;
      const Polynomial cp = char_poly_twobridge(p, m).full;
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        ASSERT_LT(relator_residual(p, m, random_rep(seed), cp), 1e-6) << p << "," << m << " seed " << seed;
      }
    }
  }
}

TEST(Numeric, RelatorResidualDetectsWrongPolynomial) {
  const Polynomial cp = char_poly_twobridge(4, 3).full;
  EXPECT_GT(relator_residual(4, 3, random_rep(1), cp + var(Var::x)), 1e-3);
  EXPECT_THROW(relator_residual(4, 3, random_rep(1), var(Var::t)), std::invalid_argument);
}

}  // namespace
}  // namespace charvar
