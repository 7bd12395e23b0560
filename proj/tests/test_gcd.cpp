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

#include "charvar/chebyshev.hpp"
#include "charvar/gcd.hpp"
#include "test_util.hpp"

namespace charvar {
namespace {

using testing::Rng;
using testing::T;
using testing::X;
using testing::Y;
using testing::Z;

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(cheb(5), cheb(4)), Polynomial(1));
  EXPECT_EQ(gcd(X() * X() - Y() * Y(), X() * X() + (X() * Y()).scaled(2) + Y() * Y()), X() + Y());
  EXPECT_EQ(gcd(T() * T() - Polynomial(1), pow(T(), 3) - T().scaled(2)), Polynomial(1));
  EXPECT_EQ(gcd(X().scaled(6), Polynomial(4)), Polynomial(2));
  EXPECT_EQ(gcd(-X(), Polynomial()), X());
  EXPECT_EQ(gcd(Polynomial(), Polynomial()), Polynomial());
}

TEST(Gcd, RecoversPlantedCommonFactor) {
  Rng rng(424242);
  const std::vector<Var> vars{Var::x, Var::y, Var::z};
  int nontrivial = 0;
  for (int i = 0; i < 150; ++i) {
    const Polynomial g = testing::random_poly(rng, vars, 3, 2, 5);
    const Polynomial u = testing::random_poly(rng, vars, 3, 2, 5);
    const Polynomial v = testing::random_poly(rng, vars, 3, 2, 5);
    const Polynomial p = g * u;
    const Polynomial q = g * v;
    const Polynomial d = gcd(p, q);
    if (p.is_zero() && q.is_zero()) continue;
    ASSERT_TRUE(try_divide(p, d).has_value()) << to_string(p) << " / " << to_string(d);
    ASSERT_TRUE(try_divide(q, d).has_value()) << to_string(q) << " / " << to_string(d);
    if (!g.is_zero()) {
      ASSERT_TRUE(try_divide(d, primitive_part(g)).has_value()) << to_string(d) << " vs " << to_string(g);
    }
    // The cofactors are coprime.
    if (!d.is_zero()) {
      ASSERT_TRUE(gcd(exact_divide(p, d), exact_divide(q, d)).is_constant());
    }
    if (!g.is_constant()) ++nontrivial;
  }
  EXPECT_GT(nontrivial, 50);
}

TEST(Gcd, FewerVariablesAgainstMore) {
  // S_4(z) = (z^2 - z - 1)(z^2 + z - 1).
  const Polynomial s4 = cheb_at(4, Z());
  const Polynomial f = Z() * Z() + Z() - Polynomial(1);
  const Polynomial big = f * (X() * Y() * Z() - pow(Y(), 3) + X() - Polynomial(2)) + pow(Z(), 5) * f * X() * X();
  EXPECT_EQ(gcd(s4, big), f);
  EXPECT_EQ(gcd(big, s4), f);
  EXPECT_TRUE(coprime(s4, big + Y()));
  // Same variable sets take the recursive route.
  EXPECT_EQ(gcd(f * (Z() + X()), f * (Z() - X())), f);
}

TEST(Gcd, TryDivide) {
  const Polynomial p = (X() + Y()) * (Z() * Z() - Polynomial(2));
  EXPECT_EQ(*try_divide(p, X() + Y()), Z() * Z() - Polynomial(2));
  EXPECT_FALSE(try_divide(p, X() - Y()).has_value());
  EXPECT_FALSE(try_divide(X() + Polynomial(1), Polynomial(2)).has_value());
  EXPECT_THROW(try_divide(p, Polynomial()), std::domain_error);
  EXPECT_THROW(exact_divide(X(), Y()), std::domain_error);
}

TEST(Gcd, ContentAndPrimitivePart) {
  const Polynomial p = Polynomial(-6) * X() * Y() + Polynomial(4) * Z();
  EXPECT_EQ(integer_content(p), 2);
  EXPECT_EQ(primitive_part(p), Polynomial(3) * X() * Y() - Polynomial(2) * Z());
  EXPECT_EQ(content_in(X() * Y() * Z() + X() * Z(), Var::y), X() * Z());
}

TEST(PerfectSquare, Examples) {
  EXPECT_EQ(*is_perfect_square(X() * X() + (X() * Y()).scaled(2) + Y() * Y()), X() + Y());
  EXPECT_FALSE(is_perfect_square(Y()).has_value());
  const Polynomial zm1 = Z() - Polynomial(1);
  const Polynomial g2 = X() * X() * zm1 * zm1 - (pow(Z(), 3) - Z().scaled(2));
  EXPECT_FALSE(is_perfect_square(g2).has_value());
  EXPECT_FALSE(is_perfect_square(-(X() * X())).has_value());
  EXPECT_FALSE(is_perfect_square(Polynomial(2)).has_value());
  EXPECT_EQ(*is_perfect_square(Polynomial(9)), Polynomial(3));
  EXPECT_TRUE(is_square_up_to_constant(Polynomial(-2) * Z() * Z()));
  EXPECT_FALSE(is_square_up_to_constant(Z()));
}

TEST(PerfectSquare, RandomSquaresAndNearSquares) {
  Rng rng(99);
  const std::vector<Var> vars{Var::x, Var::y, Var::z};
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const Polynomial p = testing::random_poly(rng, vars, 4, 3, 20);
    const auto r = is_perfect_square(p * p);
    ASSERT_TRUE(r.has_value()) << to_string(p);
    ASSERT_EQ(*r * *r, p * p);
    if (p.is_constant()) continue;
    ASSERT_FALSE(is_perfect_square(p * p + Polynomial(1)).has_value()) << to_string(p);
    ++checked;
  }
  EXPECT_GT(checked, 200);
}

}  // namespace
}  // namespace charvar
