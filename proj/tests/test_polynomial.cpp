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
#include "charvar/polynomial.hpp"
#include "charvar/polynomial_json.hpp"
#include "charvar/trace.hpp"
#include "test_util.hpp"

namespace charvar {
namespace {

using testing::Rng;
using testing::T;
using testing::X;
using testing::Y;
using testing::Z;

TEST(Polynomial, Arithmetic) {
  EXPECT_TRUE((X() + -X()).is_zero());
  EXPECT_EQ((X() + Y()) * (X() - Y()), X() * X() - Y() * Y());
  EXPECT_TRUE((pow(T(), 3) - T() * pow(T(), 2)).is_zero());
  EXPECT_EQ(pow(X() + Polynomial(1), 0), Polynomial(1));
  EXPECT_THROW(pow(X(), -1), std::domain_error);
}

TEST(Polynomial, Substitute) {
  EXPECT_EQ(substitute(T() * T() - Polynomial(1), Var::t, Z()), Z() * Z() - Polynomial(1));
  EXPECT_EQ(substitute(T(), Var::t, gamma_poly()), gamma_poly());
  const Polynomial xz_y = X() * Z() - Y();
  EXPECT_EQ(substitute(cheb(2), Var::t, xz_y),
            X() * X() * Z() * Z() - (X() * Y() * Z()).scaled(2) + Y() * Y() - Polynomial(1));
}

TEST(Polynomial, SimultaneousSubstitutionSwaps) {
  const Polynomial p = X() * X() * Y() + Polynomial(3) * Y();
  const std::vector<std::pair<Var, Polynomial>> swap{{Var::x, Y()}, {Var::y, X()}};
  EXPECT_EQ(substitute(p, swap), Y() * Y() * X() + Polynomial(3) * X());
}

TEST(Polynomial, DegreeAndCoefficients) {
  EXPECT_EQ((X() * X() * Z() * Z() + Y()).degree_in(Var::x), 2);
  EXPECT_EQ(Polynomial().degree_in(Var::z), kMinusInfinity);
  // z x^(2n) + lower terms in x
  const int n = 3;
  const Polynomial q = Z() * pow(X(), 2 * n) + pow(X(), 2 * n - 1) * Y() - Polynomial(7);
  EXPECT_EQ(q.coeff_in(Var::x, 2 * n), Z());
  EXPECT_EQ(q.coeff_in(Var::x, 0), Polynomial(-7));
  EXPECT_TRUE(q.coeff_in(Var::x, 2 * n + 1).is_zero());
}

TEST(Polynomial, CoefficientsRoundTrip) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = testing::random_poly(rng, {Var::x, Var::y, Var::z});
    for (Var v : {Var::x, Var::y, Var::z}) {
      const auto c = p.coefficients_in(v);
      EXPECT_EQ(Polynomial::from_coefficients(v, c), p);
    }
  }
}

TEST(Polynomial, Eval) {
  const Assignment twos{{Var::x, 2.0}, {Var::y, 2.0}, {Var::z, 2.0}};
  EXPECT_EQ(eval(gamma_poly(), twos), std::complex<double>(2.0));
  EXPECT_EQ(eval(Polynomial(), twos), std::complex<double>(0.0));
  EXPECT_EQ(eval(cheb(3), {{Var::t, 2.0}}), std::complex<double>(4.0));
  EXPECT_THROW(eval(X() + T(), twos), std::invalid_argument);
}

TEST(Polynomial, RingAxiomsOnRandomTriples) {
  Rng rng(20261015);
  const std::vector<Var> vars{Var::x, Var::y, Var::z, Var::t};
  for (int i = 0; i < 1000; ++i) {
    const Polynomial a = testing::random_poly(rng, vars);
    const Polynomial b = testing::random_poly(rng, vars);
    const Polynomial c = testing::random_poly(rng, vars);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a * Polynomial(1), a);
    for (std::size_t k = 1; k < a.terms().size(); ++k) ASSERT_GT(a.terms()[k - 1].mono, a.terms()[k].mono);
  }
}

TEST(Polynomial, RenamingThroughFreshVariableIsIdentity) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = testing::random_poly(rng, {Var::x, Var::y, Var::z});
    EXPECT_EQ(substitute(substitute(p, Var::y, T()), Var::t, Y()), p);
  }
}

TEST(Polynomial, LargeCoefficientsStayExact) {
  const Polynomial p = pow(X() + Polynomial(1), 80);
  EXPECT_EQ(p.coeff_in(Var::x, 40).constant_value(),
            mpz_class("107507208733336176461620"));
  EXPECT_EQ(substitute(p, Var::x, Polynomial(1)).constant_value(), mpz_class(1) << 80);
}

TEST(Polynomial, TextForm) {
  EXPECT_EQ(to_string(X() * X() * Z() * Z() - (X() * Y() * Z()).scaled(2) + Y() * Y() - Polynomial(1)),
            "x^2*z^2 - 2*x*y*z + y^2 - 1");
  EXPECT_EQ(to_string(Polynomial()), "0");
  EXPECT_EQ(to_string(-X()), "-x");
}

TEST(PolynomialJson, RoundTrip) {
  Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    const Polynomial p = testing::random_poly(rng, {Var::x, Var::y, Var::z, Var::t}, 6, 4, 1000000);
    EXPECT_EQ(polynomial_from_json(to_json(p)), p);
  }
  const Polynomial big = pow(X() - Polynomial(3), 60);
  EXPECT_EQ(polynomial_from_json(nlohmann::json::parse(to_json(big).dump())), big);
}

TEST(PolynomialJson, Format) {
  const auto j = to_json(X() * Z() - Polynomial(2));
  EXPECT_EQ(j["vars"], nlohmann::json({"x", "y", "z"}));
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["exp"], nlohmann::json({1, 0, 1}));
  EXPECT_EQ(j["terms"][0]["coeff"], "1");
  EXPECT_EQ(j["terms"][1]["coeff"], "-2");
}

TEST(PolynomialJson, RejectsMalformed) {
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(R"({"vars":["q"],"terms":[]})")), std::invalid_argument);
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(R"({"vars":["x"],"terms":[{"exp":[1,2],"coeff":"1"}]})")),
               std::invalid_argument);
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(R"({"vars":["x"],"terms":[{"exp":[1],"coeff":"1.5"}]})")),
               std::invalid_argument);
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(R"([1,2])")), std::invalid_argument);
}

}  // namespace
}  // namespace charvar
