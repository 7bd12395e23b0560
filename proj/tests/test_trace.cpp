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

#include "charvar/numeric.hpp"
#include "charvar/trace.hpp"
#include "test_util.hpp"

namespace charvar {
namespace {

using testing::Rng;
using testing::X;
using testing::Y;
using testing::Z;

Polynomial P(const char* w) { return trace_poly(parse_word(w)); }
Polynomial C(long c) { return Polynomial(c); }

TEST(Trace, BaseCases) {
  EXPECT_EQ(P(""), C(2));
  EXPECT_EQ(P("a"), X());
  EXPECT_EQ(P("B"), Y());
  EXPECT_EQ(P("ab"), Z());
  EXPECT_EQ(P("aB"), X() * Y() - Z());
  EXPECT_EQ(P("ab^2"), Y() * Z() - X());
  EXPECT_EQ(P("b^-2"), Y() * Y() - C(2));
  EXPECT_EQ(P("a^3"), pow(X(), 3) - X().scaled(3));
}

TEST(Trace, Commutator) {
  EXPECT_EQ(P("aba^{-1}b^{-1}"), gamma_poly());
  EXPECT_EQ(P("abAB"), X() * X() + Y() * Y() + Z() * Z() - X() * Y() * Z() - C(2));
}

TEST(Trace, LongTraces) {
  const Polynomial x = X(), y = Y(), z = Z();
  EXPECT_EQ(P("abab^{-1}a^{-1}b^{-1}"), x * y - (x * x + y * y - C(3)) * z + x * y * z * z - pow(z, 3));
  EXPECT_EQ(P("ab^{-1}aba^{-1}b^{-1}"), x * y * (x * x + y * y - C(3)) - (x * x * y * y + x * x + y * y - C(3)) * z +
                                            (x * y * z * z).scaled(2) - pow(z, 3));
}

TEST(Trace, IdentitySuite) {
  const auto suite = trace_identity_suite();
  EXPECT_EQ(suite.size(), 11u);
  for (const auto& c : suite) {
    EXPECT_TRUE(c.ok) << c.name << ": got " << to_string(c.computed) << ", expected " << to_string(c.expected);
    EXPECT_EQ(c.computed, c.expected) << c.name;
  }
}

TEST(Trace, OracleExamples) {
  EXPECT_EQ(trace_poly_oracle(parse_word("ab")), Z());
  EXPECT_EQ(trace_poly_oracle(parse_word("aba^{-1}b^{-1}")), gamma_poly());
  EXPECT_EQ(trace_poly_oracle(parse_word("b^{-2}")), Y() * Y() - C(2));
  EXPECT_EQ(trace_poly_oracle(parse_word("a^3")), pow(X(), 3) - X().scaled(3));
  EXPECT_EQ(trace_poly_oracle(GroupWord()), C(2));
}

TEST(Trace, MatchesOracleOnRandomWords) {
  Rng rng(2026);
  for (int i = 0; i < 250; ++i) {
    const GroupWord w = testing::random_word(rng, 12, 4);
    ASSERT_EQ(trace_poly(w), trace_poly_oracle(w)) << to_string(w);
  }
}

TEST(Trace, CyclicAndInversionInvariance) {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const GroupWord u = testing::random_word(rng, 6, 3);
    const GroupWord v = testing::random_word(rng, 6, 3);
    ASSERT_EQ(trace_poly(u * v), trace_poly(v * u)) << to_string(u) << " | " << to_string(v);
    ASSERT_EQ(trace_poly(u), trace_poly(u.inverse())) << to_string(u);
  }
}

TEST(Trace, FundamentalIdentity) {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const GroupWord u = testing::random_word(rng, 6, 3);
    const GroupWord v = testing::random_word(rng, 6, 3);
    ASSERT_EQ(trace_poly(u * v) + trace_poly(u * v.inverse()), trace_poly(u) * trace_poly(v))
        << to_string(u) << " | " << to_string(v);
  }
}

TEST(Trace, BlockPowersMatchLetterExpansion) {
  // Long block words go through the block rule; compare with the oracle on
  // moderate sizes.
  for (long n = 1; n <= 6; ++n) {
    const GroupWord w = parse_word("(baBA)^" + std::to_string(n) + " a (ABab)^" + std::to_string(n));
    EXPECT_EQ(trace_poly(w), trace_poly_oracle(w)) << n;
    const GroupWord v = parse_word("(ba)^" + std::to_string(n) + "(BA)^" + std::to_string(n) + "B(ab)^" +
                                   std::to_string(n));
    EXPECT_EQ(trace_poly(v), trace_poly_oracle(v)) << n;
  }
}

TEST(Trace, NumericAgreement) {
  Rng rng(4);
  std::vector<GroupWord> corpus;
  for (int i = 0; i < 40; ++i) corpus.push_back(testing::random_word(rng, 8, 3));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const RepPair rep = random_rep(seed);
    const Assignment at = trace_coordinates(rep);
    for (const auto& w : corpus) {
      const Complex direct = evaluate(w, rep).trace();
      const Complex symbolic = eval(trace_poly(w), at);
      ASSERT_LT(std::abs(direct - symbolic), 1e-8 * (1 + std::abs(direct))) << to_string(w) << " seed " << seed;
    }
  }
}

TEST(Trace, EngineCacheIsOptional) {
  TraceEngine a;
  TraceEngine b;
  const GroupWord w = parse_word("(ab)^5 A^3 (bA)^4 b^-2");
  const Polynomial first = a.trace(w);
  EXPECT_GT(a.cache_size(), 0u);
  a.clear();
  EXPECT_EQ(a.cache_size(), 0u);
  EXPECT_EQ(a.trace(w), first);
  EXPECT_EQ(b.trace_letters("abababababAAAbAbAbAbABB"), first);
}

}  // namespace
}  // namespace charvar
