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


// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or exceeds its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "charvar/chebyshev.hpp"
#include "charvar/links.hpp"
#include "charvar/numeric.hpp"
#include "charvar/trace.hpp"
#include "charvar/varieties.hpp"
#include "test_util.hpp"

namespace charvar {
namespace {

using testing::X;
using testing::Y;
using testing::Z;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure only.
void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

Outcome chebyshev_identities() {
  Outcome o;
  const Polynomial t = var(Var::t);
  for (long k = -10; k <= 10; ++k) {
    const Polynomial& s = cheb(k);
    const Polynomial& r = cheb(k - 1);
    const std::string at = " at k = " + std::to_string(k);
    require(o, specialize(s, Var::t, 2) == Polynomial(k + 1), "S_k(2)" + at);
    require(o, specialize(s, Var::t, -2) == Polynomial((k % 2 == 0 ? 1 : -1) * (k + 1)), "S_k(-2)" + at);
    require(o, cheb(-k) == -cheb(k - 2), "reflection" + at);
    require(o, s * s + r * r - t * s * r == Polynomial(1), "determinant identity" + at);
    if (k >= -6 && k <= 6) {
      require(o, pow(s, 3) - Polynomial(3) * s * r * r + t * pow(r, 3) == cheb(3 * k), "triple index" + at);
    }
  }
  if (o.ok) o.detail = "k in [-10, 10], triple index k in [-6, 6]";
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  testing::Rng rng(20261015);
  const int words = 240;
  for (int i = 0; i < words; ++i) {
    const GroupWord w = testing::random_word(rng, 12, 4);
    require(o, trace_poly(w) == trace_poly_oracle(w), "mismatch on " + to_string(w));
  }
  if (o.ok) o.detail = std::to_string(words) + " random words, up to 12 syllables";
  return o;
}

Outcome lemma_reproduction() {
  Outcome o;
  const auto suite = trace_identity_suite();
  require(o, suite.size() == 11, "identity suite has " + std::to_string(suite.size()) + " entries");
  for (const auto& c : suite) require(o, c.ok, c.name + ": got " + to_string(c.computed));
  if (o.ok) o.detail = "6 trace differences, 3 long traces, 2 derived differences";
  return o;
}

Outcome theorem2() {
  Outcome o;
  int points = 0;
  for (long p = 4; p <= 22; ++p) {
    if (p % 3 == 0) continue;
    const ComponentReport r = verify_thm2(p);
    const std::string at = " at p = " + std::to_string(p);
    require(o, r.product_check, "product check" + at);
    require(o, r.certificates_ok, "certificate" + at);
    require(o, r.distinct_check, "distinctness" + at);
    require(o, r.component_count == 2, "count " + std::to_string(r.component_count) + at);
    ++points;
  }
  if (o.ok) o.detail = std::to_string(points) + " values of p, sign -1 throughout";
  return o;
}

Outcome theorem3() {
  Outcome o;
  for (long k = 0; k <= 10; ++k) {
    const ComponentReport r = verify_thm3(k);
    const std::string at = " at k = " + std::to_string(k);
    const long n = k % 2 == 1 ? (k + 1) / 2 : k / 2;
    const long expected = k % 2 == 1 ? n + 1 : n + 2;
    require(o, r.product_check, "product check" + at);
    require(o, r.certificates_ok, "certificate" + at);
    require(o, r.distinct_check, "distinctness" + at);
    require(o, r.component_count == expected, "count " + std::to_string(r.component_count) + at);
  }
  if (o.ok) o.detail = "k = 0..10";
  return o;
}

Outcome theorem1_table() {
  Outcome o;
  for (long m = -4; m <= 4; ++m) {
    for (long n = -4; n <= 4; ++n) {
      const ComponentReport r = count_components_pretzel(m, n);
      const std::string at = " at (" + std::to_string(m) + ", " + std::to_string(n) + ")";
      require(o, r.component_count == thm1_expected_count(m, n), "count" + at);
      require(o, r.product_check, "product check" + at);
      require(o, r.certificates_ok, "certificate" + at);
      require(o, r.distinct_check, "distinctness" + at);
      if (m == 0 && n == -1) require(o, r.flags.size() == 1 && r.flags[0].find("C^3") != std::string::npos, "unlink flag");
    }
  }
  const Polynomial q22 = -X() * X() * Z() * Z() + X() * Y() * pow(Z(), 3) + X() * Y() * Z() - Y() * Y() * Z() * Z() -
                         pow(Z(), 4) + (Z() * Z()).scaled(3) - Polynomial(1);
  require(o, *pretzel_char_poly(2, 2).nonabelian == q22, "(2, 2) polynomial");
  if (o.ok) o.detail = "81 points, unlink flagged, (2, 2) polynomial verbatim";
  return o;
}

Outcome zero_slice() {
  Outcome o;
  for (long m = -4; m <= 4; ++m) {
    for (long n = -4; n <= 4; ++n) {
      const Polynomial q = specialize(*pretzel_char_poly(m, n).nonabelian, Var::z, 0);
      const long sign = ((m - 1) * (n - 1)) % 2 == 0 ? 1 : -1;
      require(o, q == cheb_at(2 * m * n - 2 * m - n - 2, Y()).scaled(sign),
              "at (" + std::to_string(m) + ", " + std::to_string(n) + ")");
    }
  }
  if (o.ok) o.detail = "81 points";
  return o;
}

Outcome numeric_oracle() {
  Outcome o;
  double worst_comm = 0;
  double worst_rel = 0;
  int links = 0;
  const int seeds = 100;
  for (std::uint64_t s = 0; s < seeds; ++s) worst_comm = std::max(worst_comm, std::abs(commutator_trace_check(random_rep(s))));
  for (long p = 2; p <= 10; ++p) {
    for (long m = 1; m < p; m += 2) {
      if (std::gcd(p, m) != 1) continue;
      ++links;
      const Polynomial cp = char_poly_twobridge(p, m).full;
      for (std::uint64_t s = 0; s < seeds; ++s) worst_rel = std::max(worst_rel, relator_residual(p, m, random_rep(s), cp));
    }
  }
  require(o, worst_comm < 1e-8, "commutator check " + std::to_string(worst_comm));
  require(o, worst_rel < 1e-6, "relator residual " + std::to_string(worst_rel));
  std::ostringstream d;
  d << seeds << " seeds, " << links << " links with p <= 10, max commutator " << worst_comm << ", max residual "
    << worst_rel;
  if (o.ok) o.detail = d.str();
  return o;
}

Outcome whitehead_consistency() {
  Outcome o;
  require(o, thm2_Q(4) == -(X() * Y() - gamma_poly() * Z()), "thm2_Q(4) = " + to_string(thm2_Q(4)));
  if (o.ok) o.detail = "thm2_Q(4) = -(xy - gamma z)";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace charvar

int main() {
  using namespace charvar;
  const Criterion criteria[] = {
      {1, "Chebyshev identity suite", 1, chebyshev_identities},
      {2, "trace engine vs matrix oracle", 30, oracle_agreement},
      {3, "trace lemma reproduction", 60, lemma_reproduction},
      {4, "b(2p, 3) family for p <= 22", 300, theorem2},
      {5, "twisted Whitehead links for k <= 10", 300, theorem3},
      {6, "pretzel component table", 300, theorem1_table},
      {7, "pretzel z = 0 specialization", 60, zero_slice},
      {8, "numeric oracle", 10, numeric_oracle},
      {9, "Whitehead cross-check", 60, whitehead_consistency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget_seconds) {
      o.ok = false;
      o.detail = "over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    if (!o.ok) ++failed;
    std::printf("criterion %d %s: %s (%.3f s) %s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
  }
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
