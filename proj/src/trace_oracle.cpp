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

// Matrix model used to cross-check the trace engine. Nothing here shares
// code with trace.cpp beyond the polynomial ring.

#include <array>
#include <map>
#include <stdexcept>

#include "charvar/trace.hpp"

namespace charvar {

namespace {

// Laurent polynomial in c with coefficients in Z[x, y].
using Laurent = std::map<int, Polynomial>;

void add_into(Laurent& acc, const Laurent& a, const Laurent& b) {
  for (const auto& [ea, pa] : a) {
    for (const auto& [eb, pb] : b) {
      Polynomial& slot = acc[ea + eb];
      slot += pa * pb;
      if (slot.is_zero()) acc.erase(ea + eb);
    }
  }
}

using Mat = std::array<Laurent, 4>;  // row major

Mat mul(const Mat& m, const Mat& n) {
  Mat r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) add_into(r[2 * i + j], m[2 * i + k], n[2 * k + j]);
    }
  }
  return r;
}

Laurent constant(const Polynomial& p, int e = 0) {
  if (p.is_zero()) return {};
  return {{e, p}};
}

Mat generator(char letter) {
  const Polynomial x = var(Var::x);
  const Polynomial y = var(Var::y);
  switch (letter) {
    case 'a': return Mat{constant(x), constant(-1), constant(1), Laurent{}};
    case 'A': return Mat{Laurent{}, constant(1), constant(-1), constant(x)};
    case 'b': return Mat{Laurent{}, constant(1, 1), constant(-1, -1), constant(y)};
    case 'B': return Mat{constant(y), constant(-1, 1), constant(1, -1), Laurent{}};
    default: throw std::invalid_argument("bad letter");
  }
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Polynomial trace_poly_oracle(const GroupWord& w) {
  Mat m{constant(1), Laurent{}, Laurent{}, constant(1)};
  for (char c : to_letters(w)) m = mul(m, generator(c));

  Laurent tr = m[0];
  for (const auto& [e, p] : m[3]) {
    Polynomial& slot = tr[e];
    slot += p;
    if (slot.is_zero()) tr.erase(e);
  }

  // Peel the top symmetric power: f c^d + ... + f c^-d = f (c + 1/c)^d + lower.
  const Polynomial z = var(Var::z);
  Polynomial out;
  while (!tr.empty()) {
    const int d = tr.rbegin()->first;
    if (d < 0 || -tr.begin()->first > d) throw std::logic_error("trace oracle: trace is not symmetric in c");
    const Polynomial f = tr.rbegin()->second;
    out += f * pow(z, d);
    for (int i = 0; i <= d; ++i) {
      const int e = d - 2 * i;
      Polynomial& slot = tr[e];
      slot -= f.scaled(binomial(d, i));
      if (slot.is_zero()) tr.erase(e);
    }
  }
  return out;
}

}  // namespace charvar
