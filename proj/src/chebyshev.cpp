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

#include "charvar/chebyshev.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "charvar/gcd.hpp"

namespace charvar {

namespace {

struct ChebTable {
  std::mutex mu;
  std::map<long, Polynomial> values{{-1, Polynomial(0)}, {0, Polynomial(1)}, {1, var(Var::t)}};
};

ChebTable& table() {
  static ChebTable t;
  return t;
}

// Caller holds the lock. Map nodes are stable, so references handed out
// earlier survive later insertions.
const Polynomial& forward(ChebTable& tab, long k) {
  long top = tab.values.rbegin()->first;
  const Polynomial t = var(Var::t);
  while (top < k) {
    Polynomial next = t * tab.values.at(top) - tab.values.at(top - 1);
    tab.values.emplace(++top, std::move(next));
  }
  return tab.values.at(k);
}

}  // namespace

const Polynomial& cheb(long k) {
  ChebTable& tab = table();
  std::lock_guard<std::mutex> lock(tab.mu);
  if (auto it = tab.values.find(k); it != tab.values.end()) return it->second;
  if (k >= 0) return forward(tab, k);
  return tab.values.emplace(k, -forward(tab, -k - 2)).first->second;
}

Polynomial cheb_diff(long k) { return cheb(k) - cheb(k - 1); }

Polynomial cheb_at(long k, const Polynomial& arg) { return substitute(cheb(k), Var::t, arg); }

Polynomial cheb_diff_at(long k, const Polynomial& arg) { return substitute(cheb_diff(k), Var::t, arg); }

long distinct_root_count(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("distinct_root_count of the zero polynomial");
  if (p.is_constant()) return 0;
  std::optional<Var> v;
  for (Var u : kAllVars) {
    if (!p.depends_on(u)) continue;
    if (v) throw std::invalid_argument("distinct_root_count needs a univariate polynomial");
    v = u;
  }
  const Polynomial g = gcd(p, derivative(p, *v));
  return p.degree_in(*v) - g.degree_in(*v);
}

}  // namespace charvar
