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

#include "charvar/trace.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "charvar/chebyshev.hpp"

namespace charvar {

namespace {

char invert(char c) { return static_cast<char>(c ^ 0x20); }
bool is_a(char c) { return c == 'a' || c == 'A'; }
bool same_gen(char c, char d) { return (c | 0x20) == (d | 0x20); }

// Free and cyclic reduction.
std::string reduce(const std::string& w) {
  std::string out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == invert(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  std::size_t lo = 0;
  std::size_t hi = out.size();
  while (hi - lo >= 2 && out[lo] == invert(out[hi - 1])) {
    ++lo;
    --hi;
  }
  return out.substr(lo, hi - lo);
}

std::string inverse(const std::string& w) {
  std::string r(w.rbegin(), w.rend());
  for (char& c : r) c = invert(c);
  return r;
}

std::string rotate(const std::string& w, std::size_t k) { return w.substr(k) + w.substr(0, k); }

// Least rotation of w and of w^-1; the trace is constant on this class.
std::string canonical(const std::string& w) {
  std::string best = w;
  for (const std::string& v : {w, inverse(w)}) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (std::string r = rotate(v, k); r < best) best = std::move(r);
    }
  }
  return best;
}

Polynomial gen_trace(char c) { return is_a(c) ? var(Var::x) : var(Var::y); }

// tr(M^n) = S_n(tr M) - S_{n-2}(tr M).
Polynomial power_trace(long n, const Polynomial& tau) { return cheb_at(n, tau) - cheb_at(n - 2, tau); }

struct Block {
  std::size_t start = 0;
  std::size_t len = 0;
  std::size_t count = 0;
};

// Largest cyclic stretch X^n (n >= 2, X mentioning both generators).
Block find_block_power(const std::string& w) {
  const std::size_t L = w.size();
  Block best;
  std::vector<char> match(L);
  for (std::size_t len = 2; 2 * len <= L; ++len) {
    for (std::size_t k = 0; k < L; ++k) match[k] = w[k] == w[(k + len) % L];
    for (std::size_t i = 0; i < L; ++i) {
      std::size_t run = 0;
      while (run < L && match[(i + run) % L]) ++run;
      const std::size_t n = std::min(1 + run / len, L / len);
      if (n < 2 || n * len <= best.count * best.len) continue;
      bool mixed = false;
      for (std::size_t k = 1; k < len && !mixed; ++k) mixed = !same_gen(w[(i + k) % L], w[i]);
      if (mixed) best = {i, len, n};
    }
  }
  return best;
}

}  // namespace

Polynomial gamma_poly() {
  const Polynomial x = var(Var::x);
  const Polynomial y = var(Var::y);
  const Polynomial z = var(Var::z);
  return x * x + y * y + z * z - x * y * z - 2;
}

std::string to_letters(const GroupWord& w) {
  std::string out;
  for (const auto& s : w.syllables()) {
    const char c = s.gen == Gen::a ? (s.exp > 0 ? 'a' : 'A') : (s.exp > 0 ? 'b' : 'B');
    out.append(static_cast<std::size_t>(std::labs(s.exp)), c);
  }
  return out;
}

Polynomial TraceEngine::trace(const GroupWord& w) { return trace_letters(to_letters(w)); }

Polynomial TraceEngine::trace_letters(const std::string& letters) {
  const std::string w = reduce(letters);
  if (w.empty()) return Polynomial(2);
  std::string key = canonical(w);
  if (auto it = memo_.find(key); it != memo_.end()) {
    ++hits_;
    return it->second;
  }
  Polynomial p = compute(key);
  memo_.emplace(std::move(key), p);
  return p;
}

Polynomial TraceEngine::compute(const std::string& w) {
  const std::size_t L = w.size();

  bool single = true;
  for (char c : w) single = single && same_gen(c, w[0]);
  if (single) return power_trace(static_cast<long>(L), gen_trace(w[0]));

  if (L == 2) {
    // ab, AB -> z; aB, Ab -> xy - z
    const bool same_sign = (w[0] & 0x20) == (w[1] & 0x20);
    const Polynomial z = var(Var::z);
    return same_sign ? z : var(Var::x) * var(Var::y) - z;
  }

  if (const Block b = find_block_power(w); b.count >= 2) {
    const std::string r = rotate(w, b.start);
    const std::string block = r.substr(0, b.len);
    const std::string rest = r.substr(b.len * b.count);
    const Polynomial tau = trace_letters(block);
    const long n = static_cast<long>(b.count);
    if (rest.empty()) return cheb_at(n, tau).scaled(2) - tau * cheb_at(n - 1, tau);
    return cheb_at(n, tau) * trace_letters(rest) - cheb_at(n - 1, tau) * trace_letters(inverse(block) + rest);
  }

  // Rotate to a syllable boundary so syllables do not wrap around.
  std::size_t boundary = 0;
  while (same_gen(w[boundary], w[(boundary + L - 1) % L])) ++boundary;
  const std::string r = rotate(w, boundary);

  std::size_t best_start = 0;
  std::size_t best_len = 0;
  for (std::size_t i = 0; i < L;) {
    std::size_t j = i;
    while (j < L && r[j] == r[i]) ++j;
    if (j - i > best_len) {
      best_len = j - i;
      best_start = i;
    }
    i = j;
  }
  if (best_len >= 2) {
    const std::string s = rotate(r, best_start);
    const std::string rest = s.substr(best_len);
    const Polynomial tau = gen_trace(s[0]);
    const long e = static_cast<long>(best_len);
    return cheb_at(e, tau) * trace_letters(rest) - cheb_at(e - 1, tau) * trace_letters(std::string(1, invert(s[0])) + rest);
  }

  // All exponents are +-1: split at a repeated letter, balancing the halves.
  std::size_t bi = L;
  std::size_t bj = L;
  std::size_t best_cost = L;
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i + 1; j < L; ++j) {
      if (w[i] != w[j]) continue;
      const std::size_t cost = std::max(j - i, L - (j - i));
      if (cost < best_cost) {
        best_cost = cost;
        bi = i;
        bj = j;
      }
    }
  }
  if (bi < L) {
    const std::string s = rotate(w, bi);
    const std::size_t d = bj - bi;
    const std::string gp = s.substr(0, d);
    const std::string gq = s.substr(d);
    const std::string p = gp.substr(1);
    const std::string q = gq.substr(1);
    return trace_letters(gp) * trace_letters(gq) - trace_letters(p + inverse(q));
  }

  // g h g^-1 h^-1: tr(gh) tr(g^-1 h^-1) - tr(g h h g).
  const std::string u = w.substr(0, 2);
  const std::string v = w.substr(2);
  return trace_letters(u) * trace_letters(v) - trace_letters(u + inverse(v));
}

Polynomial trace_poly(const GroupWord& w) {
  thread_local TraceEngine engine;
  return engine.trace(w);
}

std::vector<IdentityCheck> trace_identity_suite() {
  const Polynomial x = var(Var::x);
  const Polynomial y = var(Var::y);
  const Polynomial z = var(Var::z);
  const Polynomial g = gamma_poly();
  const Polynomial two_minus_g = Polynomial(2) - g;
  TraceEngine engine;
  auto P = [&](const char* word) { return engine.trace(parse_word(word)); };

  std::vector<IdentityCheck> out;
  auto add = [&](std::string name, Polynomial computed, Polynomial expected) {
    const bool ok = computed == expected;
    out.push_back({std::move(name), std::move(computed), std::move(expected), ok});
  };

  add("P(A B a B) - P(B^2) = 2 - gamma", P("ABaB") - P("B^2"), two_minus_g);
  add("P(A^2 B^2 a B) - P(B^2 A B) = (2 - gamma) xy", P("A^2B^2aB") - P("B^2AB"), two_minus_g * x * y);
  add("P(A^2 B a^2 B) - P(A B a B) = (2 - gamma)(x^2 - 1)", P("A^2Ba^2B") - P("ABaB"), two_minus_g * (x * x - 1));
  add("P(A^2 B^4) - P(A B^3 A B) = (2 - gamma)(y^2 - 1)", P("A^2B^4") - P("AB^3AB"), two_minus_g * (y * y - 1));
  add("P(B^2) - P(a B A B) = gamma - 2", P("B^2") - P("aBAB"), g - 2);
  add("P(A^2 B a B^2) - P(A B a B A B) = (2 - gamma)(xy - z)", P("A^2BaB^2") - P("ABaBAB"), two_minus_g * (x * y - z));

  const Polynomial t1 = x * y - (x * x + y * y - 3) * z + x * y * z * z - z * z * z;
  const Polynomial t2 = x * y * (x * x + y * y - 3) - (x * x * y * y + x * x + y * y - 3) * z + (x * y * z * z).scaled(2) -
                        z * z * z;
  const Polynomial t3 = x * y * (x * x + y * y - 3) -
                        (pow(x, 4) + pow(y, 4) + (x * x * y * y).scaled(3) - (x * x).scaled(5) - (y * y).scaled(5) + 5) * z +
                        (x * y * (x * x + y * y - 2)).scaled(2) * z * z -
                        (x * x * y * y + (x * x).scaled(2) + (y * y).scaled(2) - 5) * pow(z, 3) +
                        (x * y * pow(z, 4)).scaled(2) - pow(z, 5);
  add("P(a b a B A B)", P("abaBAB"), t1);
  add("P(a B a b A B)", P("aBabAB"), t2);
  add("P(a b a B A B a b A B)", P("abaBABabAB"), t3);

  // Note the sign: gamma - 2 here, not 2 - gamma.
  add("P(a b a B A B a b A B) - P(b a B A B a) = (gamma - 2)(xy - gamma z)", P("abaBABabAB") - P("baBABa"),
      (g - 2) * (x * y - g * z));
  add("P(a b a B A B) + P(a B a b A B) - P(b a B^2) - P(B a) = (gamma - 2)(xy - 2z)",
      P("abaBAB") + P("aBabAB") - P("baB^2") - P("Ba"), (g - 2) * (x * y - z.scaled(2)));
  return out;
}

}  // namespace charvar
