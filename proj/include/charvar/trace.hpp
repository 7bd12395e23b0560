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

#ifndef CHARVAR_TRACE_HPP
#define CHARVAR_TRACE_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "charvar/polynomial.hpp"
#include "charvar/word.hpp"

namespace charvar {

/// x^2 + y^2 + z^2 - xyz - 2, the trace of the commutator aba^-1b^-1.
Polynomial gamma_poly();

/// Trace polynomials P_u(x, y, z) with x = tr a, y = tr b, z = tr ab.
///
/// Words are reduced cyclically and memoized under the least rotation of
/// the word and of its inverse. The reduction rules, in order:
///   block powers X^n U       -> S_n(tr X) tr U - S_{n-1}(tr X) tr(X^-1 U)
///   syllables g^e U, |e| > 1 -> S_|e|(tr g) tr U - S_{|e|-1}(tr g) tr(g^-s U)
///   g P g Q                  -> tr(gP) tr(gQ) - tr(P Q^-1)
/// Every rule strictly shortens the words it recurses on, except the
/// commutator-shaped base g h g^-1 h^-1, which rewrites to squares first.
/// Not thread-safe; use one engine per thread.
class TraceEngine {
 public:
  static constexpr int kVersion = 1;

  Polynomial trace(const GroupWord& w);
  /// Letters a, b, A, B only (A = a^-1). Need not be reduced.
  Polynomial trace_letters(const std::string& letters);

  std::size_t cache_size() const noexcept { return memo_.size(); }
  std::size_t cache_hits() const noexcept { return hits_; }
  void clear() { memo_.clear(); hits_ = 0; }

 private:
  Polynomial compute(const std::string& w);

  std::unordered_map<std::string, Polynomial> memo_;
  std::size_t hits_ = 0;
};

/// Trace polynomial through a per-thread engine.
Polynomial trace_poly(const GroupWord& w);

/// Independent check: multiplies A = [[x,-1],[1,0]] and B = [[0,c],[-1/c,y]]
/// over Z[x,y][c, 1/c] and rewrites the symmetric trace in z = c + 1/c.
/// Throws std::logic_error if the rewrite leaves a residue.
Polynomial trace_poly_oracle(const GroupWord& w);

/// Letter string of a word, e.g. "abAB".
std::string to_letters(const GroupWord& w);

struct IdentityCheck {
  std::string name;
  Polynomial computed;
  Polynomial expected;
  bool ok;
};

/// The six trace differences used for b(2p,3), the three long traces used
/// for twisted Whitehead links and the two differences derived from them,
/// each computed with the trace engine and compared exactly.
std::vector<IdentityCheck> trace_identity_suite();

}  // namespace charvar

#endif  // CHARVAR_TRACE_HPP
