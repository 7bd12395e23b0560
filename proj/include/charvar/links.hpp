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

#ifndef CHARVAR_LINKS_HPP
#define CHARVAR_LINKS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "charvar/polynomial.hpp"
#include "charvar/trace.hpp"
#include "charvar/word.hpp"

namespace charvar {

/// b(2p, m): p > m > 0, m odd, gcd(p, m) = 1.
struct TwoBridge {
  long p;
  long m;
  friend bool operator==(const TwoBridge&, const TwoBridge&) = default;
};

/// (-2, 2m+1, 2n) pretzel link; any integers.
struct Pretzel {
  long m;
  long n;
  friend bool operator==(const Pretzel&, const Pretzel&) = default;
};

/// k-twisted Whitehead link W_k = b(4k+4, 2k+1), k >= 0.
struct TwistedWhitehead {
  long k;
  friend bool operator==(const TwistedWhitehead&, const TwistedWhitehead&) = default;
};

using LinkSpec = std::variant<TwoBridge, Pretzel, TwistedWhitehead>;

/// "twobridge:p,m", "pretzel:m,n" or "whitehead:k". Validates parameters;
/// throws std::invalid_argument.
LinkSpec parse_link(std::string_view text);
std::string to_string(const LinkSpec& link);

/// Throws std::invalid_argument unless p > m > 0, m odd, gcd(p, m) = 1.
void validate(const TwoBridge& link);
TwoBridge as_two_bridge(const TwistedWhitehead& link);

/// w = b^e1 a^e2 ... a^e(2p-2) b^e(2p-1), e_j = (-1)^floor(mj / 2p).
GroupWord riley_word(long p, long m);

/// (ba)^n (BA)^n B (ab)^n, the Riley word of b(6n+2, 3).
GroupWord thm2_block_word(long n);
/// (baBA)^n a (ABab)^n, the Riley word of W_{2n-1} up to free reduction.
GroupWord whitehead_block_word(long n);

struct CharPoly {
  Polynomial full;
  /// Cofactor of gamma - 2 when the construction provides it.
  std::optional<Polynomial> nonabelian;
  /// Set for the pretzel (0, -1), the unlink, where Q vanishes identically.
  bool degenerate = false;
};

/// Both word forms of the two-bridge character polynomial:
/// standard = P(a w A B) - P(w B), conjugate = P(A w a B) - P(w B).
struct WordCharPolys {
  Polynomial standard;
  Polynomial conjugate;
};

WordCharPolys word_char_polys(long p, long m, TraceEngine& engine);

/// full = P(a w A B) - P(w B); nonabelian left empty.
CharPoly char_poly_twobridge(long p, long m);

/// beta = xyz + 2 - y^2 - z^2.
Polynomial pretzel_beta();
/// alpha = y S_{m-1}(beta) - (xz - y) S_{m-2}(beta).
Polynomial pretzel_alpha(long m);
/// Q = (xz - y) S_{n-1}(alpha) - (S_m(beta) - S_{m-1}(beta)) S_{n-2}(alpha),
/// full = (gamma - 2) Q.
CharPoly pretzel_char_poly(long m, long n);

/// Q_p for b(2p, 3); p > 3 and p not divisible by 3, else
/// std::invalid_argument.
Polynomial thm2_Q(long p);

struct WhiteheadFactors {
  long n = 0;
  bool odd = false;             // k = 2n - 1
  Polynomial reducible;         // gamma - 2
  Polynomial cheb_univariate;   // S_{n-1}(t) (odd) or S_n(t) - S_{n-1}(t) (even)
  Polynomial cheb_factor;       // cheb_univariate at t = gamma
  Polynomial Q;
};

/// Factors of the W_k character polynomial; k >= 0.
WhiteheadFactors thm3_factors(long k);

}  // namespace charvar

#endif  // CHARVAR_LINKS_HPP
