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

#include "charvar/links.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "charvar/chebyshev.hpp"

namespace charvar {

namespace {

std::vector<long> parse_ints(std::string_view text, std::size_t count, std::string_view what) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    long v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc()) throw std::invalid_argument("bad integer in " + std::string(what) + " parameters");
    out.push_back(v);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw std::invalid_argument("expected ',' in " + std::string(what) + " parameters");
    ++pos;
  }
  if (out.size() != count) {
    throw std::invalid_argument(std::string(what) + " takes " + std::to_string(count) + " parameter(s)");
  }
  return out;
}

// Keeps Chebyshev indices within something the ring can hold.
constexpr long kMaxParameter = 10'000;

void check_range(long v) {
  if (v > kMaxParameter || v < -kMaxParameter) throw std::invalid_argument("link parameter out of range");
}

}  // namespace

void validate(const TwoBridge& link) {
  if (!(link.p > link.m && link.m > 0)) throw std::invalid_argument("two-bridge link needs p > m > 0");
  if (link.m % 2 == 0) throw std::invalid_argument("two-bridge link needs m odd");
  if (std::gcd(link.p, link.m) != 1) throw std::invalid_argument("two-bridge link needs gcd(p, m) = 1");
  check_range(link.p);
}

TwoBridge as_two_bridge(const TwistedWhitehead& link) {
  if (link.k < 0) throw std::invalid_argument("twisted Whitehead link needs k >= 0");
  return {2 * link.k + 2, 2 * link.k + 1};
}

LinkSpec parse_link(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("link spec must look like family:params");
  const std::string_view family = text.substr(0, colon);
  const std::string_view params = text.substr(colon + 1);
  if (family == "twobridge") {
    const auto v = parse_ints(params, 2, family);
    TwoBridge link{v[0], v[1]};
    validate(link);
    return link;
  }
  if (family == "pretzel") {
    const auto v = parse_ints(params, 2, family);
    check_range(v[0]);
    check_range(v[1]);
    return Pretzel{v[0], v[1]};
  }
  if (family == "whitehead") {
    const auto v = parse_ints(params, 1, family);
    check_range(v[0]);
    TwistedWhitehead link{v[0]};
    as_two_bridge(link);
    return link;
  }
  throw std::invalid_argument("unknown link family '" + std::string(family) + "'");
}

std::string to_string(const LinkSpec& link) {
  struct Visitor {
    std::string operator()(const TwoBridge& l) const {
      return "twobridge:" + std::to_string(l.p) + "," + std::to_string(l.m);
    }
    std::string operator()(const Pretzel& l) const { return "pretzel:" + std::to_string(l.m) + "," + std::to_string(l.n); }
    std::string operator()(const TwistedWhitehead& l) const { return "whitehead:" + std::to_string(l.k); }
  };
  return std::visit(Visitor{}, link);
}

GroupWord riley_word(long p, long m) {
  validate({p, m});
  std::vector<Syllable> s;
  s.reserve(static_cast<std::size_t>(2 * p - 1));
  for (long j = 1; j <= 2 * p - 1; ++j) {
    // m j and 2p are positive, so integer division is the floor
    const long e = ((m * j) / (2 * p)) % 2 == 0 ? 1 : -1;
    s.push_back({j % 2 == 1 ? Gen::b : Gen::a, e});
  }
  return GroupWord(s);
}

GroupWord thm2_block_word(long n) {
  const GroupWord a = GroupWord::gen(Gen::a);
  const GroupWord b = GroupWord::gen(Gen::b);
  return (b * a).pow(n) * (b.inverse() * a.inverse()).pow(n) * b.inverse() * (a * b).pow(n);
}

GroupWord whitehead_block_word(long n) {
  const GroupWord a = GroupWord::gen(Gen::a);
  const GroupWord b = GroupWord::gen(Gen::b);
  const GroupWord A = a.inverse();
  const GroupWord B = b.inverse();
  return (b * a * B * A).pow(n) * a * (A * B * a * b).pow(n);
}

WordCharPolys word_char_polys(long p, long m, TraceEngine& engine) {
  const GroupWord w = riley_word(p, m);
  const GroupWord a = GroupWord::gen(Gen::a);
  const GroupWord b = GroupWord::gen(Gen::b);
  const Polynomial base = engine.trace(w * b.inverse());
  return {engine.trace(a * w * a.inverse() * b.inverse()) - base, engine.trace(a.inverse() * w * a * b.inverse()) - base};
}

CharPoly char_poly_twobridge(long p, long m) {
  TraceEngine engine;
  return {word_char_polys(p, m, engine).standard, std::nullopt, false};
}

Polynomial pretzel_beta() {
  const Polynomial x = var(Var::x);
  const Polynomial y = var(Var::y);
  const Polynomial z = var(Var::z);
  return x * y * z + 2 - y * y - z * z;
}

Polynomial pretzel_alpha(long m) {
  const Polynomial beta = pretzel_beta();
  const Polynomial xz_y = var(Var::x) * var(Var::z) - var(Var::y);
  return var(Var::y) * cheb_at(m - 1, beta) - xz_y * cheb_at(m - 2, beta);
}

CharPoly pretzel_char_poly(long m, long n) {
  const Polynomial beta = pretzel_beta();
  const Polynomial alpha = pretzel_alpha(m);
  const Polynomial xz_y = var(Var::x) * var(Var::z) - var(Var::y);
  Polynomial q = xz_y * cheb_at(n - 1, alpha) - cheb_diff_at(m, beta) * cheb_at(n - 2, alpha);
  CharPoly out;
  out.full = (gamma_poly() - 2) * q;
  out.degenerate = m == 0 && n == -1;
  out.nonabelian = std::move(q);
  return out;
}

Polynomial thm2_Q(long p) {
  if (p <= 3 || p % 3 == 0) throw std::invalid_argument("thm2_Q needs p > 3 with p not divisible by 3");
  const Polynomial x = var(Var::x);
  const Polynomial y = var(Var::y);
  const Polynomial z = var(Var::z);
  const long n = p / 3;
  const Polynomial sn = cheb_at(n, z);
  const Polynomial sn1 = cheb_at(n - 1, z);
  const Polynomial squares = sn * sn + sn1 * sn1;
  if (p % 3 == 1) return (x * x + y * y) * sn * sn1 * sn1 - x * y * sn1 * squares + cheb_at(3 * n, z);
  return (x * x + y * y) * sn * sn * sn1 - x * y * sn * squares + cheb_at(3 * n + 1, z);
}

WhiteheadFactors thm3_factors(long k) {
  if (k < 0) throw std::invalid_argument("thm3_factors needs k >= 0");
  const Polynomial x = var(Var::x);
  const Polynomial y = var(Var::y);
  const Polynomial z = var(Var::z);
  const Polynomial g = gamma_poly();
  WhiteheadFactors f;
  f.reducible = g - 2;
  f.odd = k % 2 == 1;
  if (f.odd) {
    f.n = (k + 1) / 2;
    f.cheb_univariate = cheb(f.n - 1);
    f.Q = (x * y - g * z) * cheb_at(f.n - 1, g) - (x * y - z.scaled(2)) * cheb_at(f.n - 2, g);
  } else {
    f.n = k / 2;
    f.cheb_univariate = cheb_diff(f.n);
    f.Q = z * cheb_at(f.n, g) - (x * y - z) * cheb_at(f.n - 1, g);
  }
  f.cheb_factor = substitute(f.cheb_univariate, Var::t, g);
  return f;
}

}  // namespace charvar
