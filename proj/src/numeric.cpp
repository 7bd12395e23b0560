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

#include "charvar/numeric.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "charvar/links.hpp"
#include "charvar/trace.hpp"

namespace charvar {

namespace {

constexpr double kMinDet = 1e-6;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  Complex complex() {
    const double re = uniform();
    return {re, uniform()};
  }

  Mat2C sl2() {
    for (;;) {
      Mat2C m{complex(), complex(), complex(), complex()};
      const Complex det = m.det();
      if (std::abs(det) < kMinDet) continue;
      const Complex s = 1.0 / std::sqrt(det);
      return {m.a * s, m.b * s, m.c * s, m.d * s};
    }
  }

  Mat2C diagonal() {
    for (;;) {
      const Complex l = complex();
      if (std::abs(l) < kMinDet) continue;
      return {l, 0.0, 0.0, 1.0 / l};
    }
  }

 private:
  std::mt19937_64 gen_;
};

// The Riley-word traces reach 1e9 for p = 10 while the character polynomial
// has terms far larger than its value, so double evaluation loses the
// residual to cancellation. The residual is computed at 256 bits instead.
constexpr mp_bitcnt_t kResidualBits = 256;

struct Big {
  mpf_class re{0, kResidualBits};
  mpf_class im{0, kResidualBits};

  Big() = default;
  Big(const mpf_class& r, const mpf_class& i) : re(r, kResidualBits), im(i, kResidualBits) {}
  explicit Big(Complex c) : re(c.real(), kResidualBits), im(c.imag(), kResidualBits) {}

  friend Big operator+(const Big& a, const Big& b) { return {a.re + b.re, a.im + b.im}; }
  friend Big operator-(const Big& a, const Big& b) { return {a.re - b.re, a.im - b.im}; }
  friend Big operator*(const Big& a, const Big& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend Big operator/(const Big& a, const Big& b) {
    const mpf_class n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  double abs() const {
    const mpf_class n = sqrt(mpf_class(re * re + im * im, kResidualBits));
    return n.get_d();
  }
};

Big big_sqrt(const Big& z) {
  const mpf_class r = sqrt(mpf_class(z.re * z.re + z.im * z.im, kResidualBits));
  if (z.re >= 0) {
    const mpf_class u = sqrt(mpf_class((r + z.re) / 2, kResidualBits));
    if (u == 0) return {};
    return {u, z.im / (2 * u)};
  }
  mpf_class v = sqrt(mpf_class((r - z.re) / 2, kResidualBits));
  if (z.im < 0) v = -v;
  return {z.im / (2 * v), v};
}

using BigMat = std::array<Big, 4>;

BigMat mul(const BigMat& m, const BigMat& n) {
  return {m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3], m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3]};
}

// Rescaled so the determinant is 1 at full precision.
BigMat to_big(const Mat2C& m) {
  BigMat r{Big(m.a), Big(m.b), Big(m.c), Big(m.d)};
  const Big det = r[0] * r[3] - r[1] * r[2];
  const Big s = Big(Complex(1.0)) / big_sqrt(det);
  for (auto& e : r) e = e * s;
  return r;
}

Big big_trace(const GroupWord& w, const BigMat& A, const BigMat& B) {
  const BigMat Ai{A[3], Big() - A[1], Big() - A[2], A[0]};
  const BigMat Bi{B[3], Big() - B[1], Big() - B[2], B[0]};
  BigMat m{Big(Complex(1.0)), Big(), Big(), Big(Complex(1.0))};
  for (const auto& s : w.syllables()) {
    const BigMat& g = s.gen == Gen::a ? (s.exp > 0 ? A : Ai) : (s.exp > 0 ? B : Bi);
    for (long i = 0; i < std::labs(s.exp); ++i) m = mul(m, g);
  }
  return m[0] + m[3];
}

Big big_eval(const Polynomial& p, const std::array<Big, 3>& xyz) {
  const Exponents top = p.max_exponents();
  std::array<std::vector<Big>, 3> powers;
  for (std::size_t v = 0; v < 3; ++v) {
    powers[v].push_back(Big(Complex(1.0)));
    for (unsigned e = 1; e <= top[v]; ++e) powers[v].push_back(powers[v].back() * xyz[v]);
  }
  Big sum;
  for (const auto& t : p.terms()) {
    Big term = powers[0][t.mono[Var::x]] * powers[1][t.mono[Var::y]] * powers[2][t.mono[Var::z]];
    const mpf_class c(t.coeff, kResidualBits);
    sum = sum + Big(term.re * c, term.im * c);
  }
  return sum;
}

}  // namespace

double Mat2C::max_abs() const { return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}); }

RepPair random_rep(std::uint64_t seed) {
  Sampler s(seed);
  Mat2C A = s.sl2();
  return {A, s.sl2()};
}

RepPair random_diagonal_rep(std::uint64_t seed) {
  Sampler s(seed);
  Mat2C A = s.diagonal();
  return {A, s.diagonal()};
}

Assignment trace_coordinates(const RepPair& rep) {
  return Assignment{{Var::x, rep.A.trace()}, {Var::y, rep.B.trace()}, {Var::z, (rep.A * rep.B).trace()}};
}

Mat2C evaluate(const GroupWord& w, const RepPair& rep) {
  Mat2C m;
  const Mat2C Ai = rep.A.inverse();
  const Mat2C Bi = rep.B.inverse();
  for (const auto& s : w.syllables()) {
    const Mat2C& g = s.gen == Gen::a ? (s.exp > 0 ? rep.A : Ai) : (s.exp > 0 ? rep.B : Bi);
    for (long i = 0; i < std::labs(s.exp); ++i) m = m * g;
  }
  return m;
}

Complex commutator_trace_check(const RepPair& rep) {
  const Mat2C comm = rep.A * rep.B * rep.A.inverse() * rep.B.inverse();
  return comm.trace() - eval(gamma_poly(), trace_coordinates(rep));
}

double relator_residual(long p, long m, const RepPair& rep, const Polynomial& charpoly) {
  for (Var v : {Var::t, Var::w}) {
    if (charpoly.depends_on(v)) throw std::invalid_argument("character polynomial must be in x, y, z");
  }
  const GroupWord w = riley_word(p, m);
  const GroupWord a = GroupWord::gen(Gen::a);
  const GroupWord b = GroupWord::gen(Gen::b);
  const BigMat A = to_big(rep.A);
  const BigMat B = to_big(rep.B);
  const Big lhs = big_trace(a * w * a.inverse() * b.inverse(), A, B) - big_trace(w * b.inverse(), A, B);
  const std::array<Big, 3> xyz{A[0] + A[3], B[0] + B[3], big_trace(a * b, A, B)};
  return (lhs - big_eval(charpoly, xyz)).abs();
}

double relator_residual(long p, long m, const RepPair& rep) {
  return relator_residual(p, m, rep, char_poly_twobridge(p, m).full);
}

double max_entry(const RepPair& rep) { return std::max(rep.A.max_abs(), rep.B.max_abs()); }

}  // namespace charvar
