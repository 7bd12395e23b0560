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

#ifndef CHARVAR_WORD_HPP
#define CHARVAR_WORD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace charvar {

enum class Gen : std::uint8_t { a, b };

struct Syllable {
  Gen gen;
  long exp;  // nonzero

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Element of the free group on a, b, stored freely reduced as syllables.
class GroupWord {
 public:
  GroupWord() = default;
  /// Freely reduces the input; zero exponents are dropped.
  explicit GroupWord(const std::vector<Syllable>& syllables);

  static GroupWord gen(Gen g, long e = 1);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool is_identity() const noexcept { return syllables_.empty(); }
  /// Number of letters, i.e. the sum of |exponent|.
  long length() const noexcept;

  GroupWord inverse() const;
  GroupWord pow(long n) const;

  friend GroupWord operator*(const GroupWord& u, const GroupWord& v);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  void append(Syllable s);

  std::vector<Syllable> syllables_;
};

class WordParseError : public std::invalid_argument {
 public:
  WordParseError(const std::string& what, std::size_t pos);
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

/// Grammar (whitespace ignored everywhere):
///   word   := factor*
///   factor := atom ('^' integer)?
///   atom   := 'a' | 'b' | 'A' | 'B' | '(' word ')'
/// Capitals are inverses, so "A^2" is a^-2 and "(ab)^-1" is B A.
/// Throws WordParseError on an unknown character, malformed exponent or
/// unbalanced parenthesis.
GroupWord parse_word(std::string_view text);

/// Compact rendering that parse_word accepts, e.g. "a^-2bab^3".
/// The identity renders as the empty string.
std::string to_string(const GroupWord& w);

}  // namespace charvar

#endif  // CHARVAR_WORD_HPP
