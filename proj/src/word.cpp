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

#include "charvar/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace charvar {

namespace {

// Guards against "(ab)^999999999" style inputs.
constexpr long kMaxLetters = 1'000'000;

}  // namespace

GroupWord::GroupWord(const std::vector<Syllable>& syllables) {
  for (const auto& s : syllables) append(s);
}

GroupWord GroupWord::gen(Gen g, long e) { return GroupWord({{g, e}}); }

long GroupWord::length() const noexcept {
  long n = 0;
  for (const auto& s : syllables_) n += std::labs(s.exp);
  return n;
}

void GroupWord::append(Syllable s) {
  if (s.exp == 0) return;
  if (!syllables_.empty() && syllables_.back().gen == s.gen) {
    syllables_.back().exp += s.exp;
    if (syllables_.back().exp == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back(s);
}

GroupWord GroupWord::inverse() const {
  GroupWord r;
  r.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) r.syllables_.push_back({it->gen, -it->exp});
  return r;
}

GroupWord GroupWord::pow(long n) const {
  const GroupWord base = n < 0 ? inverse() : *this;
  GroupWord r;
  for (long i = 0; i < std::labs(n); ++i) r = r * base;
  return r;
}

GroupWord operator*(const GroupWord& u, const GroupWord& v) {
  GroupWord r = u;
  for (const auto& s : v.syllables_) r.append(s);
  return r;
}

WordParseError::WordParseError(const std::string& what, std::size_t pos)
    : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupWord parse() {
    GroupWord w = word();
    skip_space();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') throw WordParseError("unbalanced ')'", pos_);
      throw WordParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return w;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  GroupWord word() {
    GroupWord w;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') return w;
      w = w * factor();
      if (w.length() > kMaxLetters) throw WordParseError("word too long", pos_);
    }
  }

  GroupWord factor() {
    GroupWord base = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const long e = exponent();
      if (std::labs(e) > kMaxLetters || base.length() * std::labs(e) > kMaxLetters) {
        throw WordParseError("exponent too large", pos_);
      }
      return base.pow(e);
    }
    return base;
  }

  GroupWord atom() {
    const std::size_t start = pos_;
    const char c = text_[pos_++];
    switch (c) {
      case 'a': return GroupWord::gen(Gen::a, 1);
      case 'A': return GroupWord::gen(Gen::a, -1);
      case 'b': return GroupWord::gen(Gen::b, 1);
      case 'B': return GroupWord::gen(Gen::b, -1);
      case '(': {
        GroupWord inner = word();
        if (pos_ >= text_.size()) throw WordParseError("unbalanced '('", start);
        ++pos_;  // ')'
        return inner;
      }
      default:
        throw WordParseError(std::string("unknown character '") + c + "'", start);
    }
  }

  long exponent() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ < text_.size() && text_[pos_] == '{') {
      ++pos_;
      const long e = exponent();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '}') throw WordParseError("malformed exponent", start);
      ++pos_;
      return negative ? -e : e;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw WordParseError("malformed exponent", start);
    }
    long value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) throw WordParseError("malformed exponent", start);
    pos_ += static_cast<std::size_t>(ptr - first);
    return negative ? -value : value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupWord parse_word(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupWord& w) {
  std::string out;
  for (const auto& s : w.syllables()) {
    out += s.gen == Gen::a ? 'a' : 'b';
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

}  // namespace charvar
