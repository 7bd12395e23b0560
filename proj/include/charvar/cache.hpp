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

#ifndef CHARVAR_CACHE_HPP
#define CHARVAR_CACHE_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>

#include "charvar/links.hpp"
#include "charvar/varieties.hpp"

namespace charvar {

/// A cache entry exists but cannot be trusted.
class CacheCorruptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk store of word-derived character polynomials, one JSON file per
/// (p, m, engine version). Each entry carries a checksum of its polynomial
/// text so that edited entries are rejected rather than used.
class WordPolyCache {
 public:
  explicit WordPolyCache(std::filesystem::path dir);

  std::filesystem::path entry_path(long p, long m) const;
  /// nullopt when there is no entry; CacheCorruptError when there is a bad one.
  std::optional<WordCharPolys> load(long p, long m) const;
  void store(long p, long m, const WordCharPolys& polys) const;

 private:
  std::filesystem::path dir_;
};

/// Reads through the cache, computing and storing missing entries.
WordPolySource cached_word_source(std::filesystem::path dir);

}  // namespace charvar

#endif  // CHARVAR_CACHE_HPP
