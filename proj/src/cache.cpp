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

#include "charvar/cache.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "charvar/polynomial_json.hpp"

namespace charvar {

namespace {

// FNV-1a, stable across builds and platforms.
std::string checksum(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::string digest(const WordCharPolys& w) { return checksum(to_string(w.standard) + "|" + to_string(w.conjugate)); }

}  // namespace

WordPolyCache::WordPolyCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path WordPolyCache::entry_path(long p, long m) const {
  return dir_ / ("b" + std::to_string(2 * p) + "_" + std::to_string(m) + "_v" + std::to_string(TraceEngine::kVersion) +
                 ".json");
}

std::optional<WordCharPolys> WordPolyCache::load(long p, long m) const {
  const auto path = entry_path(p, m);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("p").get<long>() != p || j.at("m").get<long>() != m ||
        j.at("engine_version").get<int>() != TraceEngine::kVersion) {
      throw CacheCorruptError("key fields do not match the file name");
    }
    WordCharPolys w{polynomial_from_json(j.at("standard")), polynomial_from_json(j.at("conjugate"))};
    if (j.at("checksum").get<std::string>() != digest(w)) throw CacheCorruptError("checksum mismatch");
    return w;
  } catch (const CacheCorruptError& e) {
    throw CacheCorruptError("corrupt cache entry " + path.string() + ": " + e.what());
  } catch (const std::exception& e) {
    throw CacheCorruptError("corrupt cache entry " + path.string() + ": " + e.what());
  }
}

void WordPolyCache::store(long p, long m, const WordCharPolys& polys) const {
  std::filesystem::create_directories(dir_);
  const nlohmann::json j{
      {"p", p},
      {"m", m},
      {"engine_version", TraceEngine::kVersion},
      {"standard", to_json(polys.standard)},
      {"conjugate", to_json(polys.conjugate)},
      {"checksum", digest(polys)},
  };
  const auto path = entry_path(p, m);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

WordPolySource cached_word_source(std::filesystem::path dir) {
  return [cache = WordPolyCache(std::move(dir)), direct = direct_word_source()](long p, long m) {
    if (auto hit = cache.load(p, m)) return std::move(*hit);
    WordCharPolys w = direct(p, m);
    cache.store(p, m, w);
    return w;
  };
}

}  // namespace charvar
