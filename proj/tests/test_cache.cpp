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


#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "charvar/cache.hpp"
#include "test_util.hpp"

namespace charvar {
namespace {

namespace fs = std::filesystem;

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("charvar_cache_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string read(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
  void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

  fs::path dir_;
};

TEST_F(CacheTest, StoreAndLoad) {
  const WordPolyCache cache(dir_);
  EXPECT_FALSE(cache.load(4, 3).has_value());
  TraceEngine engine;
  const WordCharPolys w = word_char_polys(4, 3, engine);
  cache.store(4, 3, w);
  const auto back = cache.load(4, 3);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->standard, w.standard);
  EXPECT_EQ(back->conjugate, w.conjugate);
  EXPECT_FALSE(cache.load(5, 3).has_value());
}

TEST_F(CacheTest, SourceFillsCache) {
  const WordPolySource source = cached_word_source(dir_);
  const WordCharPolys first = source(5, 3);
  EXPECT_TRUE(fs::exists(WordPolyCache(dir_).entry_path(5, 3)));
  const WordCharPolys second = source(5, 3);
  EXPECT_EQ(first.standard, second.standard);
  EXPECT_TRUE(verify_thm2(5, source).ok());
}

TEST_F(CacheTest, EditedEntryIsRejected) {
  const WordPolyCache cache(dir_);
  TraceEngine engine;
  cache.store(4, 3, word_char_polys(4, 3, engine));
  const fs::path path = cache.entry_path(4, 3);
  auto j = nlohmann::json::parse(read(path));
  // Flip one coefficient but keep valid JSON.
  auto& coeff = j["standard"]["terms"][0]["coeff"];
  coeff = coeff.get<std::string>() == "1" ? "2" : "1";
  write(path, j.dump());
  EXPECT_THROW(cache.load(4, 3), CacheCorruptError);
  EXPECT_THROW(cached_word_source(dir_)(4, 3), CacheCorruptError);
}

TEST_F(CacheTest, GarbageEntryIsRejected) {
  const WordPolyCache cache(dir_);
  fs::create_directories(dir_);
  write(cache.entry_path(4, 3), "{not json");
  EXPECT_THROW(cache.load(4, 3), CacheCorruptError);
  write(cache.entry_path(4, 3), R"({"p": 4, "m": 5, "engine_version": 1})");
  EXPECT_THROW(cache.load(4, 3), CacheCorruptError);
}

}  // namespace
}  // namespace charvar
