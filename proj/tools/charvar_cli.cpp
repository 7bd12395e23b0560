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

// Command-line front end. Talks to the library only through charvar.h.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charvar/charvar.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr long kMaxRangePoints = 100000;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  long lo = 0;
  long hi = 0;
};

Range parse_range(const std::string& text, const std::string& flag) {
  auto to_long = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw InvalidInput(flag + ": '" + text + "' is not an integer or a range a..b");
    return v;
  };
  Range r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = to_long(text);
  } else {
    r.lo = to_long(text.substr(0, dots));
    r.hi = to_long(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw InvalidInput(flag + ": empty range " + text);
  if (r.hi - r.lo >= kMaxRangePoints) throw InvalidInput(flag + ": range " + text + " is too large");
  return r;
}

struct Config {
  std::string format = "text";
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool no_cache = false;
  std::string cache_dir;

  const char* cache() const {
    if (no_cache || cache_dir.empty()) return nullptr;
    return cache_dir.c_str();
  }
  bool json() const { return format == "json"; }
};

struct PolyDeleter {
  void operator()(charvar_poly* p) const { charvar_poly_free(p); }
};
struct ReportDeleter {
  void operator()(charvar_report* r) const { charvar_report_free(r); }
};
using PolyPtr = std::unique_ptr<charvar_poly, PolyDeleter>;
using ReportPtr = std::unique_ptr<charvar_report, ReportDeleter>;

// Library failure, carrying the exit code it maps to.
struct ApiError : std::runtime_error {
  int exit_code;
  ApiError(const std::string& what, int code) : std::runtime_error(what), exit_code(code) {}
};

void check(charvar_status s) {
  if (s == CHARVAR_OK) return;
  const bool input = s == CHARVAR_ERR_INVALID_ARGUMENT || s == CHARVAR_ERR_PARSE || s == CHARVAR_ERR_UNSUPPORTED;
  throw ApiError(std::string(charvar_status_name(s)) + ": " + charvar_last_error(), input ? kExitInvalid : kExitMismatch);
}

std::string take(char* s) {
  std::string out(s);
  charvar_string_free(s);
  return out;
}

std::string poly_text(const charvar_poly* p) {
  char* s = nullptr;
  check(charvar_poly_to_text(p, &s));
  return take(s);
}

nlohmann::json poly_json(const charvar_poly* p) {
  char* s = nullptr;
  check(charvar_poly_to_json(p, &s));
  return nlohmann::json::parse(take(s));
}

nlohmann::json report_json(const charvar_report* r) {
  char* s = nullptr;
  check(charvar_report_to_json(r, &s));
  return nlohmann::json::parse(take(s));
}

std::string report_text(const charvar_report* r) {
  char* s = nullptr;
  check(charvar_report_to_text(r, &s));
  return take(s);
}

int cmd_trace(const Config& cfg, const std::string& word) {
  charvar_poly* raw = nullptr;
  check(charvar_trace(word.c_str(), &raw));
  PolyPtr p(raw);
  if (cfg.json()) {
    std::cout << nlohmann::json{{"word", word}, {"trace", poly_json(p.get())}}.dump(2) << "\n";
  } else {
    std::cout << poly_text(p.get()) << "\n";
  }
  return kExitOk;
}

int cmd_charpoly(const Config& cfg, const std::string& link) {
  charvar_poly* full_raw = nullptr;
  charvar_poly* na_raw = nullptr;
  check(charvar_charpoly(link.c_str(), cfg.cache(), &full_raw, &na_raw));
  PolyPtr full(full_raw);
  PolyPtr na(na_raw);
  if (cfg.json()) {
    nlohmann::json j{{"link", link}, {"full", poly_json(full.get())}};
    j["nonabelian"] = na ? poly_json(na.get()) : nlohmann::json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << poly_text(full.get()) << "\n";
    if (na) std::cout << "nonabelian factor: " << poly_text(na.get()) << "\n";
  }
  return kExitOk;
}

int cmd_components(const Config& cfg, const std::string& link) {
  charvar_report* raw = nullptr;
  check(charvar_components(link.c_str(), cfg.cache(), &raw));
  ReportPtr r(raw);
  if (cfg.json()) {
    std::cout << report_json(r.get()).dump(2) << "\n";
  } else {
    std::cout << report_text(r.get());
  }
  return charvar_report_ok(r.get()) ? kExitOk : kExitMismatch;
}

int cmd_residual(const Config& cfg, const std::string& link) {
  // twobridge:p,m only; the library validates it.
  const auto colon = link.find(':');
  const auto comma = link.find(',');
  if (link.rfind("twobridge:", 0) != 0 || comma == std::string::npos) {
    throw InvalidInput("residual needs a link of the form twobridge:p,m");
  }
  long p = 0;
  long m = 0;
  try {
    p = std::stol(link.substr(colon + 1, comma - colon - 1));
    m = std::stol(link.substr(comma + 1));
  } catch (const std::exception&) {
    throw InvalidInput("residual needs a link of the form twobridge:p,m");
  }
  double residual = 0;
  check(charvar_relator_residual(p, m, cfg.seed, &residual));
  const bool ok = residual < 1e-6;
  if (cfg.json()) {
    std::cout << nlohmann::json{{"link", link}, {"seed", cfg.seed}, {"residual", residual}, {"ok", ok}}.dump(2) << "\n";
  } else {
    std::cout << link << " seed " << cfg.seed << ": residual " << std::scientific << std::setprecision(3) << residual
              << (ok ? " ok" : " MISMATCH") << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

struct Point {
  long a = 0;
  long b = 0;
  std::string label;
};

struct Outcome {
  ReportPtr report;
  std::string error;
  int error_code = kExitOk;
};

int cmd_verify(const Config& cfg, int theorem, const std::optional<std::string>& k, const std::optional<std::string>& p,
               const std::optional<std::string>& m, const std::optional<std::string>& n) {
  std::vector<Point> points;
  if (theorem == 1) {
    if (k || p) throw InvalidInput("verify 1 takes --m and --n");
    const Range mr = parse_range(m.value_or("-4..4"), "--m");
    const Range nr = parse_range(n.value_or("-4..4"), "--n");
    if ((mr.hi - mr.lo + 1) * (nr.hi - nr.lo + 1) > kMaxRangePoints) throw InvalidInput("parameter grid is too large");
    for (long i = mr.lo; i <= mr.hi; ++i) {
      for (long j = nr.lo; j <= nr.hi; ++j) points.push_back({i, j, "m=" + std::to_string(i) + " n=" + std::to_string(j)});
    }
  } else if (theorem == 2) {
    if (k || m || n) throw InvalidInput("verify 2 takes --p");
    const Range pr = parse_range(p.value_or("4..22"), "--p");
    // Theorem 2 covers p > 3 with 3 not dividing p; other values are skipped.
    for (long i = pr.lo; i <= pr.hi; ++i) {
      if (i > 3 && i % 3 != 0) points.push_back({i, 0, "p=" + std::to_string(i)});
    }
    if (points.empty()) throw InvalidInput("--p range contains no p > 3 with 3 not dividing p");
  } else {
    if (p || m || n) throw InvalidInput("verify 3 takes --k");
    const Range kr = parse_range(k.value_or("0..10"), "--k");
    for (long i = kr.lo; i <= kr.hi; ++i) points.push_back({i, 0, "k=" + std::to_string(i)});
  }

  std::vector<Outcome> results(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      charvar_report* raw = nullptr;
      const charvar_status s = charvar_verify(theorem, points[i].a, points[i].b, cfg.cache(), &raw);
      if (s == CHARVAR_OK) {
        results[i].report.reset(raw);
      } else {
        results[i].error = std::string(charvar_status_name(s)) + ": " + charvar_last_error();
        const bool input = s == CHARVAR_ERR_INVALID_ARGUMENT || s == CHARVAR_ERR_PARSE || s == CHARVAR_ERR_UNSUPPORTED;
        results[i].error_code = input ? kExitInvalid : kExitMismatch;
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(points.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int exit_code = kExitOk;
  std::size_t passed = 0;
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream table;
  table << std::left << std::setw(14) << "point" << std::setw(8) << "count" << std::setw(10) << "expected"
        << std::setw(6) << "sign" << std::setw(9) << "product" << std::setw(14) << "certificates" << "status\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Outcome& o = results[i];
    if (!o.report) {
      exit_code = std::max(exit_code, o.error_code);
      rows.push_back({{"point", points[i].label}, {"error", o.error}});
      table << std::setw(14) << points[i].label << "ERROR " << o.error << "\n";
      continue;
    }
    const charvar_report* r = o.report.get();
    const bool ok = charvar_report_ok(r);
    if (ok) {
      ++passed;
    } else {
      exit_code = std::max(exit_code, kExitMismatch);
    }
    nlohmann::json j = report_json(r);
    j["point"] = points[i].label;
    rows.push_back(std::move(j));
    table << std::setw(14) << points[i].label << std::setw(8) << charvar_report_component_count(r) << std::setw(10)
          << charvar_report_expected_count(r) << std::setw(6) << charvar_report_sign(r) << std::setw(9)
          << (charvar_report_product_check(r) ? "ok" : "FAIL") << std::setw(14)
          << (charvar_report_certificates_ok(r) ? "ok" : "FAIL") << (ok ? "pass" : "FAIL") << "\n";
  }
  if (cfg.json()) {
    std::cout << nlohmann::json{{"theorem", theorem}, {"passed", passed}, {"total", points.size()}, {"rows", rows}}.dump(2)
              << "\n";
  } else {
    std::cout << table.str() << passed << "/" << points.size() << " passed\n";
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character varieties of two-bridge, pretzel and twisted Whitehead links"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for numeric checks");
  app.add_option("--jobs", cfg.jobs, "Worker threads for verify")->check(CLI::Range(1u, 256u));
  app.add_flag("--no-cache", cfg.no_cache, "Ignore the on-disk cache");
  app.add_option("--cache-dir", cfg.cache_dir, "Cache directory for word-derived character polynomials")
      ->envname("CHARVAR_CACHE_DIR");

  std::string word;
  auto* trace = app.add_subcommand("trace", "Trace polynomial of a word in a, b (A, B are inverses)");
  trace->add_option("word", word, "Word, e.g. abAB or (ab)^3B")->required();

  std::string link;
  auto* charpoly = app.add_subcommand("charpoly", "Character polynomial of a link");
  charpoly->add_option("link", link, "twobridge:p,m | pretzel:m,n | whitehead:k")->required();
  auto* components = app.add_subcommand("components", "Irreducible components with certificates");
  components->add_option("link", link, "twobridge:p,m | pretzel:m,n | whitehead:k")->required();
  auto* residual = app.add_subcommand("residual", "Numeric relator residual at a seeded random representation");
  residual->add_option("link", link, "twobridge:p,m")->required();

  int theorem = 0;
  std::optional<std::string> k, p, m, n;
  auto* verify = app.add_subcommand("verify", "Sweep a theorem over a parameter range");
  verify->add_option("theorem", theorem, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
  verify->add_option("--k", k, "Range a..b for theorem 3");
  verify->add_option("--p", p, "Range a..b for theorem 2");
  verify->add_option("--m", m, "Range a..b for theorem 1");
  verify->add_option("--n", n, "Range a..b for theorem 1");

  // Global options may appear after the subcommand too.
  for (auto* sub : {trace, charpoly, components, residual, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*trace) return cmd_trace(cfg, word);
    if (*charpoly) return cmd_charpoly(cfg, link);
    if (*components) return cmd_components(cfg, link);
    if (*residual) return cmd_residual(cfg, link);
    return cmd_verify(cfg, theorem, k, p, m, n);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
