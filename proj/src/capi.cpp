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

#include "charvar/charvar.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "charvar/cache.hpp"
#include "charvar/gcd.hpp"
#include "charvar/links.hpp"
#include "charvar/numeric.hpp"
#include "charvar/polynomial_json.hpp"
#include "charvar/trace.hpp"
#include "charvar/varieties.hpp"
#include "charvar/word.hpp"

struct charvar_poly {
  charvar::Polynomial p;
};

struct charvar_report {
  charvar::ComponentReport r;
};

namespace {

using namespace charvar;

thread_local std::string last_error;

charvar_status fail(charvar_status s, const std::string& what) {
  last_error = what;
  return s;
}

// Runs f, mapping exceptions to status codes.
template <typename F>
charvar_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const CacheCorruptError& e) {
    return fail(CHARVAR_ERR_CACHE_CORRUPT, e.what());
  } catch (const WordParseError& e) {
    return fail(CHARVAR_ERR_PARSE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(CHARVAR_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CHARVAR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(CHARVAR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CHARVAR_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

WordPolySource source_for(const char* cache_dir) {
  if (cache_dir && *cache_dir) return cached_word_source(cache_dir);
  return direct_word_source();
}

charvar_status null_arg(const char* name) { return fail(CHARVAR_ERR_INVALID_ARGUMENT, std::string(name) + " is NULL"); }

charvar_status emit_report(ComponentReport r, charvar_report** out) {
  *out = new charvar_report{std::move(r)};
  return CHARVAR_OK;
}

}  // namespace

extern "C" {

const char* charvar_version(void) { return "1.0.0"; }

const char* charvar_last_error(void) { return last_error.c_str(); }

const char* charvar_status_name(charvar_status status) {
  switch (status) {
    case CHARVAR_OK: return "ok";
    case CHARVAR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CHARVAR_ERR_PARSE: return "parse error";
    case CHARVAR_ERR_UNSUPPORTED: return "unsupported";
    case CHARVAR_ERR_CACHE_CORRUPT: return "corrupt cache";
    case CHARVAR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void charvar_string_free(char* s) { std::free(s); }

charvar_status charvar_poly_from_json(const char* json, charvar_poly** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  return guarded([&] {
    try {
      *out = new charvar_poly{polynomial_from_json(nlohmann::json::parse(json))};
    } catch (const std::invalid_argument& e) {
      return fail(CHARVAR_ERR_PARSE, e.what());
    }
    return CHARVAR_OK;
  });
}

charvar_status charvar_poly_to_json(const charvar_poly* p, char** out) {
  if (!p) return null_arg("poly");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = dup(to_json(p->p).dump());
    return CHARVAR_OK;
  });
}

charvar_status charvar_poly_to_text(const charvar_poly* p, char** out) {
  if (!p) return null_arg("poly");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = dup(to_string(p->p));
    return CHARVAR_OK;
  });
}

int charvar_poly_equal(const charvar_poly* a, const charvar_poly* b) { return a && b && a->p == b->p ? 1 : 0; }

void charvar_poly_free(charvar_poly* p) { delete p; }

charvar_status charvar_trace(const char* word, charvar_poly** out) {
  if (!word) return null_arg("word");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new charvar_poly{trace_poly(parse_word(word))};
    return CHARVAR_OK;
  });
}

charvar_status charvar_charpoly(const char* link, const char* cache_dir, charvar_poly** full, charvar_poly** nonabelian) {
  if (!link) return null_arg("link");
  if (!full) return null_arg("full");
  return guarded([&] {
    const LinkSpec spec = parse_link(link);
    CharPoly cp;
    if (const auto* pz = std::get_if<Pretzel>(&spec)) {
      cp = pretzel_char_poly(pz->m, pz->n);
    } else {
      const TwoBridge tb = std::holds_alternative<TwoBridge>(spec) ? std::get<TwoBridge>(spec)
                                                                    : as_two_bridge(std::get<TwistedWhitehead>(spec));
      cp.full = source_for(cache_dir)(tb.p, tb.m).standard;
      cp.nonabelian = try_divide(cp.full, gamma_poly() - Polynomial(2));
    }
    *full = new charvar_poly{cp.full};
    if (nonabelian) *nonabelian = cp.nonabelian ? new charvar_poly{*cp.nonabelian} : nullptr;
    return CHARVAR_OK;
  });
}

charvar_status charvar_components(const char* link, const char* cache_dir, charvar_report** out) {
  if (!link) return null_arg("link");
  if (!out) return null_arg("out");
  return guarded([&] {
    const LinkSpec spec = parse_link(link);
    if (const auto* pz = std::get_if<Pretzel>(&spec)) return emit_report(count_components_pretzel(pz->m, pz->n), out);
    if (const auto* tw = std::get_if<TwistedWhitehead>(&spec)) {
      return emit_report(verify_thm3(tw->k, source_for(cache_dir)), out);
    }
    const TwoBridge tb = std::get<TwoBridge>(spec);
    if (tb.m == 3 && tb.p > 3 && tb.p % 3 != 0) return emit_report(verify_thm2(tb.p, source_for(cache_dir)), out);
    if (tb.p % 2 == 0 && tb.m == tb.p - 1) return emit_report(verify_thm3((tb.p - 2) / 2, source_for(cache_dir)), out);
    return fail(CHARVAR_ERR_UNSUPPORTED, "no component analysis for " + to_string(spec) +
                                             "; supported: pretzel links, b(2p, 3) and twisted Whitehead links");
  });
}

charvar_status charvar_verify(int theorem, long a, long b, const char* cache_dir, charvar_report** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    switch (theorem) {
      case 1:
        parse_link("pretzel:" + std::to_string(a) + "," + std::to_string(b));
        return emit_report(count_components_pretzel(a, b), out);
      case 2:
        parse_link("twobridge:" + std::to_string(a) + ",3");
        return emit_report(verify_thm2(a, source_for(cache_dir)), out);
      case 3:
        parse_link("whitehead:" + std::to_string(a));
        return emit_report(verify_thm3(a, source_for(cache_dir)), out);
      default: return fail(CHARVAR_ERR_INVALID_ARGUMENT, "theorem must be 1, 2 or 3");
    }
  });
}

int charvar_report_ok(const charvar_report* r) { return r && r->r.ok() ? 1 : 0; }
long charvar_report_component_count(const charvar_report* r) { return r ? r->r.component_count : -1; }
long charvar_report_expected_count(const charvar_report* r) { return r ? r->r.expected_count : -1; }
int charvar_report_sign(const charvar_report* r) { return r ? r->r.sign : 0; }
int charvar_report_product_check(const charvar_report* r) { return r && r->r.product_check ? 1 : 0; }
int charvar_report_certificates_ok(const charvar_report* r) { return r && r->r.certificates_ok ? 1 : 0; }

charvar_status charvar_report_to_json(const charvar_report* r, char** out) {
  if (!r) return null_arg("report");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = dup(to_json(r->r).dump());
    return CHARVAR_OK;
  });
}

charvar_status charvar_report_to_text(const charvar_report* r, char** out) {
  if (!r) return null_arg("report");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = dup(to_text(r->r));
    return CHARVAR_OK;
  });
}

void charvar_report_free(charvar_report* r) { delete r; }

charvar_status charvar_commutator_check(uint64_t seed, double* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = std::abs(commutator_trace_check(random_rep(seed)));
    return CHARVAR_OK;
  });
}

charvar_status charvar_relator_residual(long p, long m, uint64_t seed, double* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    validate(TwoBridge{p, m});
    *out = relator_residual(p, m, random_rep(seed));
    return CHARVAR_OK;
  });
}

}  // extern "C"
