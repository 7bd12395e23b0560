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

#include "charvar/polynomial_json.hpp"

#include <stdexcept>
#include <string>

namespace charvar {

nlohmann::json to_json(const Polynomial& p) {
  std::vector<Var> vars{Var::x, Var::y, Var::z};
  for (Var v : {Var::t, Var::w}) {
    if (p.depends_on(v)) vars.push_back(v);
  }
  nlohmann::json names = nlohmann::json::array();
  for (Var v : vars) names.push_back(std::string(var_name(v)));

  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json exp = nlohmann::json::array();
    for (Var v : vars) exp.push_back(t.mono[v]);
    terms.push_back({{"exp", std::move(exp)}, {"coeff", t.coeff.get_str()}});
  }
  return {{"vars", std::move(names)}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& why) { return std::invalid_argument("polynomial JSON: " + why); };
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) throw fail("expected object with vars and terms");
  const auto& jv = j.at("vars");
  const auto& jt = j.at("terms");
  if (!jv.is_array() || !jt.is_array()) throw fail("vars and terms must be arrays");

  std::vector<Var> vars;
  for (const auto& name : jv) {
    if (!name.is_string()) throw fail("variable names must be strings");
    auto v = parse_var(name.get<std::string>());
    if (!v) throw fail("unknown variable '" + name.get<std::string>() + "'");
    for (Var seen : vars) {
      if (seen == *v) throw fail("duplicate variable '" + name.get<std::string>() + "'");
    }
    vars.push_back(*v);
  }

  std::vector<Term> terms;
  terms.reserve(jt.size());
  for (const auto& term : jt) {
    if (!term.is_object() || !term.contains("exp") || !term.contains("coeff")) throw fail("term needs exp and coeff");
    const auto& exp = term.at("exp");
    if (!exp.is_array() || exp.size() != vars.size()) throw fail("exponent length does not match vars");
    Exponents e{};
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!exp[i].is_number_unsigned() && !(exp[i].is_number_integer() && exp[i].get<long long>() >= 0)) {
        throw fail("exponents must be nonnegative integers");
      }
      const auto value = exp[i].get<unsigned long long>();
      if (value > Monomial::kMaxExponent) throw fail("exponent out of range");
      e[index(vars[i])] = static_cast<unsigned>(value);
    }
    const auto& c = term.at("coeff");
    mpz_class coeff;
    if (c.is_string()) {
      const auto s = c.get<std::string>();
      if (s.empty() || coeff.set_str(s, 10) != 0) throw fail("bad coefficient '" + s + "'");
    } else if (c.is_number_integer()) {
      coeff = static_cast<long>(c.get<long long>());
    } else {
      throw fail("coefficient must be a decimal string");
    }
    terms.push_back({Monomial::from_exponents(e), std::move(coeff)});
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace charvar
