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

#ifndef CHARVAR_POLYNOMIAL_JSON_HPP
#define CHARVAR_POLYNOMIAL_JSON_HPP

#include <json.hpp>

#include "charvar/polynomial.hpp"

namespace charvar {

/// {"vars":["x","y","z",...],"terms":[{"exp":[...],"coeff":"<decimal>"}]}
/// x, y, z are always listed; t and w only when p mentions them. Terms are
/// in the same descending order as to_string.
nlohmann::json to_json(const Polynomial& p);

/// Inverse of to_json. Accepts any subset of variable names in any order
/// and unsorted terms. Throws std::invalid_argument on malformed input.
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace charvar

#endif  // CHARVAR_POLYNOMIAL_JSON_HPP
