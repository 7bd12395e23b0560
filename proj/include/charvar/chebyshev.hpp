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

#ifndef CHARVAR_CHEBYSHEV_HPP
#define CHARVAR_CHEBYSHEV_HPP

#include "charvar/polynomial.hpp"

namespace charvar {

/// S_k(t): S_0 = 1, S_1 = t, S_{k+1} = t S_k - S_{k-1}, and S_{-k} = -S_{k-2}.
/// Memoized in a process-wide table; the reference stays valid for the
/// lifetime of the process.
const Polynomial& cheb(long k);

/// S_k(t) - S_{k-1}(t).
Polynomial cheb_diff(long k);

/// S_k(arg).
Polynomial cheb_at(long k, const Polynomial& arg);

/// S_k(arg) - S_{k-1}(arg).
Polynomial cheb_diff_at(long k, const Polynomial& arg);

/// Number of distinct complex roots of a univariate polynomial, computed
/// exactly as deg p - deg gcd(p, p'). Nonzero constants have none.
/// Throws std::invalid_argument for zero or multivariate input.
long distinct_root_count(const Polynomial& p);

}  // namespace charvar

#endif  // CHARVAR_CHEBYSHEV_HPP
