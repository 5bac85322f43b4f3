/*
 * Copyright 2026 The ckit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Decision procedures for conditions. Everything is decided by enumerating
// total maps from the relevant variables into the constants plus the opaque
// element; the domain is small by construction.

#ifndef CKIT_CONDITIONS_HPP
#define CKIT_CONDITIONS_HPP

#include <functional>
#include <vector>

#include "ckit/syntax.hpp"

namespace ckit {

/// Ground evaluation. Any comparison with the opaque element is true, for
/// both `=` and `!=`. Throws OpenTerm when `m` still mentions a variable.
bool eval_ground(const Condition& m);

/// s |= M: M under s is ground and evaluates to true.
bool respects(const Substitution& s, const Condition& m);

/// Every constant mentioned in `m`.
std::set<std::string> constants_of(const Condition& m);

/// Calls `fn` with every total map from `vars` into `values`; stops early
/// when `fn` returns false. Returns false iff stopped early.
bool for_each_assignment(const std::vector<std::string>& vars, const std::vector<Name>& values,
                         const std::function<bool(const Substitution&)>& fn);

/// M => N over the domain extended with the constants of M and N.
bool entails(const Condition& m, const Condition& n, const Domain& dom);
bool is_consistent(const Condition& m, const Domain& dom);
/// D is an M-decomposition: M entails the disjunction of D.
bool is_decomposition(const std::vector<Condition>& d, const Condition& m, const Domain& dom);

/// Replaces every atom mentioning a name outside `visible` by true.
Condition restrict(const Condition& m, const NameSet& visible);

/// All total maps `vars` -> constants + opaque that respect M. `vars` must
/// cover the free variables of M.
std::vector<Substitution> satisfying_substitutions(const Condition& m, const std::set<std::string>& vars,
                                                   const Domain& dom);

}  // namespace ckit

#endif  // CKIT_CONDITIONS_HPP
