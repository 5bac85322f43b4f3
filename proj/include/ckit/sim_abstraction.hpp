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

// Checker for the simulation-based abstraction relation between an abstract
// process P and a concrete process Q over visible names V.
//
// Decompositions are not searched for. Over a finite domain every condition
// is monotone in the opaque element, so the finest decomposition of M && N
// consists of one characteristic condition per satisfying substitution, and
// any other decomposition only adds obligations. The checker therefore
// requires, for each satisfying substitution, a matching move whose residuals
// are related at that substitution's characteristic condition.

#ifndef CKIT_SIM_ABSTRACTION_HPP
#define CKIT_SIM_ABSTRACTION_HPP

#include <string>
#include <vector>

#include "ckit/process_semantics.hpp"

namespace ckit {

/// Received names of an input on a visible port; empty otherwise.
std::set<std::string> visible_received_names(const SymAction& a, const NameSet& visible);

/// Actions on ports outside `visible` (and on the opaque subject) become tau.
SymAction hide_sym_action(const SymAction& a, const NameSet& visible);

/// The condition satisfied exactly by `s` and its more opaque variants:
/// v = c for constants, v != c for every constant when v maps to the opaque
/// element.
Condition characteristic(const Substitution& s, const Domain& dom);

struct AbsQuery {
  Process abstract_process;
  Process concrete_process;
  NameSet visible;
  Condition index;  // true at the top level
};

struct AbsResult {
  bool holds = false;
  std::size_t explored = 0;  // distinct (P, Q, V, index) nodes checked
  std::vector<std::string> trace;  // failing path when !holds
};

/// Throws Precondition when the index is inconsistent. A free port or
/// variable of the abstract process outside `visible` yields a negative
/// verdict with the offending names in the trace.
AbsResult check_abstraction(const AbsQuery& q, const Domain& dom);

}  // namespace ckit

#endif  // CKIT_SIM_ABSTRACTION_HPP
