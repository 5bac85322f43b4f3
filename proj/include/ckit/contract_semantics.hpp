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

#ifndef CKIT_CONTRACT_SEMANTICS_HPP
#define CKIT_CONTRACT_SEMANTICS_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ckit/syntax.hpp"

namespace ckit {

using ReadySet = std::set<Action>;

/// The unique continuation after `a`. Both choice operators merge the
/// continuations of branches that can perform `a` with an internal choice.
std::optional<Contract> step(const Contract& c, const Action& a);

std::set<Action> init(const Contract& c);
std::set<ReadySet> ready_sets(const Contract& c);

/// Every contract reachable by steps, `c` first, breadth first.
std::vector<Contract> reachable(const Contract& c);

/// One external sum of the normal form: guarded continuations with pairwise
/// distinct actions, each continuation itself normalised.
using Summand = std::vector<std::pair<Action, Contract>>;

/// An internal choice of external sums; never empty. 0 is one empty sum.
struct NormalForm {
  std::vector<Summand> alternatives;
};

NormalForm normal_form(const Contract& c);
Contract to_contract(const NormalForm& nf);
/// normal_form followed by to_contract.
Contract normalize(const Contract& c);

std::string to_string(const ReadySet& r);

}  // namespace ckit

#endif  // CKIT_CONTRACT_SEMANTICS_HPP
