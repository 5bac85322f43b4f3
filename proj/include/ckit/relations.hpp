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

// Greatest fixpoint decision procedures. Each check collects the pairs
// reachable from the query, deletes pairs that violate the local clause and
// then, until stable, pairs with a successor already deleted. What survives is
// the largest relation of the given kind inside the reachable pairs.

#ifndef CKIT_RELATIONS_HPP
#define CKIT_RELATIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "ckit/contract_semantics.hpp"
#include "ckit/process_semantics.hpp"

namespace ckit {

using ContractPair = std::pair<Contract, Contract>;

struct RelationResult {
  bool holds = false;
  /// When holds: the surviving pairs reachable from the query; a
  /// post-fixpoint of the defining clauses.
  std::vector<ContractPair> certificate;
  /// When not: the action path to a pair that violates the local clause,
  /// followed by a line explaining the violation.
  std::vector<std::string> counterexample;
};

/// Strong compliance of `client` with `service`. Throws Precondition when the
/// service mentions the success action.
RelationResult compliant(const Contract& client, const Contract& service);

/// Strong subcontract `sigma` below `rho`.
RelationResult subcontract(const Contract& sigma, const Contract& rho);

/// Subcontract both ways.
bool equivalent(const Contract& a, const Contract& b);

struct ProcessVerdict {
  bool holds = false;
  std::size_t explored = 0;  // configurations visited
  std::vector<std::string> counterexample;  // configurations up to a failing stuck one
};

/// Strong process compliance on the finite configuration graph. Every stuck
/// configuration must leave the client able to perform the success action.
ProcessVerdict process_compliant(const Agent& client, const Agent& service, const Domain& dom);

}  // namespace ckit

#endif  // CKIT_RELATIONS_HPP
