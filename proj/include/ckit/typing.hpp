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

// Contract inference. A closed process is first grounded: every input is
// expanded over all value tuples, which turns value passing into plain
// actions. Types are then assigned syntax-directed on the ground term.

#ifndef CKIT_TYPING_HPP
#define CKIT_TYPING_HPP

#include <memory>
#include <string>
#include <vector>

#include "ckit/process_semantics.hpp"

namespace ckit {

struct GroundNode;

/// A process over ground actions; inputs carry their received values.
class GroundTerm {
 public:
  enum class Kind : std::uint8_t { Nil, Act, Sum, Par, Cond };
  enum class CondRule : std::uint8_t { Opaque, Then, Else };

  GroundTerm();  // 0

  static GroundTerm act(ConcAction a, GroundTerm cont);
  /// Choice among prefixed terms; a single branch is returned as is.
  static GroundTerm sum(std::vector<GroundTerm> branches);
  static GroundTerm par(std::vector<GroundTerm> parts);
  /// `then` and `else` are both kept; `rule` says which ones can run.
  static GroundTerm cond(CondRule rule, Name lhs, Name rhs, GroundTerm then_branch, GroundTerm else_branch);

  Kind kind() const;
  const ConcAction& action() const;           // Act
  const std::vector<GroundTerm>& kids() const;  // Act: {cont}; Sum, Par: members; Cond: {then, else}
  CondRule rule() const;
  const Name& lhs() const;
  const Name& rhs() const;
  const std::string& key() const;

  bool operator==(const GroundTerm& o) const { return key() == o.key(); }
  bool operator<(const GroundTerm& o) const { return key() < o.key(); }

 private:
  explicit GroundTerm(std::shared_ptr<const GroundNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const GroundNode> node_;
};

std::string to_string(const GroundTerm& g);

/// Grounds a closed process. Throws OpenTerm.
GroundTerm ground(const Process& p, const Domain& dom);

struct GroundStep {
  ConcAction action;
  GroundTerm target;

  bool operator==(const GroundStep& o) const { return action == o.action && target == o.target; }
  bool operator<(const GroundStep& o) const;
};

/// Transitions of a ground term; mirrors the concrete process semantics.
std::vector<GroundStep> ground_steps(const GroundTerm& g);

/// Contract action of a ground action: the port name with output polarity for
/// emissions; payloads are erased. Opaque subjects map to the name `*`.
Action contract_action(const ConcAction& a);

struct Derivation {
  std::string rule;
  std::string subject;
  Contract type;
  std::vector<std::shared_ptr<const Derivation>> premises;
};

/// Indented rendering, one judgement per line.
std::string render(const Derivation& d);

/// The contract of a closed process.
Contract type_of(const Process& p, const Domain& dom);
Contract type_of(const GroundTerm& g);
Derivation derive(const Process& p, const Domain& dom);

/// A_V(type_of(P)): the type of A_V[P].
Contract type_of_abstraction(const Process& p, const NameSet& visible, const Domain& dom);
Derivation derive_abstraction(const Process& p, const NameSet& visible, const Domain& dom);

}  // namespace ckit

#endif  // CKIT_TYPING_HPP
