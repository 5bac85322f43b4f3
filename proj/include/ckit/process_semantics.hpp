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

#ifndef CKIT_PROCESS_SEMANTICS_HPP
#define CKIT_PROCESS_SEMANTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ckit/conditions.hpp"
#include "ckit/syntax.hpp"

namespace ckit {

enum class ActKind : std::uint8_t { Tau, In, Out };

/// Label of a symbolic step: tau, x(v1..vk) or x!<m1..mk>. A tau taken
/// through an opaque input branch lists the binders it leaves free.
struct SymAction {
  ActKind kind = ActKind::Tau;
  Name subject;
  std::vector<std::string> binders;  // In, and Tau from an opaque branch
  std::vector<Name> payload;         // Out

  static SymAction tau() { return {}; }
  auto operator<=>(const SymAction&) const = default;
  bool operator==(const SymAction&) const = default;
};

std::string to_string(const SymAction& a);
std::set<std::string> bound_vars(const SymAction& a);
/// Substitutes output payloads; binders are left untouched.
SymAction apply(const SymAction& a, const Substitution& s);

struct SymbolicStep {
  Condition cond;
  SymAction action;
  Process target;

  bool operator==(const SymbolicStep& o) const {
    return cond == o.cond && action == o.action && target == o.target;
  }
  bool operator<(const SymbolicStep& o) const;
};

/// Symbolic transitions. Targets are in structural normal form; the result is
/// sorted and duplicate free. `dom` is used for the consistency side
/// conditions of the conditional rules.
std::vector<SymbolicStep> symbolic_steps(const Process& p, const Domain& dom);

/// Label of a concrete step: tau, x(a1..ak) received or x!<a1..ak> emitted.
/// The client success action is the input on port `e`.
struct ConcAction {
  ActKind kind = ActKind::Tau;
  Name subject;
  std::vector<Name> payload;

  static ConcAction tau() { return {}; }
  bool is_tau() const { return kind == ActKind::Tau; }
  bool is_success() const {
    return kind == ActKind::In && subject.is_port() && subject.ident == Declarations::kSuccessPort;
  }
  auto operator<=>(const ConcAction&) const = default;
  bool operator==(const ConcAction&) const = default;
};

std::string to_string(const ConcAction& a);

struct ConcreteStep {
  ConcAction action;
  Process target;

  bool operator==(const ConcreteStep& o) const { return action == o.action && target == o.target; }
  bool operator<(const ConcreteStep& o) const;
};

/// Non-symbolic transitions of a closed process: every symbolic step
/// instantiated by every total map of its variables into constants plus the
/// opaque element that respects the step condition. Throws OpenTerm.
std::vector<ConcreteStep> concrete_steps(const Process& p, const Domain& dom);

/// Keeps tau, the success action and actions on visible ports; anything else
/// (including opaque-subject actions) becomes tau.
ConcAction hide_action(const ConcAction& a, const NameSet& visible);

/// Steps of A_V[P]; targets are understood to remain under the wrapper.
std::vector<ConcreteStep> abstract_steps(const Process& p, const NameSet& visible, const Domain& dom);

/// A process, optionally under the hiding wrapper A_V[.].
struct Agent {
  Process process;
  std::optional<NameSet> visible = std::nullopt;

  std::vector<ConcreteStep> steps(const Domain& dom) const;
  Agent with(Process p) const { return {std::move(p), visible}; }
  std::string to_string() const;
  auto operator<=>(const Agent& o) const {
    if (auto c = process.key() <=> o.process.key(); c != 0) return c;
    return visible <=> o.visible;
  }
  bool operator==(const Agent& o) const { return process == o.process && visible == o.visible; }
};

struct Configuration {
  Agent client;
  Agent service;

  auto operator<=>(const Configuration&) const = default;
  bool operator==(const Configuration&) const = default;
};

std::string to_string(const Configuration& c);

/// One reduction of client || service: tau moves of either side and
/// synchronisations on complementary labels with equal port and payload.
std::vector<Configuration> parallel_step(const Configuration& c, const Domain& dom);

/// Trace listing of every transition reachable from `p`, breadth first.
/// Symbolic lines read `COND | ACTION | TARGET`, concrete ones `ACTION | TARGET`.
std::vector<std::string> symbolic_trace(const Process& p, const Domain& dom);
std::vector<std::string> concrete_trace(const Agent& a, const Domain& dom);

}  // namespace ckit

#endif  // CKIT_PROCESS_SEMANTICS_HPP
