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

#ifndef CKIT_ABSTRACTION_HPP
#define CKIT_ABSTRACTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "ckit/contract_semantics.hpp"

namespace ckit {

/// An action is visible when its name is in `visible` (polarity ignored) or
/// it is the success action.
bool is_visible(const Action& a, const NameSet& visible);

/// A_V(sigma), computed on the normal form. Hidden guards of an external sum
/// turn into internal alternatives next to the sum of the visible ones.
Contract abstract_contract(const Contract& sigma, const NameSet& visible);

/// Continuations after `alpha` of every state reachable by hidden steps.
std::vector<Contract> alc(const Contract& sigma, const Action& alpha, const NameSet& visible);

struct ContinuationReport {
  bool alpha_visible = false;
  /// A_V(sigma) can step with alpha.
  std::optional<Contract> abstract_continuation;
  /// The internal choice of A_V over alc(sigma, alpha, V), when alc is non-empty.
  std::optional<Contract> alc_continuation;
  /// A_V(sigma(alpha)), when sigma can step with alpha.
  std::optional<Contract> visible_continuation;
  /// The step exists exactly when alpha is visible and alc is non-empty, and
  /// the continuation is equivalent to alc_continuation.
  bool alc_characterisation = false;
  /// When alpha is visible and sigma steps: the abstract continuation is
  /// equivalent to visible_continuation.
  std::optional<bool> visible_equivalent;
  /// When alpha is visible and sigma steps: the abstract continuation is a
  /// subcontract of visible_continuation.
  std::optional<bool> visible_refines;

  bool ok() const { return alc_characterisation && visible_equivalent.value_or(true); }
};

ContinuationReport abstraction_continuation_check(const Contract& sigma, const Action& alpha,
                                                  const NameSet& visible);

}  // namespace ckit

#endif  // CKIT_ABSTRACTION_HPP
