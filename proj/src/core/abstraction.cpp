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

#include "ckit/abstraction.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "ckit/relations.hpp"

namespace ckit {

bool is_visible(const Action& a, const NameSet& visible) { return a.is_success() || visible.count(a.name); }

namespace {

void add_unique(std::vector<Contract>& xs, Contract c) {
  for (const auto& x : xs)
    if (x == c) return;
  xs.push_back(std::move(c));
}

Contract abstract_nf(const NormalForm& nf, const NameSet& visible,
                     std::unordered_map<Contract, Contract>& memo);

Contract abstract_memo(const Contract& c, const NameSet& visible, std::unordered_map<Contract, Contract>& memo) {
  if (auto it = memo.find(c); it != memo.end()) return it->second;
  Contract out = abstract_nf(normal_form(c), visible, memo);
  memo.emplace(c, out);
  return out;
}

Contract abstract_nf(const NormalForm& nf, const NameSet& visible,
                     std::unordered_map<Contract, Contract>& memo) {
  std::vector<Contract> alts;
  for (const auto& summand : nf.alternatives) {
    std::vector<Contract> shown;
    std::vector<Contract> hidden;
    for (const auto& [a, cont] : summand) {
      Contract abs = abstract_memo(cont, visible, memo);
      if (is_visible(a, visible))
        shown.push_back(Contract::prefix(a, abs));
      else
        add_unique(hidden, abs);
    }
    if (!shown.empty() || hidden.empty()) add_unique(alts, Contract::ext(std::move(shown)));
    for (auto& h : hidden) {
      // An abstracted continuation that is itself a choice contributes its
      // alternatives directly; associativity makes this the same contract.
      if (h.kind() == Contract::Kind::Int)
        for (const auto& p : h.parts()) add_unique(alts, p);
      else
        add_unique(alts, h);
    }
  }
  return Contract::intc(std::move(alts));
}

}  // namespace

Contract abstract_contract(const Contract& sigma, const NameSet& visible) {
  std::unordered_map<Contract, Contract> memo;
  return abstract_memo(sigma, visible, memo);
}

std::vector<Contract> alc(const Contract& sigma, const Action& alpha, const NameSet& visible) {
  std::vector<Contract> out;
  std::unordered_set<Contract> seen{sigma};
  std::deque<Contract> queue{sigma};
  while (!queue.empty()) {
    Contract cur = queue.front();
    queue.pop_front();
    if (auto next = step(cur, alpha)) add_unique(out, *next);
    for (const auto& b : init(cur)) {
      if (is_visible(b, visible)) continue;
      Contract n = *step(cur, b);
      if (seen.insert(n).second) queue.push_back(n);
    }
  }
  return out;
}

ContinuationReport abstraction_continuation_check(const Contract& sigma, const Action& alpha,
                                                  const NameSet& visible) {
  ContinuationReport rep;
  rep.alpha_visible = is_visible(alpha, visible);
  Contract abs = abstract_contract(sigma, visible);
  rep.abstract_continuation = step(abs, alpha);
  auto reach = alc(sigma, alpha, visible);
  if (!reach.empty()) {
    std::vector<Contract> parts;
    for (const auto& r : reach) parts.push_back(abstract_contract(r, visible));
    rep.alc_continuation = Contract::intc(std::move(parts));
  }
  if (auto s = step(sigma, alpha)) rep.visible_continuation = abstract_contract(*s, visible);

  bool should_step = rep.alpha_visible && rep.alc_continuation.has_value();
  if (should_step != rep.abstract_continuation.has_value()) {
    rep.alc_characterisation = false;
  } else if (!should_step) {
    rep.alc_characterisation = true;
  } else {
    rep.alc_characterisation = equivalent(*rep.abstract_continuation, *rep.alc_continuation);
  }
  if (rep.alpha_visible && rep.visible_continuation) {
    if (!rep.abstract_continuation) {
      rep.visible_equivalent = false;
      rep.visible_refines = false;
    } else {
      rep.visible_equivalent = equivalent(*rep.abstract_continuation, *rep.visible_continuation);
      rep.visible_refines = subcontract(*rep.abstract_continuation, *rep.visible_continuation).holds;
    }
  }
  return rep;
}

}  // namespace ckit
