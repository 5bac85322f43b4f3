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

#include "ckit/contract_semantics.hpp"

#include <deque>
#include <unordered_set>

namespace ckit {

std::optional<Contract> step(const Contract& c, const Action& a) {
  switch (c.kind()) {
    case Contract::Kind::Nil:
      return std::nullopt;
    case Contract::Kind::Prefix:
      if (c.action() == a) return c.cont();
      return std::nullopt;
    case Contract::Kind::Ext:
    case Contract::Kind::Int: {
      std::vector<Contract> conts;
      for (const auto& p : c.parts())
        if (auto next = step(p, a)) conts.push_back(std::move(*next));
      if (conts.empty()) return std::nullopt;
      return Contract::intc(std::move(conts));
    }
  }
  return std::nullopt;
}

std::set<Action> init(const Contract& c) {
  std::set<Action> out;
  if (c.kind() == Contract::Kind::Prefix) {
    out.insert(c.action());
  } else {
    for (const auto& p : c.parts()) {
      auto sub = init(p);
      out.insert(sub.begin(), sub.end());
    }
  }
  return out;
}

std::set<ReadySet> ready_sets(const Contract& c) {
  switch (c.kind()) {
    case Contract::Kind::Nil:
      return {ReadySet{}};
    case Contract::Kind::Prefix:
      return {ReadySet{c.action()}};
    case Contract::Kind::Ext: {
      std::set<ReadySet> acc{ReadySet{}};
      for (const auto& p : c.parts()) {
        std::set<ReadySet> next;
        for (const auto& r : acc)
          for (const auto& s : ready_sets(p)) {
            ReadySet u = r;
            u.insert(s.begin(), s.end());
            next.insert(std::move(u));
          }
        acc = std::move(next);
      }
      return acc;
    }
    case Contract::Kind::Int: {
      std::set<ReadySet> out;
      for (const auto& p : c.parts()) {
        auto sub = ready_sets(p);
        out.insert(sub.begin(), sub.end());
      }
      return out;
    }
  }
  return {};
}

std::vector<Contract> reachable(const Contract& c) {
  std::vector<Contract> out{c};
  std::unordered_set<Contract> seen{c};
  std::deque<Contract> queue{c};
  while (!queue.empty()) {
    Contract cur = queue.front();
    queue.pop_front();
    for (const auto& a : init(cur)) {
      Contract next = *step(cur, a);
      if (seen.insert(next).second) {
        out.push_back(next);
        queue.push_back(next);
      }
    }
  }
  return out;
}

namespace {

void push_unique(std::vector<Summand>& alts, Summand s) {
  auto same = [&](const Summand& t) {
    if (t.size() != s.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i].first != s[i].first || t[i].second != s[i].second) return false;
    return true;
  };
  for (const auto& t : alts)
    if (same(t)) return;
  alts.push_back(std::move(s));
}

// Merges guards with the same action: a.x + a.y becomes a.(x (+) y).
Summand merge_guards(const Summand& raw) {
  std::vector<Action> order;
  std::map<Action, std::vector<Contract>> conts;
  for (const auto& [a, c] : raw) {
    auto& slot = conts[a];
    if (slot.empty()) order.push_back(a);
    bool dup = false;
    for (const auto& d : slot) dup = dup || d == c;
    if (!dup) slot.push_back(c);
  }
  Summand out;
  for (const auto& a : order) {
    const auto& cs = conts[a];
    out.emplace_back(a, cs.size() == 1 ? cs.front() : normalize(Contract::intc(cs)));
  }
  return out;
}

}  // namespace

NormalForm normal_form(const Contract& c) {
  NormalForm nf;
  switch (c.kind()) {
    case Contract::Kind::Nil:
      nf.alternatives.push_back({});
      break;
    case Contract::Kind::Prefix:
      nf.alternatives.push_back({{c.action(), normalize(c.cont())}});
      break;
    case Contract::Kind::Int:
      for (const auto& p : c.parts())
        for (auto& alt : normal_form(p).alternatives) push_unique(nf.alternatives, std::move(alt));
      break;
    case Contract::Kind::Ext: {
      // External choice distributes over internal choice.
      std::vector<Summand> acc{Summand{}};
      for (const auto& p : c.parts()) {
        auto sub = normal_form(p);
        std::vector<Summand> next;
        for (const auto& left : acc)
          for (const auto& right : sub.alternatives) {
            Summand s = left;
            s.insert(s.end(), right.begin(), right.end());
            next.push_back(std::move(s));
          }
        acc = std::move(next);
      }
      for (auto& s : acc) push_unique(nf.alternatives, merge_guards(s));
      break;
    }
  }
  return nf;
}

Contract to_contract(const NormalForm& nf) {
  std::vector<Contract> alts;
  for (const auto& s : nf.alternatives) {
    std::vector<Contract> parts;
    for (const auto& [a, cont] : s) parts.push_back(Contract::prefix(a, cont));
    alts.push_back(Contract::ext(std::move(parts)));
  }
  return Contract::intc(std::move(alts));
}

Contract normalize(const Contract& c) { return to_contract(normal_form(c)); }

std::string to_string(const ReadySet& r) {
  std::string s = "{";
  for (const auto& a : r) s += (s.size() > 1 ? "," : "") + to_string(a);
  return s + "}";
}

}  // namespace ckit
