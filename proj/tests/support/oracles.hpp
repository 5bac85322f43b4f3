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

// Independent reference implementations used to cross-check the library.
// They work directly from the rule definitions, share no code with the
// engines beyond the AST, and favour clarity over speed.

#ifndef CKIT_TESTS_ORACLES_HPP
#define CKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ckit/process_semantics.hpp"
#include "ckit/syntax.hpp"

namespace oracle {

using ckit::Action;
using ckit::Contract;

// ---------------------------------------------------------------------------
// Contracts, from the transition and ready-set rules on binary nodes.

inline std::optional<Contract> step(const Contract& c, const Action& a) {
  switch (c.kind()) {
    case Contract::Kind::Nil:
      return std::nullopt;
    case Contract::Kind::Prefix:
      return c.action() == a ? std::optional<Contract>(c.cont()) : std::nullopt;
    default: {
      // Fold the n-ary node as a right-nested chain of binary choices.
      std::optional<Contract> acc;
      for (auto it = c.parts().rbegin(); it != c.parts().rend(); ++it) {
        auto s = oracle::step(*it, a);
        if (s && acc)
          acc = Contract::intc(*s, *acc);
        else if (s)
          acc = s;
      }
      return acc;
    }
  }
}

inline std::set<std::set<Action>> ready(const Contract& c) {
  switch (c.kind()) {
    case Contract::Kind::Nil:
      return {{}};
    case Contract::Kind::Prefix:
      return {{c.action()}};
    case Contract::Kind::Ext: {
      std::set<std::set<Action>> acc{{}};
      for (const auto& p : c.parts()) {
        std::set<std::set<Action>> next;
        for (const auto& r : acc)
          for (const auto& s : oracle::ready(p)) {
            auto u = r;
            u.insert(s.begin(), s.end());
            next.insert(u);
          }
        acc = next;
      }
      return acc;
    }
    case Contract::Kind::Int: {
      std::set<std::set<Action>> out;
      for (const auto& p : c.parts())
        for (const auto& r : oracle::ready(p)) out.insert(r);
      return out;
    }
  }
  return {};
}

inline std::set<Action> actions(const Contract& c) {
  std::set<Action> out;
  for (const auto& r : oracle::ready(c)) out.insert(r.begin(), r.end());
  return out;
}

inline bool subcontract_clause1(const Contract& sigma, const Contract& rho) {
  auto rs = oracle::ready(sigma);
  for (const auto& r : oracle::ready(rho)) {
    bool ok = std::any_of(rs.begin(), rs.end(), [&](const std::set<Action>& s) {
      return std::includes(r.begin(), r.end(), s.begin(), s.end());
    });
    if (!ok) return false;
  }
  return true;
}

/// Finite contracts have finite acyclic transition graphs, so the greatest
/// fixpoint coincides with plain recursion on the definition.
inline bool subcontract(const Contract& sigma, const Contract& rho) {
  if (!oracle::subcontract_clause1(sigma, rho)) return false;
  for (const auto& a : oracle::actions(rho)) {
    auto s = oracle::step(sigma, a);
    if (!s || !oracle::subcontract(*s, *oracle::step(rho, a))) return false;
  }
  return true;
}

inline bool compliance_clause1(const Contract& client, const Contract& service) {
  for (const auto& r : oracle::ready(client)) {
    if (r.count(ckit::kSuccess)) continue;
    for (const auto& s : oracle::ready(service)) {
      bool meet = std::any_of(r.begin(), r.end(), [&](const Action& a) { return s.count(a.co()) > 0; });
      if (!meet) return false;
    }
  }
  return true;
}

inline bool compliant(const Contract& client, const Contract& service) {
  if (!oracle::compliance_clause1(client, service)) return false;
  for (const auto& a : oracle::actions(client)) {
    if (a.is_success()) continue;
    auto s = oracle::step(service, a.co());
    if (s && !oracle::compliant(*oracle::step(client, a), *s)) return false;
  }
  return true;
}

/// Revalidates a claimed relation: every pair satisfies the local clause and
/// every required successor pair is again in the relation.
inline bool is_subcontract_relation(const std::vector<std::pair<Contract, Contract>>& rel) {
  std::set<std::pair<std::string, std::string>> keys;
  for (const auto& [a, b] : rel) keys.insert({a.key(), b.key()});
  for (const auto& [sigma, rho] : rel) {
    if (!oracle::subcontract_clause1(sigma, rho)) return false;
    for (const auto& a : oracle::actions(rho)) {
      auto s = oracle::step(sigma, a);
      if (!s) return false;
      if (!keys.count({s->key(), oracle::step(rho, a)->key()})) return false;
    }
  }
  return true;
}

inline bool is_compliance_relation(const std::vector<std::pair<Contract, Contract>>& rel) {
  std::set<std::pair<std::string, std::string>> keys;
  for (const auto& [a, b] : rel) keys.insert({a.key(), b.key()});
  for (const auto& [client, service] : rel) {
    if (!oracle::compliance_clause1(client, service)) return false;
    for (const auto& a : oracle::actions(client)) {
      if (a.is_success()) continue;
      auto s = oracle::step(service, a.co());
      if (s && !keys.count({oracle::step(client, a)->key(), s->key()})) return false;
    }
  }
  return true;
}

/// Every client over `names` (plus success) up to `depth`, built from
/// prefixes, binary sums and binary internal choices.
inline std::vector<Contract> small_clients(const std::vector<std::string>& names, int depth) {
  std::vector<Action> acts{ckit::kSuccess};
  for (const auto& n : names) {
    acts.push_back({n, false});
    acts.push_back({n, true});
  }
  std::vector<Contract> level{Contract::nil()};
  for (const auto& a : acts) level.push_back(Contract::prefix(a, Contract::nil()));
  for (int d = 1; d < depth; ++d) {
    std::vector<Contract> next = level;
    for (const auto& a : acts)
      for (const auto& c : level)
        if (!c.is_nil()) next.push_back(Contract::prefix(a, c));
    std::size_t base = level.size();
    for (std::size_t i = 1; i < base && i < 8; ++i)
      for (std::size_t j = i + 1; j < base && j < 8; ++j) {
        next.push_back(Contract::ext(level[i], level[j]));
        next.push_back(Contract::intc(level[i], level[j]));
      }
    level = next;
  }
  return level;
}

// ---------------------------------------------------------------------------
// Processes: the direct labelled transition rules for closed terms.

inline std::vector<ckit::ConcreteStep> steps(const ckit::Process& p, const ckit::Domain& dom) {
  using namespace ckit;
  std::vector<ConcreteStep> out;
  const auto values = dom.values();
  auto instantiate = [&](const std::vector<std::string>& vs, const std::function<void(const Substitution&)>& f) {
    std::function<void(std::size_t, Substitution&)> rec = [&](std::size_t i, Substitution& s) {
      if (i == vs.size()) {
        f(s);
        return;
      }
      for (const auto& v : values) {
        s[vs[i]] = v;
        rec(i + 1, s);
      }
      s.erase(vs[i]);
    };
    Substitution s;
    rec(0, s);
  };
  const ProcessNode& n = p.node();
  if (auto* t = std::get_if<PTau>(&n.v)) {
    out.push_back({ConcAction::tau(), normalize(t->cont)});
  } else if (auto* o = std::get_if<POut>(&n.v)) {
    out.push_back({ConcAction{ActKind::Out, o->subject, o->payload}, normalize(o->cont)});
  } else if (auto* s = std::get_if<PSum>(&n.v)) {
    for (const auto& b : s->branches) {
      instantiate(b.binders, [&](const Substitution& sub) {
        ConcAction a = ConcAction::tau();
        if (!b.subject.is_opaque()) {
          a = ConcAction{ActKind::In, b.subject, {}};
          for (const auto& v : b.binders) a.payload.push_back(sub.at(v));
        }
        out.push_back({a, normalize(ckit::apply(b.cont, sub))});
      });
    }
  } else if (auto* par = std::get_if<PPar>(&n.v)) {
    for (std::size_t i = 0; i < par->parts.size(); ++i)
      for (const auto& st : steps(par->parts[i], dom)) {
        auto parts = par->parts;
        parts[i] = st.target;
        out.push_back({st.action, normalize(proc::par(parts))});
      }
  } else if (auto* c = std::get_if<PIf>(&n.v)) {
    bool opaque = c->lhs.is_opaque() || c->rhs.is_opaque();
    bool same = !opaque && c->lhs == c->rhs;
    if (opaque || same) {
      auto sub = steps(c->then_branch, dom);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    if (opaque || !same) {
      auto sub = steps(c->else_branch, dom);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace oracle

#endif  // CKIT_TESTS_ORACLES_HPP
