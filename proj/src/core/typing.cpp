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

#include "ckit/typing.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "ckit/abstraction.hpp"

namespace ckit {

struct GroundNode {
  GroundTerm::Kind kind = GroundTerm::Kind::Nil;
  ConcAction action;
  std::vector<GroundTerm> kids;
  GroundTerm::CondRule rule = GroundTerm::CondRule::Opaque;
  Name lhs, rhs;
  std::string key;
};

namespace {

enum Level { kPar = 0, kSum = 1, kPrefix = 2 };

std::string print(const GroundTerm& g, int level) {
  switch (g.kind()) {
    case GroundTerm::Kind::Nil:
      return "0";
    case GroundTerm::Kind::Act: {
      const GroundTerm& cont = g.kids().front();
      std::string s = to_string(g.action());
      if (cont.kind() != GroundTerm::Kind::Nil) s += "." + print(cont, kPrefix);
      return s;
    }
    case GroundTerm::Kind::Sum: {
      std::string s;
      for (std::size_t i = 0; i < g.kids().size(); ++i) s += (i ? " + " : "") + print(g.kids()[i], kSum);
      return level > kSum ? "(" + s + ")" : s;
    }
    case GroundTerm::Kind::Par: {
      std::string s;
      for (std::size_t i = 0; i < g.kids().size(); ++i) s += (i ? " | " : "") + print(g.kids()[i], kSum);
      return level > kPar ? "(" + s + ")" : s;
    }
    case GroundTerm::Kind::Cond:
      return "if " + to_string(g.lhs()) + " = " + to_string(g.rhs()) + " then " + print(g.kids()[0], kPrefix) +
             " else " + print(g.kids()[1], kPrefix);
  }
  return {};
}

}  // namespace

GroundTerm::GroundTerm() : node_(std::make_shared<GroundNode>()) {
  std::const_pointer_cast<GroundNode>(node_)->key = "0";
}

GroundTerm GroundTerm::act(ConcAction a, GroundTerm cont) {
  auto n = std::make_shared<GroundNode>();
  n->kind = Kind::Act;
  n->action = std::move(a);
  n->kids.push_back(std::move(cont));
  GroundTerm g(n);
  n->key = print(g, kPar);
  return g;
}

GroundTerm GroundTerm::sum(std::vector<GroundTerm> branches) {
  std::vector<GroundTerm> flat;
  for (auto& b : branches) {
    if (b.kind() == Kind::Sum)
      flat.insert(flat.end(), b.kids().begin(), b.kids().end());
    else
      flat.push_back(std::move(b));
  }
  if (flat.empty()) return GroundTerm();
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<GroundNode>();
  n->kind = Kind::Sum;
  n->kids = std::move(flat);
  GroundTerm g(n);
  n->key = print(g, kPar);
  return g;
}

GroundTerm GroundTerm::par(std::vector<GroundTerm> parts) {
  std::vector<GroundTerm> flat;
  for (auto& p : parts) {
    if (p.kind() == Kind::Par)
      flat.insert(flat.end(), p.kids().begin(), p.kids().end());
    else if (p.kind() != Kind::Nil)
      flat.push_back(std::move(p));
  }
  if (flat.empty()) return GroundTerm();
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<GroundNode>();
  n->kind = Kind::Par;
  n->kids = std::move(flat);
  GroundTerm g(n);
  n->key = print(g, kPar);
  return g;
}

GroundTerm GroundTerm::cond(CondRule rule, Name lhs, Name rhs, GroundTerm then_branch, GroundTerm else_branch) {
  auto n = std::make_shared<GroundNode>();
  n->kind = Kind::Cond;
  n->rule = rule;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->kids = {std::move(then_branch), std::move(else_branch)};
  GroundTerm g(n);
  n->key = print(g, kPar);
  return g;
}

GroundTerm::Kind GroundTerm::kind() const { return node_->kind; }
const ConcAction& GroundTerm::action() const { return node_->action; }
const std::vector<GroundTerm>& GroundTerm::kids() const { return node_->kids; }
GroundTerm::CondRule GroundTerm::rule() const { return node_->rule; }
const Name& GroundTerm::lhs() const { return node_->lhs; }
const Name& GroundTerm::rhs() const { return node_->rhs; }
const std::string& GroundTerm::key() const { return node_->key; }

std::string to_string(const GroundTerm& g) { return g.key(); }

namespace {

GroundTerm ground_rec(const Process& p, const std::vector<Name>& values) {
  return std::visit(
      [&](const auto& n) -> GroundTerm {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PNil>) {
          return GroundTerm();
        } else if constexpr (std::is_same_v<T, PTau>) {
          return GroundTerm::act(ConcAction::tau(), ground_rec(n.cont, values));
        } else if constexpr (std::is_same_v<T, POut>) {
          return GroundTerm::act(ConcAction{ActKind::Out, n.subject, n.payload}, ground_rec(n.cont, values));
        } else if constexpr (std::is_same_v<T, PSum>) {
          std::vector<GroundTerm> branches;
          for (const auto& b : n.branches) {
            for_each_assignment(b.binders, values, [&](const Substitution& s) {
              ConcAction a = ConcAction::tau();
              if (!b.subject.is_opaque()) {
                a = ConcAction{ActKind::In, b.subject, {}};
                for (const auto& v : b.binders) a.payload.push_back(s.at(v));
              }
              branches.push_back(GroundTerm::act(std::move(a), ground_rec(ckit::apply(b.cont, s), values)));
              return true;
            });
          }
          return GroundTerm::sum(std::move(branches));
        } else if constexpr (std::is_same_v<T, PPar>) {
          std::vector<GroundTerm> parts;
          for (const auto& q : n.parts) parts.push_back(ground_rec(q, values));
          return GroundTerm::par(std::move(parts));
        } else {
          GroundTerm::CondRule rule = GroundTerm::CondRule::Opaque;
          if (!n.lhs.is_opaque() && !n.rhs.is_opaque())
            rule = n.lhs.ident == n.rhs.ident ? GroundTerm::CondRule::Then : GroundTerm::CondRule::Else;
          return GroundTerm::cond(rule, n.lhs, n.rhs, ground_rec(n.then_branch, values),
                                  ground_rec(n.else_branch, values));
        }
      },
      p.node().v);
}

}  // namespace

GroundTerm ground(const Process& p, const Domain& dom) {
  if (!is_closed(p)) throw Error(ErrorKind::OpenTerm, "cannot ground open process '" + p.key() + "'");
  return ground_rec(normalize(p), dom.values());
}

bool GroundStep::operator<(const GroundStep& o) const {
  return std::forward_as_tuple(action, target.key()) < std::forward_as_tuple(o.action, o.target.key());
}

std::vector<GroundStep> ground_steps(const GroundTerm& g) {
  std::vector<GroundStep> out;
  switch (g.kind()) {
    case GroundTerm::Kind::Nil:
      break;
    case GroundTerm::Kind::Act:
      out.push_back({g.action(), g.kids().front()});
      break;
    case GroundTerm::Kind::Sum:
      for (const auto& k : g.kids()) {
        auto sub = ground_steps(k);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      break;
    case GroundTerm::Kind::Par:
      for (std::size_t i = 0; i < g.kids().size(); ++i) {
        for (const auto& st : ground_steps(g.kids()[i])) {
          auto parts = g.kids();
          parts[i] = st.target;
          out.push_back({st.action, GroundTerm::par(std::move(parts))});
        }
      }
      break;
    case GroundTerm::Kind::Cond: {
      auto rule = g.rule();
      if (rule != GroundTerm::CondRule::Else) {
        auto sub = ground_steps(g.kids()[0]);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      if (rule != GroundTerm::CondRule::Then) {
        auto sub = ground_steps(g.kids()[1]);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Action contract_action(const ConcAction& a) {
  if (a.is_tau()) throw Error(ErrorKind::Precondition, "tau has no contract action");
  std::string name = a.subject.is_opaque() ? "*" : a.subject.ident;
  return Action{name, a.kind == ActKind::Out};
}

namespace {

using DerivationPtr = std::shared_ptr<const Derivation>;
using Memo = std::unordered_map<std::string, DerivationPtr>;

void add_unique(std::vector<Contract>& xs, Contract c) {
  for (const auto& x : xs)
    if (x == c) return;
  xs.push_back(std::move(c));
}

// Shape shared by the sum and parallel rules: an external sum of the visible
// prefixes in internal choice with the continuations of silent ones.
Contract choice_type(const std::vector<Contract>& visible, const std::vector<Contract>& silent) {
  std::vector<Contract> alts;
  if (!visible.empty() || silent.empty()) alts.push_back(Contract::ext(visible));
  for (const auto& s : silent) add_unique(alts, s);
  return Contract::intc(std::move(alts));
}

DerivationPtr derive_rec(const GroundTerm& g, Memo& memo) {
  if (auto it = memo.find(g.key()); it != memo.end()) return it->second;
  auto d = std::make_shared<Derivation>();
  d->subject = g.key();
  switch (g.kind()) {
    case GroundTerm::Kind::Nil:
      d->rule = "Nil";
      d->type = Contract::nil();
      break;
    case GroundTerm::Kind::Act: {
      auto sub = derive_rec(g.kids().front(), memo);
      d->premises.push_back(sub);
      if (g.action().is_tau()) {
        d->rule = "Tau";
        d->type = sub->type;
      } else {
        d->rule = "Pref";
        d->type = Contract::prefix(contract_action(g.action()), sub->type);
      }
      break;
    }
    case GroundTerm::Kind::Sum:
    case GroundTerm::Kind::Par: {
      d->rule = g.kind() == GroundTerm::Kind::Sum ? "Sum" : "Par";
      std::vector<Contract> visible, silent;
      for (const auto& st : ground_steps(g)) {
        auto sub = derive_rec(st.target, memo);
        d->premises.push_back(sub);
        if (st.action.is_tau())
          add_unique(silent, sub->type);
        else
          add_unique(visible, Contract::prefix(contract_action(st.action), sub->type));
      }
      d->type = choice_type(visible, silent);
      break;
    }
    case GroundTerm::Kind::Cond: {
      auto t = derive_rec(g.kids()[0], memo);
      auto e = derive_rec(g.kids()[1], memo);
      switch (g.rule()) {
        case GroundTerm::CondRule::Opaque: {
          d->rule = "cond1";
          d->premises = {t, e};
          std::vector<Contract> alts{t->type};
          add_unique(alts, e->type);
          d->type = Contract::intc(std::move(alts));
          break;
        }
        case GroundTerm::CondRule::Then:
          d->rule = "cond2";
          d->premises = {t};
          d->type = t->type;
          break;
        case GroundTerm::CondRule::Else:
          d->rule = "cond3";
          d->premises = {e};
          d->type = e->type;
          break;
      }
      break;
    }
  }
  memo.emplace(g.key(), d);
  return d;
}

void render_rec(const Derivation& d, int depth, std::string& out) {
  out += std::string(static_cast<std::size_t>(depth) * 2, ' ') + "(" + d.rule + ") " + d.subject + " : " +
         d.type.key() + "\n";
  for (const auto& p : d.premises) render_rec(*p, depth + 1, out);
}

}  // namespace

std::string render(const Derivation& d) {
  std::string out;
  render_rec(d, 0, out);
  return out;
}

Contract type_of(const GroundTerm& g) {
  Memo memo;
  return derive_rec(g, memo)->type;
}

Contract type_of(const Process& p, const Domain& dom) { return type_of(ground(p, dom)); }

Derivation derive(const Process& p, const Domain& dom) {
  Memo memo;
  return *derive_rec(ground(p, dom), memo);
}

Contract type_of_abstraction(const Process& p, const NameSet& visible, const Domain& dom) {
  return abstract_contract(type_of(p, dom), visible);
}

Derivation derive_abstraction(const Process& p, const NameSet& visible, const Domain& dom) {
  Derivation d;
  d.rule = "TypeAbstraction";
  d.premises.push_back(std::make_shared<Derivation>(derive(p, dom)));
  std::string v;
  for (const auto& n : visible) v += (v.empty() ? "" : ",") + n;
  d.subject = "A{" + v + "}[" + d.premises.front()->subject + "]";
  d.type = abstract_contract(d.premises.front()->type, visible);
  return d;
}

}  // namespace ckit
