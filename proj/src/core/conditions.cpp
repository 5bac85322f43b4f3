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

#include "ckit/conditions.hpp"

namespace ckit {

namespace {

bool atom_true(const Name& l, const Name& r, bool equal) {
  if (l.is_var() || r.is_var()) throw Error(ErrorKind::OpenTerm, "condition is not ground");
  if (l.is_opaque() || r.is_opaque()) return true;
  return (l.ident == r.ident) == equal;
}

bool eval_under(const Condition& m, const Substitution& s, bool& ground) {
  switch (m.op()) {
    case Condition::Op::True:
      return true;
    case Condition::Op::False:
      return false;
    case Condition::Op::Eq:
    case Condition::Op::Neq: {
      Name l = ckit::apply(m.lhs(), s), r = ckit::apply(m.rhs(), s);
      if (l.is_var() || r.is_var()) {
        ground = false;
        return false;
      }
      return atom_true(l, r, m.op() == Condition::Op::Eq);
    }
    case Condition::Op::And: {
      // Evaluate both sides so that groundness is judged on the whole formula.
      bool a = eval_under(m.left(), s, ground);
      bool b = eval_under(m.right(), s, ground);
      return a && b;
    }
    case Condition::Op::Or: {
      bool a = eval_under(m.left(), s, ground);
      bool b = eval_under(m.right(), s, ground);
      return a || b;
    }
  }
  return false;
}

std::vector<Name> domain_for(const Domain& dom, std::initializer_list<const Condition*> conds) {
  std::set<std::string> cs(dom.constants.begin(), dom.constants.end());
  for (const auto* c : conds) {
    auto more = constants_of(*c);
    cs.insert(more.begin(), more.end());
  }
  std::vector<Name> out;
  for (const auto& c : cs) out.push_back(Name::constant(c));
  out.push_back(Name::opaque());
  return out;
}

}  // namespace

bool eval_ground(const Condition& m) {
  bool ground = true;
  bool v = eval_under(m, {}, ground);
  if (!ground) throw Error(ErrorKind::OpenTerm, "condition '" + m.key() + "' is not ground");
  return v;
}

bool respects(const Substitution& s, const Condition& m) {
  bool ground = true;
  bool v = eval_under(m, s, ground);
  return ground && v;
}

std::set<std::string> constants_of(const Condition& m) {
  std::set<std::string> out;
  for (const auto& n : free_names(m))
    if (n.is_constant()) out.insert(n.ident);
  return out;
}

bool for_each_assignment(const std::vector<std::string>& vars, const std::vector<Name>& values,
                         const std::function<bool(const Substitution&)>& fn) {
  Substitution s;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == vars.size()) return fn(s);
    for (const auto& v : values) {
      s[vars[i]] = v;
      if (!rec(i + 1)) return false;
    }
    s.erase(vars[i]);
    return true;
  };
  return rec(0);
}

bool entails(const Condition& m, const Condition& n, const Domain& dom) {
  auto fv = free_vars(m);
  auto fvn = free_vars(n);
  fv.insert(fvn.begin(), fvn.end());
  std::vector<std::string> vars(fv.begin(), fv.end());
  return for_each_assignment(vars, domain_for(dom, {&m, &n}),
                             [&](const Substitution& s) { return !respects(s, m) || respects(s, n); });
}

bool is_consistent(const Condition& m, const Domain& dom) {
  auto fv = free_vars(m);
  std::vector<std::string> vars(fv.begin(), fv.end());
  bool found = false;
  for_each_assignment(vars, domain_for(dom, {&m}), [&](const Substitution& s) {
    found = respects(s, m);
    return !found;
  });
  return found;
}

bool is_decomposition(const std::vector<Condition>& d, const Condition& m, const Domain& dom) {
  return entails(m, Condition::any_of(d), dom);
}

Condition restrict(const Condition& m, const NameSet& visible) {
  auto hidden = [&](const Name& n) { return !n.is_opaque() && !visible.count(n.ident); };
  switch (m.op()) {
    case Condition::Op::Eq:
    case Condition::Op::Neq:
      return hidden(m.lhs()) || hidden(m.rhs()) ? Condition::truth() : m;
    case Condition::Op::And:
      return Condition::conj(restrict(m.left(), visible), restrict(m.right(), visible));
    case Condition::Op::Or:
      return Condition::disj(restrict(m.left(), visible), restrict(m.right(), visible));
    default:
      return m;
  }
}

std::vector<Substitution> satisfying_substitutions(const Condition& m, const std::set<std::string>& vars,
                                                   const Domain& dom) {
  for (const auto& v : free_vars(m))
    if (!vars.count(v)) throw Error(ErrorKind::Precondition, "variable '" + v + "' not enumerated");
  std::vector<Substitution> out;
  std::vector<std::string> vs(vars.begin(), vars.end());
  for_each_assignment(vs, domain_for(dom, {&m}), [&](const Substitution& s) {
    if (respects(s, m)) out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace ckit
