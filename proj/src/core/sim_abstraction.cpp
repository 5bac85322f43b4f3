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

#include "ckit/sim_abstraction.hpp"

#include <map>
#include <optional>

namespace ckit {

std::set<std::string> visible_received_names(const SymAction& a, const NameSet& visible) {
  if (a.kind == ActKind::In && a.subject.is_port() && visible.count(a.subject.ident))
    return {a.binders.begin(), a.binders.end()};
  return {};
}

SymAction hide_sym_action(const SymAction& a, const NameSet& visible) {
  if (a.kind == ActKind::Tau) return a;
  if (a.subject.is_port() && visible.count(a.subject.ident)) return a;
  // A hidden input still binds its names in the residual.
  return SymAction{ActKind::Tau, Name::opaque(), a.kind == ActKind::In ? a.binders : std::vector<std::string>{}, {}};
}

Condition characteristic(const Substitution& s, const Domain& dom) {
  Condition out = Condition::truth();
  for (const auto& [v, val] : s) {
    if (val.is_opaque()) {
      for (const auto& c : dom.constants)
        out = Condition::conj_simplified(out, Condition::neq(Name::var(v), Name::constant(c)));
    } else {
      out = Condition::conj_simplified(out, Condition::eq(Name::var(v), val));
    }
  }
  return out;
}

namespace {

using Failure = std::optional<std::vector<std::string>>;

std::string show(const Substitution& s) {
  std::string out = "{";
  for (const auto& [v, val] : s) out += (out.size() > 1 ? ", " : "") + v + "->" + to_string(val);
  return out + "}";
}

std::string show(const SymbolicStep& st) {
  return st.cond.key() + " | " + to_string(st.action) + " | " + st.target.key();
}

std::set<std::string> process_constants(const Process& p) {
  std::set<std::string> out;
  for (const auto& n : free_names(p))
    if (n.is_constant()) out.insert(n.ident);
  return out;
}

class Checker {
 public:
  explicit Checker(Domain dom) : dom_(std::move(dom)), values_(dom_.values()) {}

  Failure node(const Process& p, const Process& q, const NameSet& v, const Condition& m) {
    std::string key = p.key() + "\x1f" + q.key() + "\x1f" + m.key() + "\x1f";
    for (const auto& n : v) key += n + ",";
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Failure res = compute(p, q, v, m);
    memo_.emplace(std::move(key), res);
    return res;
  }

  std::size_t explored() const { return memo_.size(); }

 private:
  struct Move {
    const SymbolicStep* abstract_step;
    const SymbolicStep* concrete_step;
  };

  Failure compute(const Process& p, const Process& q, const NameSet& v, const Condition& m) {
    std::set<std::string> fv = free_vars(m);
    for (const auto& x : free_vars(p)) fv.insert(x);
    for (const auto& x : free_vars(q)) fv.insert(x);
    std::vector<std::string> vars(fv.begin(), fv.end());
    auto psteps = symbolic_steps(p, dom_);
    auto qsteps = symbolic_steps(q, dom_);

    // Clause 1: the abstract process simulates every concrete move.
    for (const auto& qs : qsteps) {
      Condition base = Condition::conj(m, qs.cond);
      Failure fail;
      for_each_assignment(vars, values_, [&](const Substitution& s) {
        if (!respects(s, base)) return true;
        std::optional<std::vector<std::string>> first_reason;
        for (const auto& ps : psteps) {
          if (!respects(s, ps.cond)) continue;
          auto sub = try_match({&ps, &qs}, v, s);
          if (!sub) return true;
          if (!first_reason && !sub->empty()) {
            first_reason = std::vector<std::string>{"  matched by abstract move " + show(ps) + ", then:"};
            for (const auto& line : *sub) first_reason->push_back("  " + line);
          }
        }
        fail = std::vector<std::string>{"concrete move " + show(qs) + " under " + show(s) +
                                        " is not simulated by " + p.key()};
        if (first_reason) fail->insert(fail->end(), first_reason->begin(), first_reason->end());
        return false;
      });
      if (fail) return fail;
    }

    // Clause 2: the concrete process simulates every abstract move, up to
    // constraints on hidden names.
    for (const auto& ps : psteps) {
      Condition base = Condition::conj(m, ps.cond);
      Failure fail;
      for_each_assignment(vars, values_, [&](const Substitution& s) {
        if (!respects(s, base)) return true;
        std::optional<std::vector<std::string>> first_reason;
        for (const auto& qs : qsteps) {
          if (!respects(s, restrict(qs.cond, v))) continue;
          auto sub = try_match({&ps, &qs}, v, s);
          if (!sub) return true;
          if (!first_reason && !sub->empty()) {
            first_reason = std::vector<std::string>{"  matched by concrete move " + show(qs) + ", then:"};
            for (const auto& line : *sub) first_reason->push_back("  " + line);
          }
        }
        fail = std::vector<std::string>{"abstract move " + show(ps) + " under " + show(s) +
                                        " is not simulated by " + q.key()};
        if (first_reason) fail->insert(fail->end(), first_reason->begin(), first_reason->end());
        return false;
      });
      if (fail) return fail;
    }
    return std::nullopt;
  }

  // Checks label agreement under `s` and relates the residuals. Returns
  // nullopt on success, an empty trace on label mismatch, or the residual
  // failure.
  Failure try_match(const Move& mv, const NameSet& v, const Substitution& s) {
    SymAction a = hide_sym_action(mv.concrete_step->action, v);
    SymAction b = hide_sym_action(mv.abstract_step->action, v);
    if (a.kind != b.kind) return std::vector<std::string>{};
    Process abstract_next = mv.abstract_step->target;
    if (a.kind == ActKind::Tau) {
      // Silent inputs on both sides: alpha-convert the abstract binders so
      // both residuals refer to the same received values.
      if (!a.binders.empty() && a.binders.size() == b.binders.size()) {
        Substitution ren;
        for (std::size_t i = 0; i < a.binders.size(); ++i)
          if (a.binders[i] != b.binders[i]) ren[b.binders[i]] = Name::var(a.binders[i]);
        if (!ren.empty()) abstract_next = normalize(ckit::apply(abstract_next, ren));
      }
    } else if (a.kind == ActKind::In) {
      if (a.subject != b.subject || a.binders.size() != b.binders.size()) return std::vector<std::string>{};
      Substitution ren;
      for (std::size_t i = 0; i < a.binders.size(); ++i)
        if (a.binders[i] != b.binders[i]) ren[b.binders[i]] = Name::var(a.binders[i]);
      if (!ren.empty()) abstract_next = normalize(ckit::apply(abstract_next, ren));
    } else if (a.kind == ActKind::Out) {
      if (a.subject != b.subject || a.payload.size() != b.payload.size()) return std::vector<std::string>{};
      for (std::size_t i = 0; i < a.payload.size(); ++i)
        if (!respects(s, Condition::eq(a.payload[i], b.payload[i]))) return std::vector<std::string>{};
    }
    NameSet next_v = v;
    for (const auto& x : visible_received_names(mv.concrete_step->action, v)) next_v.insert(x);
    const Process& concrete_next = mv.concrete_step->target;

    auto live = free_vars(abstract_next);
    for (const auto& x : free_vars(concrete_next)) live.insert(x);
    Substitution pinned;
    for (const auto& [x, val] : s)
      if (live.count(x)) pinned.emplace(x, val);
    return node(abstract_next, concrete_next, next_v, characteristic(pinned, dom_));
  }

  Domain dom_;
  std::vector<Name> values_;
  std::map<std::string, Failure> memo_;
};

}  // namespace

AbsResult check_abstraction(const AbsQuery& q, const Domain& dom) {
  std::set<std::string> consts(dom.constants.begin(), dom.constants.end());
  for (const auto& c : process_constants(q.abstract_process)) consts.insert(c);
  for (const auto& c : process_constants(q.concrete_process)) consts.insert(c);
  for (const auto& c : constants_of(q.index)) consts.insert(c);
  Domain wd{{consts.begin(), consts.end()}};

  if (!is_consistent(q.index, wd))
    throw Error(ErrorKind::Precondition, "inconsistent index condition '" + q.index.key() + "'");

  AbsResult res;
  std::vector<std::string> outside;
  for (const auto& n : free_names(q.abstract_process))
    if (!n.is_constant() && !q.visible.count(n.ident)) outside.push_back(n.ident);
  if (!outside.empty()) {
    std::string names;
    for (const auto& n : outside) names += (names.empty() ? "" : ", ") + n;
    res.trace.push_back("free names of the abstract process are not visible: " + names);
    return res;
  }

  std::set<std::string> avoid(q.visible.begin(), q.visible.end());
  for (const auto& n : free_names(q.abstract_process)) avoid.insert(n.ident);
  for (const auto& n : free_names(q.concrete_process)) avoid.insert(n.ident);
  for (const auto& n : free_names(q.index)) avoid.insert(n.ident);
  Process concrete = uniquify_binders(normalize(q.concrete_process), avoid);
  auto qb = bound_vars(concrete);
  avoid.insert(qb.begin(), qb.end());
  Process abstract = uniquify_binders(normalize(q.abstract_process), avoid);

  Checker checker(wd);
  auto fail = checker.node(abstract, concrete, q.visible, q.index);
  res.explored = checker.explored();
  res.holds = !fail.has_value();
  if (fail) res.trace = std::move(*fail);
  return res;
}

}  // namespace ckit
