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

#include "ckit/process_semantics.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace ckit {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += xs[i];
  }
  return s;
}

std::string join(const std::vector<Name>& xs) {
  std::vector<std::string> ss;
  for (const auto& n : xs) ss.push_back(to_string(n));
  return join(ss);
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  for (int i = 1;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!taken.count(cand)) return cand;
  }
}

}  // namespace

std::string to_string(const SymAction& a) {
  switch (a.kind) {
    case ActKind::Tau:
      return "tau";
    case ActKind::In:
      return to_string(a.subject) + (a.binders.empty() ? "" : "(" + join(a.binders) + ")");
    case ActKind::Out:
      return to_string(a.subject) + "!" + (a.payload.empty() ? "" : "<" + join(a.payload) + ">");
  }
  return {};
}

std::set<std::string> bound_vars(const SymAction& a) {
  return std::set<std::string>(a.binders.begin(), a.binders.end());
}

SymAction apply(const SymAction& a, const Substitution& s) {
  SymAction out = a;
  for (auto& m : out.payload) m = ckit::apply(m, s);
  return out;
}

bool SymbolicStep::operator<(const SymbolicStep& o) const {
  return std::forward_as_tuple(cond.key(), action, target.key()) <
         std::forward_as_tuple(o.cond.key(), o.action, o.target.key());
}

bool ConcreteStep::operator<(const ConcreteStep& o) const {
  return std::forward_as_tuple(action, target.key()) < std::forward_as_tuple(o.action, o.target.key());
}

std::vector<SymbolicStep> symbolic_steps(const Process& p, const Domain& dom) {
  std::vector<SymbolicStep> out;
  const Condition yes = Condition::truth();
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PTau>) {
          out.push_back({yes, SymAction::tau(), normalize(n.cont)});
        } else if constexpr (std::is_same_v<T, POut>) {
          out.push_back({yes, SymAction{ActKind::Out, n.subject, {}, n.payload}, normalize(n.cont)});
        } else if constexpr (std::is_same_v<T, PSum>) {
          for (const auto& b : n.branches) {
            if (b.subject.is_opaque())
              out.push_back({yes, SymAction{ActKind::Tau, b.subject, b.binders, {}}, normalize(b.cont)});
            else
              out.push_back({yes, SymAction{ActKind::In, b.subject, b.binders, {}}, normalize(b.cont)});
          }
        } else if constexpr (std::is_same_v<T, PPar>) {
          for (std::size_t i = 0; i < n.parts.size(); ++i) {
            std::set<std::string> others;
            for (std::size_t j = 0; j < n.parts.size(); ++j)
              if (j != i)
                for (const auto& x : free_names(n.parts[j])) others.insert(x.ident);
            for (auto st : symbolic_steps(n.parts[i], dom)) {
              // Side condition bn(act) # fn(others): alpha-rename the received names.
              if (!st.action.binders.empty()) {
                std::set<std::string> taken = others;
                for (const auto& x : free_names(st.target)) taken.insert(x.ident);
                auto bv = bound_vars(p);
                taken.insert(bv.begin(), bv.end());
                Substitution ren;
                for (auto& v : st.action.binders) {
                  if (!others.count(v)) continue;
                  std::string fresh = fresh_name(v, taken);
                  taken.insert(fresh);
                  ren[v] = Name::var(fresh);
                  v = fresh;
                }
                if (!ren.empty()) st.target = ckit::apply(st.target, ren);
              }
              std::vector<Process> parts = n.parts;
              parts[i] = st.target;
              out.push_back({st.cond, st.action, normalize(proc::par(std::move(parts)))});
            }
          }
        } else if constexpr (std::is_same_v<T, PIf>) {
          bool opaque = n.lhs.is_opaque() || n.rhs.is_opaque();
          for (const auto& st : symbolic_steps(n.then_branch, dom)) {
            if (opaque) out.push_back(st);
            Condition c = Condition::conj_simplified(Condition::eq(n.lhs, n.rhs), st.cond);
            if (is_consistent(c, dom)) out.push_back({c, st.action, st.target});
          }
          for (const auto& st : symbolic_steps(n.else_branch, dom)) {
            if (opaque) out.push_back(st);
            Condition c = Condition::conj_simplified(Condition::neq(n.lhs, n.rhs), st.cond);
            if (is_consistent(c, dom)) out.push_back({c, st.action, st.target});
          }
        }
      },
      p.node().v);
  sort_unique(out);
  return out;
}

std::string to_string(const ConcAction& a) {
  switch (a.kind) {
    case ActKind::Tau:
      return "tau";
    case ActKind::In:
      return to_string(a.subject) + (a.payload.empty() ? "" : "(" + join(a.payload) + ")");
    case ActKind::Out:
      return to_string(a.subject) + "!" + (a.payload.empty() ? "" : "<" + join(a.payload) + ">");
  }
  return {};
}

std::vector<ConcreteStep> concrete_steps(const Process& p, const Domain& dom) {
  if (!is_closed(p)) throw Error(ErrorKind::OpenTerm, "process '" + p.key() + "' has free variables");
  std::vector<ConcreteStep> out;
  const auto values = dom.values();
  for (const auto& st : symbolic_steps(p, dom)) {
    std::set<std::string> vars = free_vars(st.cond);
    auto tv = free_vars(st.target);
    vars.insert(tv.begin(), tv.end());
    for (const auto& v : st.action.binders) vars.insert(v);
    for (const auto& m : st.action.payload)
      if (m.is_var()) vars.insert(m.ident);
    std::vector<std::string> vs(vars.begin(), vars.end());
    for_each_assignment(vs, values, [&](const Substitution& s) {
      if (!respects(s, st.cond)) return true;
      ConcAction a{st.action.kind, st.action.subject, {}};
      if (st.action.kind == ActKind::Out) {
        for (const auto& m : st.action.payload) a.payload.push_back(ckit::apply(m, s));
      } else if (st.action.kind == ActKind::In) {
        for (const auto& v : st.action.binders) a.payload.push_back(s.at(v));
      }
      out.push_back({std::move(a), normalize(ckit::apply(st.target, s))});
      return true;
    });
  }
  sort_unique(out);
  return out;
}

ConcAction hide_action(const ConcAction& a, const NameSet& visible) {
  if (a.is_tau() || a.is_success()) return a;
  if (a.subject.is_port() && visible.count(a.subject.ident)) return a;
  return ConcAction::tau();
}

std::vector<ConcreteStep> abstract_steps(const Process& p, const NameSet& visible, const Domain& dom) {
  auto steps = concrete_steps(p, dom);
  for (auto& st : steps) st.action = hide_action(st.action, visible);
  sort_unique(steps);
  return steps;
}

std::vector<ConcreteStep> Agent::steps(const Domain& dom) const {
  return visible ? abstract_steps(process, *visible, dom) : concrete_steps(process, dom);
}

std::string Agent::to_string() const {
  if (!visible) return process.key();
  std::string v;
  for (const auto& n : *visible) v += (v.empty() ? "" : ",") + n;
  return "A{" + v + "}[" + process.key() + "]";
}

std::string to_string(const Configuration& c) { return c.client.to_string() + " || " + c.service.to_string(); }

std::vector<Configuration> parallel_step(const Configuration& c, const Domain& dom) {
  std::vector<Configuration> out;
  auto cs = c.client.steps(dom);
  auto ss = c.service.steps(dom);
  for (const auto& st : cs)
    if (st.action.is_tau()) out.push_back({c.client.with(st.target), c.service});
  for (const auto& st : ss)
    if (st.action.is_tau()) out.push_back({c.client, c.service.with(st.target)});
  for (const auto& a : cs) {
    if (a.action.is_tau() || a.action.is_success() || !a.action.subject.is_port()) continue;
    for (const auto& b : ss) {
      if (b.action.is_tau() || b.action.kind == a.action.kind) continue;
      if (b.action.subject != a.action.subject || b.action.payload != a.action.payload) continue;
      out.push_back({c.client.with(a.target), c.service.with(b.target)});
    }
  }
  sort_unique(out);
  return out;
}

std::vector<std::string> symbolic_trace(const Process& p, const Domain& dom) {
  std::vector<std::string> lines;
  std::deque<Process> queue{normalize(p)};
  std::set<std::string> seen{queue.front().key()};
  while (!queue.empty()) {
    Process cur = queue.front();
    queue.pop_front();
    for (const auto& st : symbolic_steps(cur, dom)) {
      lines.push_back(st.cond.key() + " | " + to_string(st.action) + " | " + st.target.key());
      if (seen.insert(st.target.key()).second) queue.push_back(st.target);
    }
  }
  return lines;
}

std::vector<std::string> concrete_trace(const Agent& a, const Domain& dom) {
  std::vector<std::string> lines;
  std::deque<Process> queue{normalize(a.process)};
  std::set<std::string> seen{queue.front().key()};
  while (!queue.empty()) {
    Process cur = queue.front();
    queue.pop_front();
    for (const auto& st : a.with(cur).steps(dom)) {
      lines.push_back(to_string(st.action) + " | " + st.target.key());
      if (seen.insert(st.target.key()).second) queue.push_back(st.target);
    }
  }
  return lines;
}

}  // namespace ckit
