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

// Property checks shared by the unit suites and the acceptance gate. Each
// returns an empty string on success and a readable failure otherwise.

#ifndef CKIT_TESTS_PROPERTIES_HPP
#define CKIT_TESTS_PROPERTIES_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckit/abstraction.hpp"
#include "ckit/relations.hpp"
#include "ckit/sim_abstraction.hpp"
#include "ckit/typing.hpp"
#include "support/generators.hpp"

namespace props {

using ckit::Action;
using ckit::Contract;
using ckit::NameSet;
using ckit::ReadySet;

inline std::string show(const Contract& c) { return ckit::to_string(c); }

inline std::string show(const NameSet& v) {
  std::string out = "{";
  for (const auto& n : v) out += (out.size() > 1 ? "," : "") + n;
  return out + "}";
}

/// States reachable from `sigma` through hidden actions only, `sigma` included.
inline std::vector<Contract> hidden_closure(const Contract& sigma, const NameSet& v) {
  std::vector<Contract> out{sigma};
  std::deque<Contract> queue{sigma};
  while (!queue.empty()) {
    Contract c = queue.front();
    queue.pop_front();
    for (const auto& a : ckit::init(c)) {
      if (ckit::is_visible(a, v)) continue;
      Contract n = *ckit::step(c, a);
      if (std::find(out.begin(), out.end(), n) == out.end()) {
        out.push_back(n);
        queue.push_back(n);
      }
    }
  }
  return out;
}

inline ReadySet visible_part(const ReadySet& r, const NameSet& v) {
  ReadySet out;
  for (const auto& a : r)
    if (ckit::is_visible(a, v)) out.insert(a);
  return out;
}

/// Every ready set of A_V(sigma) is the visible part of a ready set of some
/// hidden-reachable state.
inline std::string ready_forward(const Contract& sigma, const NameSet& v) {
  auto abs = ckit::abstract_contract(sigma, v);
  std::set<ReadySet> candidates;
  for (const auto& s : hidden_closure(sigma, v))
    for (const auto& r : ckit::ready_sets(s)) candidates.insert(visible_part(r, v));
  for (const auto& r : ckit::ready_sets(abs))
    if (!candidates.count(r))
      return "A" + show(v) + "(" + show(sigma) + ") offers " + ckit::to_string(r) + " with no concrete source";
  return {};
}

/// The converse read literally: the visible part of every ready set of every
/// hidden-reachable state is a ready set of A_V(sigma). `restricted` only
/// considers sources whose ready set is empty or meets V.
inline std::string ready_converse(const Contract& sigma, const NameSet& v, bool restricted) {
  auto abs_ready = ckit::ready_sets(ckit::abstract_contract(sigma, v));
  for (const auto& s : hidden_closure(sigma, v))
    for (const auto& r : ckit::ready_sets(s)) {
      auto vis = visible_part(r, v);
      if (restricted && vis.empty() && !r.empty()) continue;
      if (!abs_ready.count(vis))
        return show(s) + " offers " + ckit::to_string(r) + " but A" + show(v) + "(" + show(sigma) +
               ") never offers " + ckit::to_string(vis);
    }
  return {};
}

/// Actions worth probing for sigma: every name in both polarities plus e.
inline std::vector<Action> probe_actions(const Contract& sigma) {
  std::vector<Action> out{ckit::kSuccess};
  for (const auto& n : ckit::action_names(sigma)) {
    if (n == "e") continue;
    out.push_back({n, false});
    out.push_back({n, true});
  }
  return out;
}

/// A_V(sigma) steps with alpha exactly when alpha is visible and some
/// hidden-reachable state steps with alpha; the continuation is then the
/// internal choice of the abstracted continuations.
inline std::string alc_characterisation(const Contract& sigma, const NameSet& v) {
  for (const auto& a : probe_actions(sigma)) {
    auto rep = ckit::abstraction_continuation_check(sigma, a, v);
    if (!rep.alc_characterisation)
      return "alc mismatch for " + show(sigma) + " on " + ckit::to_string(a) + " with V=" + show(v);
  }
  return {};
}

/// When sigma steps with a visible alpha: A_V(sigma)(alpha) compared with
/// A_V(sigma(alpha)), either for equivalence or for refinement.
inline std::string visible_continuation(const Contract& sigma, const NameSet& v, bool equivalence) {
  for (const auto& a : probe_actions(sigma)) {
    auto rep = ckit::abstraction_continuation_check(sigma, a, v);
    std::optional<bool> r = equivalence ? rep.visible_equivalent : rep.visible_refines;
    if (r && !*r)
      return "A" + show(v) + "(" + show(sigma) + ")(" + ckit::to_string(a) + ") = " +
             show(*rep.abstract_continuation) + (equivalence ? " is not equivalent to " : " is not below ") +
             show(*rep.visible_continuation);
  }
  return {};
}

/// Abstraction is monotone under the subcontract preorder.
inline std::string monotone(const Contract& sigma, const Contract& rho, const NameSet& v) {
  auto a = ckit::abstract_contract(sigma, v), b = ckit::abstract_contract(rho, v);
  if (!ckit::subcontract(a, b).holds)
    return "A" + show(v) + " not monotone: " + show(a) + " vs " + show(b);
  return {};
}

/// Given sigma(alpha) below rho: A_V(sigma) below A_V(rho) for hidden alpha,
/// A_V(sigma)(alpha) below A_V(rho) for visible alpha.
inline std::string continuation_monotone(const Contract& sigma, const Action& alpha, const Contract& rho,
                                         const NameSet& v) {
  auto as = ckit::abstract_contract(sigma, v), ar = ckit::abstract_contract(rho, v);
  if (!ckit::is_visible(alpha, v)) {
    if (!ckit::subcontract(as, ar).holds) return "hidden " + ckit::to_string(alpha) + ": " + show(as) + " vs " + show(ar);
    return {};
  }
  auto next = ckit::step(as, alpha);
  if (!next) return "A" + show(v) + "(" + show(sigma) + ") cannot do " + ckit::to_string(alpha);
  if (!ckit::subcontract(*next, ar).holds)
    return "visible " + ckit::to_string(alpha) + ": " + show(*next) + " vs " + show(ar);
  return {};
}

/// Random visible sets drawn from the names of `c` plus occasional extras.
inline NameSet random_visible(gen::Rng& rng, const Contract& c) {
  auto names = ckit::action_names(c);
  std::vector<std::string> pool(names.begin(), names.end());
  pool.push_back("q");
  return gen::name_subset(rng, pool);
}

/// Random pairs related by subcontract: internal-choice widening of the
/// left side, then filtered by the decision procedure.
inline std::vector<std::pair<Contract, Contract>> subcontract_pairs(gen::Rng& rng, std::size_t n,
                                                                    const gen::ContractShape& shape) {
  std::vector<std::pair<Contract, Contract>> out;
  while (out.size() < n) {
    Contract rho = gen::contract(rng, 3, shape);
    Contract sigma = rho;
    int k = gen::pick(rng, 4);
    if (k == 0) sigma = Contract::intc(rho, gen::contract(rng, 3, shape));
    else if (k == 1) sigma = gen::contract(rng, 3, shape);
    else if (k == 2) sigma = ckit::normalize(Contract::intc(rho, gen::contract(rng, 2, shape)));
    if (ckit::subcontract(sigma, rho).holds) out.push_back({sigma, rho});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Typing

using ckit::Agent;
using ckit::Domain;
using ckit::Process;

inline Contract agent_type(const Agent& a, const Domain& dom) {
  return a.visible ? ckit::type_of_abstraction(a.process, *a.visible, dom) : ckit::type_of(a.process, dom);
}

struct ConsistencyStats {
  std::size_t states = 0;
  std::size_t steps = 0;
};

/// Checks the residual and readiness conditions of a consistent type system
/// at every state reachable from `a`, plus acyclicity of the state graph.
inline std::string consistency(const Agent& a, const Domain& dom, ConsistencyStats* stats = nullptr) {
  std::map<std::string, int> colour;  // 1 on the stack, 2 done
  std::string failure;
  std::function<bool(const Agent&)> visit = [&](const Agent& cur) {
    std::string key = cur.to_string();
    if (auto it = colour.find(key); it != colour.end()) {
      if (it->second == 1) failure = "cycle through " + key;
      return it->second == 2;
    }
    colour[key] = 1;
    if (stats) ++stats->states;
    Contract sigma = agent_type(cur, dom);
    auto steps = cur.steps(dom);
    bool has_tau = false;
    std::set<Action> enabled;
    for (const auto& st : steps) {
      if (stats) ++stats->steps;
      Agent next = cur.with(st.target);
      Contract rho = agent_type(next, dom);
      if (st.action.is_tau()) {
        has_tau = true;
        if (!ckit::subcontract(sigma, rho).holds) {
          failure = key + " --tau--> " + next.to_string() + ": " + show(sigma) + " not below " + show(rho);
          return false;
        }
      } else {
        Action alpha = ckit::contract_action(st.action);
        enabled.insert(alpha);
        auto cont = ckit::step(sigma, alpha);
        if (!cont) {
          failure = key + ": type " + show(sigma) + " cannot do " + ckit::to_string(alpha);
          return false;
        }
        if (!ckit::subcontract(*cont, rho).holds) {
          failure = key + " --" + ckit::to_string(st.action) + "--> " + next.to_string() + ": " + show(*cont) +
                    " not below " + show(rho);
          return false;
        }
      }
      if (!visit(next)) return false;
    }
    if (!has_tau) {
      bool ok = false;
      for (const auto& r : ckit::ready_sets(sigma))
        ok = ok || std::includes(enabled.begin(), enabled.end(), r.begin(), r.end());
      if (!ok) {
        failure = key + ": no ready set of " + show(sigma) + " is enabled";
        return false;
      }
    }
    colour[key] = 2;
    return true;
  };
  visit(a);
  return failure;
}

/// Every configuration reachable from a pair with compliant types again has
/// compliant types.
inline std::string subject_reduction(const Agent& client, const Agent& service, const Domain& dom) {
  std::set<ckit::Configuration> seen;
  std::deque<ckit::Configuration> queue{{client, service}};
  seen.insert(queue.front());
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    Contract rc = agent_type(c.client, dom), sc = agent_type(c.service, dom);
    if (!ckit::compliant(rc, sc).holds)
      return ckit::to_string(c) + ": " + show(rc) + " not compliant with " + show(sc);
    for (const auto& n : ckit::parallel_step(c, dom))
      if (seen.insert(n).second) queue.push_back(n);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Process builders

inline Process with_leaves(const Process& p, const std::function<Process()>& leaf) {
  using namespace ckit;
  return std::visit(
      [&](const auto& n) -> Process {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PNil>) {
          return leaf();
        } else if constexpr (std::is_same_v<T, PTau>) {
          return proc::tau(with_leaves(n.cont, leaf));
        } else if constexpr (std::is_same_v<T, POut>) {
          return proc::out(n.subject, n.payload, with_leaves(n.cont, leaf));
        } else if constexpr (std::is_same_v<T, PSum>) {
          std::vector<PBranch> bs;
          for (const auto& b : n.branches) bs.push_back({b.subject, b.binders, with_leaves(b.cont, leaf)});
          return proc::sum(std::move(bs));
        } else if constexpr (std::is_same_v<T, PPar>) {
          std::vector<Process> ps;
          for (const auto& q : n.parts) ps.push_back(with_leaves(q, leaf));
          return proc::par(std::move(ps));
        } else {
          return proc::cond(n.lhs, n.rhs, with_leaves(n.then_branch, leaf), with_leaves(n.else_branch, leaf));
        }
      },
      p.node().v);
}

inline Process success() { return ckit::proc::input(ckit::Name::port("e"), {}, ckit::proc::nil()); }

/// A client that plays the complementary role of `service`, reporting success
/// when the service has nothing left to do.
inline Process mirror(gen::Rng& rng, const Process& service, const std::vector<std::string>& consts, int& fresh) {
  using namespace ckit;
  auto value = [&] { return Name::constant(gen::one_of(rng, consts)); };
  return std::visit(
      [&](const auto& n) -> Process {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PNil>) {
          return success();
        } else if constexpr (std::is_same_v<T, PTau>) {
          return mirror(rng, n.cont, consts, fresh);
        } else if constexpr (std::is_same_v<T, POut>) {
          if (n.subject.is_opaque()) return mirror(rng, n.cont, consts, fresh);
          std::vector<std::string> bs;
          for (std::size_t i = 0; i < n.payload.size(); ++i) bs.push_back("m" + std::to_string(fresh++));
          return proc::input(n.subject, bs, mirror(rng, n.cont, consts, fresh));
        } else if constexpr (std::is_same_v<T, PSum>) {
          std::vector<PBranch> picks;
          for (const auto& b : n.branches) {
            Substitution s;
            for (const auto& v : b.binders) s[v] = value();
            Process cont = mirror(rng, ckit::apply(b.cont, s), consts, fresh);
            if (b.subject.is_opaque()) {
              picks.push_back({Name::opaque(), {}, cont});
            } else {
              std::vector<Name> payload;
              for (const auto& v : b.binders) payload.push_back(s.at(v));
              picks.push_back({Name::opaque(), {}, proc::out(b.subject, payload, cont)});
            }
          }
          if (picks.size() == 1) {
            const auto& only = picks.front().cont;
            return only;
          }
          return proc::sum(std::move(picks));
        } else if constexpr (std::is_same_v<T, PPar>) {
          return mirror(rng, n.parts.front(), consts, fresh);
        } else {
          return proc::cond(n.lhs, n.rhs, mirror(rng, n.then_branch, consts, fresh),
                            mirror(rng, n.else_branch, consts, fresh));
        }
      },
      service.node().v);
}

/// Derives an abstract process from a concrete one: actions on ports outside
/// `visible` become silent, and values and conditionals are randomly opaqued.
inline Process opaque_variant(gen::Rng& rng, const Process& q, const NameSet& visible, double p) {
  using namespace ckit;
  auto hidden = [&](const Name& n) { return n.is_port() && !visible.count(n.ident); };
  auto value = [&](const Name& n) { return gen::coin(rng, p) ? Name::opaque() : n; };
  return std::visit(
      [&](const auto& n) -> Process {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PNil>) {
          return proc::nil();
        } else if constexpr (std::is_same_v<T, PTau>) {
          return proc::tau(opaque_variant(rng, n.cont, visible, p));
        } else if constexpr (std::is_same_v<T, POut>) {
          Process cont = opaque_variant(rng, n.cont, visible, p);
          if (hidden(n.subject)) return proc::tau(cont);
          std::vector<Name> payload;
          for (const auto& m : n.payload) payload.push_back(value(m));
          return proc::out(n.subject, payload, cont);
        } else if constexpr (std::is_same_v<T, PSum>) {
          std::vector<PBranch> bs;
          for (const auto& b : n.branches) {
            Name subject = hidden(b.subject) ? Name::opaque() : b.subject;
            bs.push_back({subject, b.binders, opaque_variant(rng, b.cont, visible, p)});
          }
          return proc::sum(std::move(bs));
        } else if constexpr (std::is_same_v<T, PPar>) {
          std::vector<Process> ps;
          for (const auto& x : n.parts) ps.push_back(opaque_variant(rng, x, visible, p));
          return proc::par(std::move(ps));
        } else {
          Name l = value(n.lhs), r = n.rhs;
          return proc::cond(l, r, opaque_variant(rng, n.then_branch, visible, p),
                            opaque_variant(rng, n.else_branch, visible, p));
        }
      },
      q.node().v);
}

// ---------------------------------------------------------------------------
// Simulation-based abstraction

/// True when every conditional of `q` compares names that stay visible:
/// constants in `v`, the opaque element, and variables received on ports in
/// `v`. Under this condition restriction never drops an atom.
inline bool conditions_visible(const Process& q, const NameSet& v, std::set<std::string> bound = {}) {
  using namespace ckit;
  auto ok = [&](const Name& n) {
    if (n.is_opaque()) return true;
    if (n.is_constant()) return v.count(n.ident) > 0;
    return n.is_var() && (bound.count(n.ident) > 0 || v.count(n.ident) > 0);
  };
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PNil>) {
          return true;
        } else if constexpr (std::is_same_v<T, PTau> || std::is_same_v<T, POut>) {
          return conditions_visible(n.cont, v, bound);
        } else if constexpr (std::is_same_v<T, PSum>) {
          for (const auto& b : n.branches) {
            auto inner = bound;
            if (b.subject.is_port() && v.count(b.subject.ident)) inner.insert(b.binders.begin(), b.binders.end());
            if (!conditions_visible(b.cont, v, inner)) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, PPar>) {
          for (const auto& x : n.parts)
            if (!conditions_visible(x, v, bound)) return false;
          return true;
        } else {
          return ok(n.lhs) && ok(n.rhs) && conditions_visible(n.then_branch, v, bound) &&
                 conditions_visible(n.else_branch, v, bound);
        }
      },
      q.node().v);
}

/// Label agreement in which an opaque payload position matches any value.
inline bool labels_match(const ckit::ConcAction& a, const ckit::ConcAction& b) {
  if (a.kind != b.kind || a.subject != b.subject || a.payload.size() != b.payload.size()) return false;
  for (std::size_t i = 0; i < a.payload.size(); ++i)
    if (!a.payload[i].is_opaque() && !b.payload[i].is_opaque() && a.payload[i] != b.payload[i]) return false;
  return true;
}

/// For a closed accepted pair: every step of A_V[Q] is answered by a step of
/// A_V[P] with related residuals and conversely, at every reachable pair.
inline std::string co_explore(const Process& p, const Process& q, const NameSet& v, const Domain& dom,
                              std::size_t* pairs = nullptr) {
  std::set<std::pair<std::string, std::string>> seen;
  std::string failure;
  auto related = [&](const Process& a, const Process& b) {
    return ckit::check_abstraction({a, b, v, ckit::Condition::truth()}, dom).holds;
  };
  std::function<bool(const Process&, const Process&)> visit = [&](const Process& a, const Process& b) {
    if (!seen.insert({a.key(), b.key()}).second) return true;
    if (pairs) ++*pairs;
    auto as = ckit::abstract_steps(a, v, dom);
    auto bs = ckit::abstract_steps(b, v, dom);
    auto answer = [&](const ckit::ConcreteStep& st, const std::vector<ckit::ConcreteStep>& other, bool q_moves) {
      for (const auto& o : other) {
        if (!labels_match(st.action, o.action)) continue;
        const Process& pa = q_moves ? o.target : st.target;
        const Process& qa = q_moves ? st.target : o.target;
        if (related(pa, qa)) return std::optional<std::pair<Process, Process>>{{pa, qa}};
      }
      return std::optional<std::pair<Process, Process>>{};
    };
    for (const auto& st : bs) {
      auto m = answer(st, as, true);
      if (!m) {
        failure = "A[" + ckit::to_string(b) + "] --" + ckit::to_string(st.action) + "--> unanswered by " +
                  ckit::to_string(a);
        return false;
      }
      if (!visit(m->first, m->second)) return false;
    }
    for (const auto& st : as) {
      auto m = answer(st, bs, false);
      if (!m) {
        failure = ckit::to_string(a) + " --" + ckit::to_string(st.action) + "--> unanswered by A[" +
                  ckit::to_string(b) + "]";
        return false;
      }
      if (!visit(m->first, m->second)) return false;
    }
    return true;
  };
  visit(p, q);
  return failure;
}

}  // namespace props

#endif  // CKIT_TESTS_PROPERTIES_HPP
