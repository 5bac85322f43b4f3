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

#include "ckit/relations.hpp"

#include <deque>
#include <functional>
#include <map>

namespace ckit {

namespace {

struct PairLess {
  bool operator()(const ContractPair& a, const ContractPair& b) const {
    if (a.first.key() != b.first.key()) return a.first.key() < b.first.key();
    return a.second.key() < b.second.key();
  }
};

struct Edge {
  std::string label;
  ContractPair target;
};

struct Expansion {
  std::string violation;  // empty when the local clause holds
  std::vector<Edge> edges;
};

using Expand = std::function<Expansion(const ContractPair&)>;

RelationResult greatest_fixpoint(const ContractPair& start, const Expand& expand) {
  std::map<ContractPair, Expansion, PairLess> graph;
  std::map<ContractPair, std::pair<ContractPair, std::string>, PairLess> parent;
  std::deque<ContractPair> queue{start};
  graph.emplace(start, Expansion{});
  std::vector<ContractPair> order;
  while (!queue.empty()) {
    ContractPair cur = queue.front();
    queue.pop_front();
    order.push_back(cur);
    graph[cur] = expand(cur);
    for (const auto& e : graph[cur].edges) {
      if (graph.count(e.target)) continue;
      graph.emplace(e.target, Expansion{});
      parent.emplace(e.target, std::make_pair(cur, e.label));
      queue.push_back(e.target);
    }
  }

  std::set<ContractPair, PairLess> alive;
  for (const auto& [pair, ex] : graph)
    if (ex.violation.empty()) alive.insert(pair);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = alive.begin(); it != alive.end();) {
      bool ok = true;
      for (const auto& e : graph[*it].edges) ok = ok && alive.count(e.target);
      if (ok) {
        ++it;
      } else {
        it = alive.erase(it);
        changed = true;
      }
    }
  }

  RelationResult res;
  res.holds = alive.count(start) > 0;
  if (res.holds) {
    for (const auto& p : order)
      if (alive.count(p)) res.certificate.push_back(p);
    return res;
  }
  // Breadth-first order reaches a locally violating pair by a shortest path.
  for (const auto& p : order) {
    if (graph[p].violation.empty()) continue;
    std::vector<std::string> path;
    for (ContractPair cur = p; parent.count(cur);) {
      const auto& [prev, label] = parent.at(cur);
      path.push_back(label);
      cur = prev;
    }
    res.counterexample.assign(path.rbegin(), path.rend());
    res.counterexample.push_back("(" + p.first.key() + ", " + p.second.key() + "): " + graph[p].violation);
    break;
  }
  return res;
}

bool mentions_success(const Contract& c) {
  for (const auto& r : reachable(c))
    if (init(r).count(kSuccess)) return true;
  return false;
}

}  // namespace

RelationResult compliant(const Contract& client, const Contract& service) {
  if (mentions_success(service))
    throw Error(ErrorKind::Precondition, "the success action 'e' may only occur in client contracts");
  return greatest_fixpoint({client, service}, [](const ContractPair& p) {
    Expansion ex;
    const auto& [rho, sigma] = p;
    auto rs = ready_sets(rho);
    auto ss = ready_sets(sigma);
    for (const auto& r : rs) {
      if (r.count(kSuccess)) continue;
      for (const auto& s : ss) {
        bool meet = false;
        for (const auto& a : r) meet = meet || s.count(a.co());
        if (!meet) {
          ex.violation = "client may offer " + to_string(r) + " while service offers " + to_string(s);
          break;
        }
      }
      if (!ex.violation.empty()) break;
    }
    for (const auto& a : init(rho)) {
      if (a.is_success()) continue;
      auto next_rho = step(rho, a);
      auto next_sigma = step(sigma, a.co());
      if (next_sigma) ex.edges.push_back({to_string(a), {*next_rho, *next_sigma}});
    }
    return ex;
  });
}

RelationResult subcontract(const Contract& sigma, const Contract& rho) {
  return greatest_fixpoint({sigma, rho}, [](const ContractPair& p) {
    Expansion ex;
    const auto& [s, r] = p;
    auto ss = ready_sets(s);
    for (const auto& rr : ready_sets(r)) {
      bool found = false;
      for (const auto& cand : ss) {
        bool subset = true;
        for (const auto& a : cand) subset = subset && rr.count(a);
        if (subset) {
          found = true;
          break;
        }
      }
      if (!found) {
        ex.violation = "ready set " + to_string(rr) + " of the right side refines no ready set of the left side";
        return ex;
      }
    }
    for (const auto& a : init(r)) {
      auto next_s = step(s, a);
      if (!next_s) {
        ex.violation = "right side performs " + to_string(a) + ", left side cannot";
        return ex;
      }
      ex.edges.push_back({to_string(a), {*next_s, *step(r, a)}});
    }
    return ex;
  });
}

bool equivalent(const Contract& a, const Contract& b) {
  return subcontract(a, b).holds && subcontract(b, a).holds;
}

ProcessVerdict process_compliant(const Agent& client, const Agent& service, const Domain& dom) {
  if (!is_closed(client.process) || !is_closed(service.process))
    throw Error(ErrorKind::OpenTerm, "process compliance needs closed processes");
  Configuration start{client.with(normalize(client.process)), service.with(normalize(service.process))};
  std::map<Configuration, Configuration> parent;
  std::set<Configuration> seen{start};
  std::deque<Configuration> queue{start};
  ProcessVerdict v;
  while (!queue.empty()) {
    Configuration cur = queue.front();
    queue.pop_front();
    ++v.explored;
    auto next = parallel_step(cur, dom);
    if (next.empty()) {
      bool success = false;
      for (const auto& st : cur.client.steps(dom)) success = success || st.action.is_success();
      if (!success) {
        std::vector<std::string> path{to_string(cur)};
        for (Configuration c = cur; parent.count(c);) {
          c = parent.at(c);
          path.push_back(to_string(c));
        }
        v.counterexample.assign(path.rbegin(), path.rend());
        v.holds = false;
        return v;
      }
    }
    for (auto& n : next) {
      if (!seen.insert(n).second) continue;
      parent.emplace(n, cur);
      queue.push_back(std::move(n));
    }
  }
  v.holds = true;
  return v;
}

}  // namespace ckit
