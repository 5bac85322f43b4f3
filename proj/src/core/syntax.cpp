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

#include "ckit/syntax.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ckit {

ParseError::ParseError(ErrorKind kind, const std::string& msg, int line, int column)
    : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

std::string to_string(const Name& n) { return n.is_opaque() ? std::string("*") : n.ident; }

std::vector<Name> Domain::values() const {
  std::vector<Name> out;
  out.reserve(constants.size() + 1);
  for (const auto& c : constants) out.push_back(Name::constant(c));
  out.push_back(Name::opaque());
  return out;
}

Name apply(const Name& n, const Substitution& s) {
  if (!n.is_var()) return n;
  auto it = s.find(n.ident);
  return it == s.end() ? n : it->second;
}

// ---------------------------------------------------------------------------
// Conditions

struct Condition::Node {
  Op op = Op::True;
  Name lhs, rhs;
  std::vector<Condition> kids;  // operands of And / Or
  std::string key;

  Node() = default;
};

namespace {

int cond_level(Condition::Op op) {
  switch (op) {
    case Condition::Op::Or:
      return 0;
    case Condition::Op::And:
      return 1;
    default:
      return 2;
  }
}

std::string cond_operand(const Condition& c, int level) {
  std::string s = c.key();
  return cond_level(c.op()) < level ? "(" + s + ")" : s;
}

}  // namespace

Condition::Condition() : node_(truth().node_) {}

Condition Condition::truth() {
  static const auto node = [] {
    auto n = std::make_shared<Node>();
    n->op = Op::True;
    n->key = "true";
    return std::shared_ptr<const Node>(n);
  }();
  return Condition(node);
}

Condition Condition::falsity() {
  static const auto node = [] {
    auto n = std::make_shared<Node>();
    n->op = Op::False;
    n->key = "false";
    return std::shared_ptr<const Node>(n);
  }();
  return Condition(node);
}

Condition Condition::eq(Name m, Name n) {
  auto node = std::make_shared<Node>();
  node->op = Op::Eq;
  node->key = to_string(m) + " = " + to_string(n);
  node->lhs = std::move(m);
  node->rhs = std::move(n);
  return Condition(std::move(node));
}

Condition Condition::neq(Name m, Name n) {
  auto node = std::make_shared<Node>();
  node->op = Op::Neq;
  node->key = to_string(m) + " != " + to_string(n);
  node->lhs = std::move(m);
  node->rhs = std::move(n);
  return Condition(std::move(node));
}

Condition Condition::conj(Condition l, Condition r) {
  auto node = std::make_shared<Node>();
  node->op = Op::And;
  node->key = cond_operand(l, 1) + " && " + cond_operand(r, 2);
  node->kids = {std::move(l), std::move(r)};
  return Condition(std::move(node));
}

Condition Condition::disj(Condition l, Condition r) {
  auto node = std::make_shared<Node>();
  node->op = Op::Or;
  node->key = cond_operand(l, 0) + " || " + cond_operand(r, 1);
  node->kids = {std::move(l), std::move(r)};
  return Condition(std::move(node));
}

Condition Condition::conj_simplified(Condition l, Condition r) {
  if (l.op() == Op::True) return r;
  if (r.op() == Op::True) return l;
  return conj(std::move(l), std::move(r));
}

Condition Condition::any_of(const std::vector<Condition>& parts) {
  if (parts.empty()) return falsity();
  Condition acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
  return acc;
}

Condition::Op Condition::op() const { return node_->op; }
const Name& Condition::lhs() const { return node_->lhs; }
const Name& Condition::rhs() const { return node_->rhs; }
const Condition& Condition::left() const { return node_->kids.at(0); }
const Condition& Condition::right() const { return node_->kids.at(1); }
const std::string& Condition::key() const { return node_->key; }

std::string to_string(const Condition& c) { return c.key(); }

std::set<Name> free_names(const Condition& c) {
  std::set<Name> out;
  std::function<void(const Condition&)> walk = [&](const Condition& m) {
    switch (m.op()) {
      case Condition::Op::Eq:
      case Condition::Op::Neq:
        if (!m.lhs().is_opaque()) out.insert(m.lhs());
        if (!m.rhs().is_opaque()) out.insert(m.rhs());
        break;
      case Condition::Op::And:
      case Condition::Op::Or:
        walk(m.left());
        walk(m.right());
        break;
      default:
        break;
    }
  };
  walk(c);
  return out;
}

std::set<std::string> free_vars(const Condition& c) {
  std::set<std::string> out;
  for (const auto& n : free_names(c))
    if (n.is_var()) out.insert(n.ident);
  return out;
}

Condition apply(const Condition& c, const Substitution& s) {
  switch (c.op()) {
    case Condition::Op::Eq:
      return Condition::eq(ckit::apply(c.lhs(), s), ckit::apply(c.rhs(), s));
    case Condition::Op::Neq:
      return Condition::neq(ckit::apply(c.lhs(), s), ckit::apply(c.rhs(), s));
    case Condition::Op::And:
      return Condition::conj(ckit::apply(c.left(), s), ckit::apply(c.right(), s));
    case Condition::Op::Or:
      return Condition::disj(ckit::apply(c.left(), s), ckit::apply(c.right(), s));
    default:
      return c;
  }
}

// ---------------------------------------------------------------------------
// Processes

namespace {

enum Level { kParLevel = 0, kSumLevel = 1, kPrefixLevel = 2 };

std::string print_process(const Process& p, int level);

std::string join_names(const std::vector<Name>& ns) {
  std::string s;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) s += ",";
    s += to_string(ns[i]);
  }
  return s;
}

std::string join_idents(const std::vector<std::string>& ns) {
  std::string s;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) s += ",";
    s += ns[i];
  }
  return s;
}

std::string print_cont(const Process& cont) {
  if (cont.is_nil()) return {};
  return "." + print_process(cont, kPrefixLevel);
}

std::string print_branch(const PBranch& b) {
  std::string s = to_string(b.subject);
  if (!b.binders.empty()) s += "(" + join_idents(b.binders) + ")";
  return s + print_cont(b.cont);
}

std::string print_process(const Process& p, int level) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PNil>) {
          return "0";
        } else if constexpr (std::is_same_v<T, PTau>) {
          return "tau" + print_cont(n.cont);
        } else if constexpr (std::is_same_v<T, POut>) {
          std::string s = to_string(n.subject) + "!";
          if (!n.payload.empty()) s += "<" + join_names(n.payload) + ">";
          return s + print_cont(n.cont);
        } else if constexpr (std::is_same_v<T, PSum>) {
          if (n.branches.size() == 1) return print_branch(n.branches.front());
          std::string s;
          for (std::size_t i = 0; i < n.branches.size(); ++i) {
            if (i) s += " + ";
            s += print_branch(n.branches[i]);
          }
          return level > kSumLevel ? "(" + s + ")" : s;
        } else if constexpr (std::is_same_v<T, PPar>) {
          std::string s;
          for (std::size_t i = 0; i < n.parts.size(); ++i) {
            if (i) s += " | ";
            s += print_process(n.parts[i], kSumLevel);
          }
          return level > kParLevel ? "(" + s + ")" : s;
        } else {
          return "if " + to_string(n.lhs) + " = " + to_string(n.rhs) + " then " +
                 print_process(n.then_branch, kPrefixLevel) + " else " +
                 print_process(n.else_branch, kPrefixLevel);
        }
      },
      p.node().v);
}

}  // namespace

struct ProcessBuilder {
  static Process make(ProcessVariant v) {
    auto node = std::make_shared<ProcessNode>();
    node->v = std::move(v);
    Process tmp(node);
    node->key = print_process(tmp, kParLevel);
    return tmp;
  }
};

Process::Process() : node_(proc::nil().node_) {}

const std::string& Process::key() const { return node_->key; }
bool Process::is_nil() const { return std::holds_alternative<PNil>(node_->v); }

namespace proc {

Process nil() {
  static const Process p = ProcessBuilder::make(PNil{});
  return p;
}

Process tau(Process cont) { return ProcessBuilder::make(PTau{std::move(cont)}); }

Process out(Name subject, std::vector<Name> payload, Process cont) {
  return ProcessBuilder::make(POut{std::move(subject), std::move(payload), std::move(cont)});
}

Process input(Name subject, std::vector<std::string> binders, Process cont) {
  return sum({PBranch{std::move(subject), std::move(binders), std::move(cont)}});
}

Process sum(std::vector<PBranch> branches) {
  if (branches.empty()) return nil();
  return ProcessBuilder::make(PSum{std::move(branches)});
}

Process par(std::vector<Process> parts) {
  std::vector<Process> flat;
  for (auto& p : parts) {
    if (const auto* pp = std::get_if<PPar>(&p.node().v))
      flat.insert(flat.end(), pp->parts.begin(), pp->parts.end());
    else
      flat.push_back(std::move(p));
  }
  if (flat.empty()) return nil();
  if (flat.size() == 1) return flat.front();
  return ProcessBuilder::make(PPar{std::move(flat)});
}

Process cond(Name lhs, Name rhs, Process then_branch, Process else_branch) {
  return ProcessBuilder::make(
      PIf{std::move(lhs), std::move(rhs), std::move(then_branch), std::move(else_branch)});
}

}  // namespace proc

std::string to_string(const Process& p) { return p.key(); }

namespace {

void collect_free(const Process& p, std::set<Name>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PTau>) {
          collect_free(n.cont, out);
        } else if constexpr (std::is_same_v<T, POut>) {
          if (!n.subject.is_opaque()) out.insert(n.subject);
          for (const auto& m : n.payload)
            if (!m.is_opaque()) out.insert(m);
          collect_free(n.cont, out);
        } else if constexpr (std::is_same_v<T, PSum>) {
          for (const auto& b : n.branches) {
            if (!b.subject.is_opaque()) out.insert(b.subject);
            std::set<Name> inner;
            collect_free(b.cont, inner);
            for (const auto& v : b.binders) inner.erase(Name::var(v));
            out.insert(inner.begin(), inner.end());
          }
        } else if constexpr (std::is_same_v<T, PPar>) {
          for (const auto& q : n.parts) collect_free(q, out);
        } else if constexpr (std::is_same_v<T, PIf>) {
          if (!n.lhs.is_opaque()) out.insert(n.lhs);
          if (!n.rhs.is_opaque()) out.insert(n.rhs);
          collect_free(n.then_branch, out);
          collect_free(n.else_branch, out);
        }
      },
      p.node().v);
}

void collect_bound(const Process& p, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PTau> || std::is_same_v<T, POut>) {
          collect_bound(n.cont, out);
        } else if constexpr (std::is_same_v<T, PSum>) {
          for (const auto& b : n.branches) {
            out.insert(b.binders.begin(), b.binders.end());
            collect_bound(b.cont, out);
          }
        } else if constexpr (std::is_same_v<T, PPar>) {
          for (const auto& q : n.parts) collect_bound(q, out);
        } else if constexpr (std::is_same_v<T, PIf>) {
          collect_bound(n.then_branch, out);
          collect_bound(n.else_branch, out);
        }
      },
      p.node().v);
}

void collect_idents(const Process& p, std::set<std::string>& out) {
  for (const auto& n : free_names(p)) out.insert(n.ident);
  collect_bound(p, out);
}

std::string fresh_ident(const std::string& base, const std::set<std::string>& taken) {
  for (int i = 1;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!taken.count(cand)) return cand;
  }
}

Process subst(const Process& p, const Substitution& s, std::set<std::string>& taken) {
  if (s.empty()) return p;
  return std::visit(
      [&](const auto& n) -> Process {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PNil>) {
          return p;
        } else if constexpr (std::is_same_v<T, PTau>) {
          return proc::tau(subst(n.cont, s, taken));
        } else if constexpr (std::is_same_v<T, POut>) {
          std::vector<Name> payload;
          payload.reserve(n.payload.size());
          for (const auto& m : n.payload) payload.push_back(ckit::apply(m, s));
          return proc::out(n.subject, std::move(payload), subst(n.cont, s, taken));
        } else if constexpr (std::is_same_v<T, PSum>) {
          std::vector<PBranch> branches;
          for (const auto& b : n.branches) {
            Substitution inner = s;
            for (const auto& v : b.binders) inner.erase(v);
            // Rename binders that would capture a variable introduced by `inner`.
            std::set<std::string> introduced;
            auto body_free = free_vars(b.cont);
            for (const auto& [from, to] : inner)
              if (to.is_var() && body_free.count(from)) introduced.insert(to.ident);
            std::vector<std::string> binders = b.binders;
            for (auto& v : binders) {
              if (introduced.count(v)) {
                std::string fresh = fresh_ident(v, taken);
                taken.insert(fresh);
                inner[v] = Name::var(fresh);
                v = fresh;
              }
            }
            branches.push_back(PBranch{b.subject, std::move(binders), subst(b.cont, inner, taken)});
          }
          return proc::sum(std::move(branches));
        } else if constexpr (std::is_same_v<T, PPar>) {
          std::vector<Process> parts;
          for (const auto& q : n.parts) parts.push_back(subst(q, s, taken));
          return proc::par(std::move(parts));
        } else {
          return proc::cond(ckit::apply(n.lhs, s), ckit::apply(n.rhs, s), subst(n.then_branch, s, taken),
                            subst(n.else_branch, s, taken));
        }
      },
      p.node().v);
}

}  // namespace

std::set<Name> free_names(const Process& p) {
  std::set<Name> out;
  collect_free(p, out);
  return out;
}

std::set<std::string> free_vars(const Process& p) {
  std::set<std::string> out;
  for (const auto& n : free_names(p))
    if (n.is_var()) out.insert(n.ident);
  return out;
}

std::set<std::string> bound_vars(const Process& p) {
  std::set<std::string> out;
  collect_bound(p, out);
  return out;
}

bool is_closed(const Process& p) { return free_vars(p).empty(); }

Process apply(const Process& p, const Substitution& s) {
  std::set<std::string> taken;
  collect_idents(p, taken);
  for (const auto& [k, v] : s) {
    taken.insert(k);
    if (!v.is_opaque()) taken.insert(v.ident);
  }
  return subst(p, s, taken);
}

Process normalize(const Process& p) {
  return std::visit(
      [&](const auto& n) -> Process {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PNil>) {
          return p;
        } else if constexpr (std::is_same_v<T, PTau>) {
          return proc::tau(normalize(n.cont));
        } else if constexpr (std::is_same_v<T, POut>) {
          return proc::out(n.subject, n.payload, normalize(n.cont));
        } else if constexpr (std::is_same_v<T, PSum>) {
          std::vector<PBranch> branches;
          for (const auto& b : n.branches) branches.push_back({b.subject, b.binders, normalize(b.cont)});
          return proc::sum(std::move(branches));
        } else if constexpr (std::is_same_v<T, PPar>) {
          std::vector<Process> parts;
          for (const auto& q : n.parts) {
            Process nq = normalize(q);
            if (!nq.is_nil()) parts.push_back(std::move(nq));
          }
          return proc::par(std::move(parts));
        } else {
          return proc::cond(n.lhs, n.rhs, normalize(n.then_branch), normalize(n.else_branch));
        }
      },
      p.node().v);
}

namespace {

Process rename_binders(const Process& p, const std::map<std::string, std::string>& env,
                       const std::function<std::string(const std::string&)>& fresh) {
  auto ren = [&](const Name& n) {
    if (!n.is_var()) return n;
    auto it = env.find(n.ident);
    return it == env.end() ? n : Name::var(it->second);
  };
  return std::visit(
      [&](const auto& n) -> Process {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PNil>) {
          return p;
        } else if constexpr (std::is_same_v<T, PTau>) {
          return proc::tau(rename_binders(n.cont, env, fresh));
        } else if constexpr (std::is_same_v<T, POut>) {
          std::vector<Name> payload;
          for (const auto& m : n.payload) payload.push_back(ren(m));
          return proc::out(n.subject, std::move(payload), rename_binders(n.cont, env, fresh));
        } else if constexpr (std::is_same_v<T, PSum>) {
          std::vector<PBranch> branches;
          for (const auto& b : n.branches) {
            auto inner = env;
            std::vector<std::string> binders;
            for (const auto& v : b.binders) {
              std::string nv = fresh(v);
              inner[v] = nv;
              binders.push_back(nv);
            }
            branches.push_back({b.subject, std::move(binders), rename_binders(b.cont, inner, fresh)});
          }
          return proc::sum(std::move(branches));
        } else if constexpr (std::is_same_v<T, PPar>) {
          std::vector<Process> parts;
          for (const auto& q : n.parts) parts.push_back(rename_binders(q, env, fresh));
          return proc::par(std::move(parts));
        } else {
          return proc::cond(ren(n.lhs), ren(n.rhs), rename_binders(n.then_branch, env, fresh),
                            rename_binders(n.else_branch, env, fresh));
        }
      },
      p.node().v);
}

}  // namespace

Process alpha_canonical(const Process& p) {
  int counter = 0;
  return rename_binders(p, {}, [&](const std::string&) { return "%" + std::to_string(counter++); });
}

bool alpha_equivalent(const Process& a, const Process& b) {
  return alpha_canonical(a).key() == alpha_canonical(b).key();
}

Process uniquify_binders(const Process& p, std::set<std::string> avoid) {
  std::set<std::string> taken = avoid;
  collect_idents(p, taken);
  std::set<std::string> used = std::move(avoid);
  for (const auto& n : free_names(p)) used.insert(n.ident);
  return rename_binders(p, {}, [&](const std::string& v) {
    std::string name = v;
    if (used.count(name)) {
      name = fresh_ident(v, taken);
      taken.insert(name);
    }
    used.insert(name);
    return name;
  });
}

int depth(const Process& p) {
  return std::visit(
      [&](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PNil>) {
          return 0;
        } else if constexpr (std::is_same_v<T, PTau> || std::is_same_v<T, POut>) {
          return 1 + depth(n.cont);
        } else if constexpr (std::is_same_v<T, PSum>) {
          int d = 0;
          for (const auto& b : n.branches) d = std::max(d, depth(b.cont));
          return 1 + d;
        } else if constexpr (std::is_same_v<T, PPar>) {
          int d = 0;
          for (const auto& q : n.parts) d = std::max(d, depth(q));
          return 1 + d;
        } else {
          return 1 + std::max(depth(n.then_branch), depth(n.else_branch));
        }
      },
      p.node().v);
}

// ---------------------------------------------------------------------------
// Contracts

std::string to_string(const Action& a) { return (a.output ? "~" : "") + a.name; }

namespace {

enum CLevel { kIntLevel = 0, kExtLevel = 1, kPrefLevel = 2 };

std::string print_contract(const ContractNode& n, int level);

std::string print_child(const Contract& c, int level) {
  const std::string& k = c.key();
  bool needs_parens = (c.kind() == Contract::Kind::Int && level > kIntLevel) ||
                      (c.kind() == Contract::Kind::Ext && level > kExtLevel);
  return needs_parens ? "(" + k + ")" : k;
}

std::string print_contract(const ContractNode& n, int) {
  switch (n.kind) {
    case Contract::Kind::Nil:
      return "0";
    case Contract::Kind::Prefix: {
      std::string s = to_string(n.action);
      if (!n.parts.front().is_nil()) s += "." + print_child(n.parts.front(), kPrefLevel);
      return s;
    }
    case Contract::Kind::Ext: {
      std::string s;
      for (std::size_t i = 0; i < n.parts.size(); ++i) {
        if (i) s += " + ";
        s += print_child(n.parts[i], kExtLevel);
      }
      return s;
    }
    case Contract::Kind::Int: {
      std::string s;
      for (std::size_t i = 0; i < n.parts.size(); ++i) {
        if (i) s += " (+) ";
        s += print_child(n.parts[i], kIntLevel);
      }
      return s;
    }
  }
  return {};
}

Contract::Kind kind_of(const std::shared_ptr<const ContractNode>& n) { return n->kind; }

}  // namespace

Contract::Contract() : node_(nil().node_) {}

Contract Contract::nil() {
  static const Contract c = [] {
    auto n = std::make_shared<ContractNode>();
    n->kind = Kind::Nil;
    n->key = "0";
    n->hash = std::hash<std::string>{}(n->key);
    return Contract(std::shared_ptr<const ContractNode>(n));
  }();
  return c;
}

Contract Contract::prefix(Action a, Contract cont) {
  auto n = std::make_shared<ContractNode>();
  n->kind = Kind::Prefix;
  n->action = std::move(a);
  n->parts.push_back(std::move(cont));
  n->key = print_contract(*n, kPrefLevel);
  n->hash = std::hash<std::string>{}(n->key);
  return Contract(std::shared_ptr<const ContractNode>(n));
}

Contract Contract::ext(std::vector<Contract> parts) {
  std::vector<Contract> flat;
  for (auto& p : parts) {
    if (p.kind() == Kind::Ext)
      flat.insert(flat.end(), p.parts().begin(), p.parts().end());
    else
      flat.push_back(std::move(p));
  }
  if (flat.empty()) return nil();
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<ContractNode>();
  n->kind = Kind::Ext;
  n->parts = std::move(flat);
  n->key = print_contract(*n, kExtLevel);
  n->hash = std::hash<std::string>{}(n->key);
  return Contract(std::shared_ptr<const ContractNode>(n));
}

Contract Contract::intc(std::vector<Contract> parts) {
  std::vector<Contract> flat;
  for (auto& p : parts) {
    if (p.kind() == Kind::Int)
      flat.insert(flat.end(), p.parts().begin(), p.parts().end());
    else
      flat.push_back(std::move(p));
  }
  if (flat.empty()) throw Error(ErrorKind::Precondition, "internal choice over an empty set");
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<ContractNode>();
  n->kind = Kind::Int;
  n->parts = std::move(flat);
  n->key = print_contract(*n, kIntLevel);
  n->hash = std::hash<std::string>{}(n->key);
  return Contract(std::shared_ptr<const ContractNode>(n));
}

Contract::Kind Contract::kind() const { return kind_of(node_); }
const Action& Contract::action() const { return node_->action; }
const Contract& Contract::cont() const { return node_->parts.front(); }
const std::vector<Contract>& Contract::parts() const { return node_->parts; }
const std::string& Contract::key() const { return node_->key; }
std::size_t Contract::hash() const { return node_->hash; }

std::string to_string(const Contract& c) { return c.key(); }

std::set<std::string> action_names(const Contract& c) {
  std::set<std::string> out;
  std::function<void(const Contract&)> walk = [&](const Contract& x) {
    if (x.kind() == Contract::Kind::Prefix) out.insert(x.action().name);
    for (const auto& p : x.parts()) walk(p);
  };
  walk(c);
  return out;
}

int depth(const Contract& c) {
  int d = 0;
  for (const auto& p : c.parts()) d = std::max(d, depth(p));
  return c.is_nil() ? 0 : d + 1;
}

// ---------------------------------------------------------------------------

Domain Declarations::domain() const { return Domain{{constants.begin(), constants.end()}}; }

const Definition* SourceFile::find(std::string_view name) const {
  for (const auto& d : definitions)
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace ckit
