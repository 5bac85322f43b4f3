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

// AST definitions shared by every module: names, conditions, processes and
// contracts. All nodes are immutable and reference counted; copying a term is
// cheap and terms may be shared freely between threads.

#ifndef CKIT_SYNTAX_HPP
#define CKIT_SYNTAX_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ckit {

enum class ErrorKind { Parse, Undeclared, Arity, OpenTerm, Precondition, Inference };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the parsers; carries a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& msg, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// ---------------------------------------------------------------------------
// Names

enum class NameKind : std::uint8_t { Port, DataVar, Constant, Opaque };

/// A port, data variable, constant, or the opaque element. The opaque element
/// has an empty identifier and is not a member of the name universe.
struct Name {
  NameKind kind = NameKind::Opaque;
  std::string ident;

  static Name port(std::string id) { return {NameKind::Port, std::move(id)}; }
  static Name var(std::string id) { return {NameKind::DataVar, std::move(id)}; }
  static Name constant(std::string id) { return {NameKind::Constant, std::move(id)}; }
  static Name opaque() { return {NameKind::Opaque, {}}; }

  bool is_opaque() const { return kind == NameKind::Opaque; }
  bool is_var() const { return kind == NameKind::DataVar; }
  bool is_constant() const { return kind == NameKind::Constant; }
  bool is_port() const { return kind == NameKind::Port; }
  /// Constants and the opaque element: the values a variable can be bound to.
  bool is_ground() const { return kind == NameKind::Constant || kind == NameKind::Opaque; }

  auto operator<=>(const Name&) const = default;
  bool operator==(const Name&) const = default;
};

std::string to_string(const Name& n);

/// Visible-name sets hold plain identifiers; the port, variable and constant
/// namespaces are disjoint so an identifier determines its kind.
using NameSet = std::set<std::string>;

/// Partial map from data variables to variables, constants or the opaque element.
using Substitution = std::map<std::string, Name>;

/// The finite value domain: declared constants plus the opaque element.
struct Domain {
  std::vector<std::string> constants;

  std::vector<Name> values() const;
  std::size_t size() const { return constants.size() + 1; }
};

/// Applies `s` to a single term; names outside dom(s) are returned unchanged.
Name apply(const Name& n, const Substitution& s);

// ---------------------------------------------------------------------------
// Conditions

class Condition {
 public:
  enum class Op : std::uint8_t { True, False, Eq, Neq, And, Or };

  Condition();  // true

  static Condition truth();
  static Condition falsity();
  static Condition eq(Name m, Name n);
  static Condition neq(Name m, Name n);
  static Condition conj(Condition l, Condition r);
  static Condition disj(Condition l, Condition r);
  /// Conjunction that drops `true` operands.
  static Condition conj_simplified(Condition l, Condition r);
  /// Disjunction of a list; empty list gives `false`.
  static Condition any_of(const std::vector<Condition>& parts);

  Op op() const;
  const Name& lhs() const;
  const Name& rhs() const;
  const Condition& left() const;
  const Condition& right() const;

  const std::string& key() const;
  bool operator==(const Condition& o) const { return key() == o.key(); }
  bool operator<(const Condition& o) const { return key() < o.key(); }

 private:
  struct Node;
  explicit Condition(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const Condition& c);
std::set<std::string> free_vars(const Condition& c);
std::set<Name> free_names(const Condition& c);
Condition apply(const Condition& c, const Substitution& s);

// ---------------------------------------------------------------------------
// Processes

class Process;
struct ProcessNode;

class Process {
 public:
  Process();  // 0

  const ProcessNode& node() const { return *node_; }
  const std::string& key() const;

  bool operator==(const Process& o) const { return key() == o.key(); }
  bool operator<(const Process& o) const { return key() < o.key(); }

  bool is_nil() const;

 private:
  friend struct ProcessBuilder;
  explicit Process(std::shared_ptr<const ProcessNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ProcessNode> node_;
};

struct PNil {};
struct PTau {
  Process cont;
};
struct POut {
  Name subject;  // port or opaque
  std::vector<Name> payload;
  Process cont;
};
struct PBranch {
  Name subject;  // port or opaque
  std::vector<std::string> binders;
  Process cont;
};
/// Input-guarded external choice; a single branch is a plain input prefix.
struct PSum {
  std::vector<PBranch> branches;
};
/// n-ary parallel composition, always flattened and with at least two parts.
struct PPar {
  std::vector<Process> parts;
};
struct PIf {
  Name lhs, rhs;
  Process then_branch, else_branch;
};

using ProcessVariant = std::variant<PNil, PTau, POut, PSum, PPar, PIf>;

struct ProcessNode {
  ProcessVariant v;
  std::string key;
};

namespace proc {
Process nil();
Process tau(Process cont);
Process out(Name subject, std::vector<Name> payload, Process cont);
Process input(Name subject, std::vector<std::string> binders, Process cont);
Process sum(std::vector<PBranch> branches);
/// Flattens nested compositions; a single part is returned as is.
Process par(std::vector<Process> parts);
Process cond(Name lhs, Name rhs, Process then_branch, Process else_branch);
}  // namespace proc

std::string to_string(const Process& p);

std::set<Name> free_names(const Process& p);
std::set<std::string> free_vars(const Process& p);
std::set<std::string> bound_vars(const Process& p);
bool is_closed(const Process& p);

/// Capture-avoiding substitution of free data variables.
Process apply(const Process& p, const Substitution& s);

/// Structural-congruence normal form: flattens `|`, drops `0` parts.
Process normalize(const Process& p);

/// Renames every binder to a canonical positional name; two processes are
/// alpha-equivalent iff their canonical forms are equal.
Process alpha_canonical(const Process& p);
bool alpha_equivalent(const Process& a, const Process& b);

/// Renames binders so they are pairwise distinct and disjoint from `avoid`.
Process uniquify_binders(const Process& p, std::set<std::string> avoid);

/// Depth of the term tree (0 has depth 0).
int depth(const Process& p);

// ---------------------------------------------------------------------------
// Contracts

/// A contract action: a name with input (a) or output (~a) polarity. The
/// reserved client action `e` is an input.
struct Action {
  std::string name;
  bool output = false;

  Action co() const { return {name, !output}; }
  bool is_success() const { return name == "e" && !output; }

  auto operator<=>(const Action&) const = default;
  bool operator==(const Action&) const = default;
};

std::string to_string(const Action& a);
inline const Action kSuccess{"e", false};

class Contract;
struct ContractNode;

class Contract {
 public:
  enum class Kind : std::uint8_t { Nil, Prefix, Ext, Int };

  Contract();  // 0

  static Contract nil();
  static Contract prefix(Action a, Contract cont);
  /// n-ary external sum; nested sums are flattened, a singleton is returned
  /// as is and the empty sum is 0.
  static Contract ext(std::vector<Contract> parts);
  /// n-ary internal choice; flattened, singleton returned as is. Must not be
  /// empty.
  static Contract intc(std::vector<Contract> parts);
  static Contract ext(Contract l, Contract r) { return ext(std::vector<Contract>{std::move(l), std::move(r)}); }
  static Contract intc(Contract l, Contract r) { return intc(std::vector<Contract>{std::move(l), std::move(r)}); }

  Kind kind() const;
  const Action& action() const;               // Prefix
  const Contract& cont() const;               // Prefix
  const std::vector<Contract>& parts() const;  // Ext / Int

  const std::string& key() const;
  std::size_t hash() const;
  bool operator==(const Contract& o) const { return node_ == o.node_ || key() == o.key(); }
  bool operator<(const Contract& o) const { return key() < o.key(); }

  bool is_nil() const { return kind() == Kind::Nil; }

 private:
  explicit Contract(std::shared_ptr<const ContractNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ContractNode> node_;
};

struct ContractNode {
  Contract::Kind kind = Contract::Kind::Nil;
  Action action;
  std::vector<Contract> parts;  // the continuation for Prefix
  std::string key;
  std::size_t hash = 0;
};

std::string to_string(const Contract& c);
/// Every action name occurring in `c`.
std::set<std::string> action_names(const Contract& c);
int depth(const Contract& c);

// ---------------------------------------------------------------------------
// Declarations and source files

struct Declarations {
  std::map<std::string, std::optional<int>> ports;  // declared arity, if any
  std::set<std::string> constants;
  std::set<std::string> vars;

  Domain domain() const;
  /// Reserved success port: an arity-0 input usable by clients.
  static constexpr std::string_view kSuccessPort = "e";
};

/// Parses a process term. Binders are alpha-renamed to be distinct from each
/// other and from every identifier in the text. Port arities not fixed by the
/// declarations are fixed by first use and recorded into `decls`.
Process parse_process(std::string_view text, Declarations& decls);
Process parse_process(std::string_view text, const Declarations& decls);
Contract parse_contract(std::string_view text);
/// Parses `true`, `false`, `m = n`, `m != n`, `&&`, `||` and parentheses.
Condition parse_condition(std::string_view text, const Declarations& decls);
/// Comma separated identifiers; whitespace ignored.
NameSet parse_name_set(std::string_view text);

struct Definition {
  std::string name;
  std::string text;
  int line = 0;
};

/// A `.proc` or `.ctr` file: declaration block plus `Name := term` lines.
struct SourceFile {
  Declarations decls;
  std::vector<Definition> definitions;

  const Definition* find(std::string_view name) const;
};

SourceFile parse_source(std::string_view text);
SourceFile load_source(const std::string& path);

}  // namespace ckit

template <>
struct std::hash<ckit::Contract> {
  std::size_t operator()(const ckit::Contract& c) const noexcept { return c.hash(); }
};

#endif  // CKIT_SYNTAX_HPP
