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

#include <cctype>
#include <fstream>
#include <sstream>

#include "ckit/syntax.hpp"

namespace ckit {

namespace {

enum class Tok {
  End,
  Ident,
  Zero,
  LParen,
  RParen,
  Lt,
  Gt,
  Comma,
  Dot,
  Plus,
  IntChoice,  // (+)
  Bar,
  Bang,
  Tilde,
  Star,
  Eq,
  Neq,
  And,
  Or,
  Semi,
  Slash,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Zero: return "'0'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Plus: return "'+'";
    case Tok::IntChoice: return "'(+)'";
    case Tok::Bar: return "'|'";
    case Tok::Bang: return "'!'";
    case Tok::Tilde: return "'~'";
    case Tok::Star: return "'*'";
    case Tok::Eq: return "'='";
    case Tok::Neq: return "'!='";
    case Tok::And: return "'&&'";
    case Tok::Or: return "'||'";
    case Tok::Semi: return "';'";
    case Tok::Slash: return "'/'";
  }
  return "?";
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view src, int line0 = 1, int col0 = 1) {
  std::vector<Token> out;
  int line = line0, col = col0;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string text, int l, int c) { out.push_back({k, std::move(text), l, c}); };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    int l = line, cc = col;
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      Tok k = word == "0" ? Tok::Zero : Tok::Ident;
      push(k, std::move(word), l, cc);
      continue;
    }
    auto rest = src.substr(i);
    auto two = [&](std::string_view s) { return rest.substr(0, s.size()) == s; };
    if (two("(+)")) {
      push(Tok::IntChoice, "(+)", l, cc);
      i += 3;
      col += 3;
      continue;
    }
    if (two("!=")) {
      push(Tok::Neq, "!=", l, cc);
      i += 2;
      col += 2;
      continue;
    }
    if (two("&&")) {
      push(Tok::And, "&&", l, cc);
      i += 2;
      col += 2;
      continue;
    }
    if (two("||")) {
      push(Tok::Or, "||", l, cc);
      i += 2;
      col += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '<': k = Tok::Lt; break;
      case '>': k = Tok::Gt; break;
      case ',': k = Tok::Comma; break;
      case '.': k = Tok::Dot; break;
      case '+': k = Tok::Plus; break;
      case '|': k = Tok::Bar; break;
      case '!': k = Tok::Bang; break;
      case '~': k = Tok::Tilde; break;
      case '*': k = Tok::Star; break;
      case '=': k = Tok::Eq; break;
      case ';': k = Tok::Semi; break;
      case '/': k = Tok::Slash; break;
      default:
        throw ParseError(ErrorKind::Parse, std::string("unexpected character '") + c + "'", l, cc);
    }
    push(k, std::string(1, c), l, cc);
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (!at(k)) return false;
    next();
    return true;
  }
  Token expect(Tok k) {
    if (!at(k)) fail(std::string("expected ") + describe(k) + ", found " + found());
    return next();
  }
  void expect_word(std::string_view w) {
    if (!at_word(w)) fail("expected '" + std::string(w) + "', found " + found());
    next();
  }
  std::string found() const {
    const Token& t = peek();
    return t.kind == Tok::Ident || t.kind == Tok::Zero ? "'" + t.text + "'" : describe(t.kind);
  }
  [[noreturn]] void fail(const std::string& msg, ErrorKind kind = ErrorKind::Parse) const {
    throw ParseError(kind, msg, peek().line, peek().column);
  }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg, ErrorKind kind) const {
    throw ParseError(kind, msg, t.line, t.column);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool is_keyword(std::string_view w) {
  return w == "tau" || w == "if" || w == "then" || w == "else" || w == "true" || w == "false";
}

// Resolves identifiers against declarations and binder scopes.
class Scope {
 public:
  explicit Scope(const Declarations& d) : decls_(d) {}

  Name operand(Cursor& cur) const {
    if (cur.accept(Tok::Star)) return Name::opaque();
    Token t = cur.expect(Tok::Ident);
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (*it == t.text) return Name::var(t.text);
    if (decls_.constants.count(t.text)) return Name::constant(t.text);
    if (decls_.vars.count(t.text)) return Name::var(t.text);
    if (decls_.ports.count(t.text) || t.text == Declarations::kSuccessPort)
      cur.fail_at(t, "port '" + t.text + "' used as a value", ErrorKind::Parse);
    cur.fail_at(t, "undeclared identifier '" + t.text + "'", ErrorKind::Undeclared);
  }

  void push(const std::string& v) { bound_.push_back(v); }
  void pop(std::size_t n) { bound_.resize(bound_.size() - n); }

 private:
  const Declarations& decls_;
  std::vector<std::string> bound_;
};

class ProcessParser {
 public:
  ProcessParser(Cursor& cur, Declarations& decls) : cur_(cur), decls_(decls), scope_(decls) {}

  Process parse_par() {
    std::vector<Process> parts{parse_sum()};
    while (cur_.accept(Tok::Bar)) parts.push_back(parse_sum());
    return proc::par(std::move(parts));
  }

 private:
  Process parse_sum() {
    Token start = cur_.peek();
    Process first = parse_prefix();
    if (!cur_.at(Tok::Plus)) return first;
    std::vector<PBranch> branches;
    add_branches(first, start, branches);
    while (cur_.accept(Tok::Plus)) {
      Token t = cur_.peek();
      add_branches(parse_prefix(), t, branches);
    }
    return proc::sum(std::move(branches));
  }

  void add_branches(const Process& p, const Token& at, std::vector<PBranch>& out) {
    if (const auto* s = std::get_if<PSum>(&p.node().v)) {
      out.insert(out.end(), s->branches.begin(), s->branches.end());
    } else if (const auto* t = std::get_if<PTau>(&p.node().v)) {
      // A silent branch of a choice is an opaque-subject input branch.
      out.push_back(PBranch{Name::opaque(), {}, t->cont});
    } else {
      cur_.fail_at(at, "choice branches must be input or tau guarded", ErrorKind::Parse);
    }
  }

  Process parse_cont() {
    if (cur_.accept(Tok::Dot)) return parse_prefix();
    return proc::nil();
  }

  Process parse_prefix() {
    if (cur_.accept(Tok::Zero)) return proc::nil();
    if (cur_.accept(Tok::LParen)) {
      Process p = parse_par();
      cur_.expect(Tok::RParen);
      return p;
    }
    if (cur_.at_word("tau")) {
      cur_.next();
      return proc::tau(parse_cont());
    }
    if (cur_.at_word("if")) {
      cur_.next();
      Name l = scope_.operand(cur_);
      cur_.expect(Tok::Eq);
      Name r = scope_.operand(cur_);
      cur_.expect_word("then");
      Process t = parse_prefix();
      cur_.expect_word("else");
      Process e = parse_prefix();
      return proc::cond(std::move(l), std::move(r), std::move(t), std::move(e));
    }
    Token subj_tok = cur_.peek();
    Name subject = parse_subject();
    if (cur_.accept(Tok::Bang)) {
      if (subject.ident == Declarations::kSuccessPort)
        cur_.fail_at(subj_tok, "the success action 'e' cannot be emitted", ErrorKind::Parse);
      std::vector<Name> payload;
      if (cur_.accept(Tok::Lt)) {
        payload.push_back(scope_.operand(cur_));
        while (cur_.accept(Tok::Comma)) payload.push_back(scope_.operand(cur_));
        cur_.expect(Tok::Gt);
      }
      check_arity(subject, payload.size(), subj_tok);
      return proc::out(std::move(subject), std::move(payload), parse_cont());
    }
    std::vector<std::string> binders;
    if (cur_.accept(Tok::LParen)) {
      do {
        if (cur_.at(Tok::Star)) cur_.fail("the opaque element cannot be a binder");
        Token b = cur_.expect(Tok::Ident);
        if (is_keyword(b.text)) cur_.fail_at(b, "keyword '" + b.text + "' used as a binder", ErrorKind::Parse);
        if (decls_.ports.count(b.text) || decls_.constants.count(b.text) || b.text == Declarations::kSuccessPort)
          cur_.fail_at(b, "binder '" + b.text + "' clashes with a declared port or constant", ErrorKind::Parse);
        for (const auto& x : binders)
          if (x == b.text) cur_.fail_at(b, "duplicate binder '" + b.text + "'", ErrorKind::Parse);
        binders.push_back(b.text);
      } while (cur_.accept(Tok::Comma));
      cur_.expect(Tok::RParen);
    }
    check_arity(subject, binders.size(), subj_tok);
    for (const auto& b : binders) scope_.push(b);
    Process cont = parse_cont();
    scope_.pop(binders.size());
    return proc::input(std::move(subject), std::move(binders), std::move(cont));
  }

  Name parse_subject() {
    if (cur_.accept(Tok::Star)) return Name::opaque();
    Token t = cur_.peek();
    if (!cur_.at(Tok::Ident)) cur_.fail("expected a process, found " + cur_.found());
    if (is_keyword(t.text)) cur_.fail("unexpected keyword '" + t.text + "'");
    cur_.next();
    if (t.text == Declarations::kSuccessPort) return Name::port(t.text);
    if (!decls_.ports.count(t.text)) {
      if (decls_.constants.count(t.text) || decls_.vars.count(t.text))
        cur_.fail_at(t, "'" + t.text + "' is not a port", ErrorKind::Parse);
      cur_.fail_at(t, "undeclared port '" + t.text + "'", ErrorKind::Undeclared);
    }
    return Name::port(t.text);
  }

  void check_arity(const Name& subject, std::size_t n, const Token& at) {
    if (subject.is_opaque()) return;
    if (subject.ident == Declarations::kSuccessPort) {
      if (n != 0) cur_.fail_at(at, "the success action 'e' carries no values", ErrorKind::Arity);
      return;
    }
    auto& slot = decls_.ports[subject.ident];
    if (!slot) {
      slot = static_cast<int>(n);
    } else if (*slot != static_cast<int>(n)) {
      cur_.fail_at(at,
                   "port '" + subject.ident + "' has arity " + std::to_string(*slot) + ", used with " +
                       std::to_string(n),
                   ErrorKind::Arity);
    }
  }

  Cursor& cur_;
  Declarations& decls_;
  Scope scope_;
};

Process finish_process(const Process& p, const Declarations& decls) {
  std::set<std::string> avoid;
  for (const auto& [name, arity] : decls.ports) avoid.insert(name);
  avoid.insert(decls.constants.begin(), decls.constants.end());
  return uniquify_binders(normalize(p), std::move(avoid));
}

Contract parse_contract_int(Cursor& cur);

Contract parse_contract_pre(Cursor& cur) {
  if (cur.accept(Tok::Zero)) return Contract::nil();
  if (cur.accept(Tok::LParen)) {
    Contract c = parse_contract_int(cur);
    cur.expect(Tok::RParen);
    return c;
  }
  bool output = cur.accept(Tok::Tilde);
  Token t = cur.peek();
  std::string name;
  if (cur.accept(Tok::Star)) {
    name = "*";
  } else if (cur.at(Tok::Ident)) {
    name = cur.next().text;
  } else {
    cur.fail("expected a contract, found " + cur.found());
  }
  if (output && name == "e") cur.fail_at(t, "the success action 'e' cannot be an output", ErrorKind::Parse);
  Contract cont = cur.accept(Tok::Dot) ? parse_contract_pre(cur) : Contract::nil();
  return Contract::prefix(Action{name, output}, std::move(cont));
}

Contract parse_contract_ext(Cursor& cur) {
  std::vector<Contract> parts{parse_contract_pre(cur)};
  while (cur.accept(Tok::Plus)) parts.push_back(parse_contract_pre(cur));
  return Contract::ext(std::move(parts));
}

Contract parse_contract_int(Cursor& cur) {
  std::vector<Contract> parts{parse_contract_ext(cur)};
  while (cur.accept(Tok::IntChoice)) parts.push_back(parse_contract_ext(cur));
  return Contract::intc(std::move(parts));
}

Condition parse_cond_or(Cursor& cur, const Scope& scope);

Condition parse_cond_atom(Cursor& cur, const Scope& scope) {
  if (cur.at_word("true")) {
    cur.next();
    return Condition::truth();
  }
  if (cur.at_word("false")) {
    cur.next();
    return Condition::falsity();
  }
  if (cur.accept(Tok::LParen)) {
    Condition c = parse_cond_or(cur, scope);
    cur.expect(Tok::RParen);
    return c;
  }
  Name l = scope.operand(cur);
  if (cur.accept(Tok::Eq)) return Condition::eq(l, scope.operand(cur));
  if (cur.accept(Tok::Neq)) return Condition::neq(l, scope.operand(cur));
  cur.fail("expected '=' or '!=', found " + cur.found());
}

Condition parse_cond_and(Cursor& cur, const Scope& scope) {
  Condition c = parse_cond_atom(cur, scope);
  while (cur.accept(Tok::And)) c = Condition::conj(c, parse_cond_atom(cur, scope));
  return c;
}

Condition parse_cond_or(Cursor& cur, const Scope& scope) {
  Condition c = parse_cond_and(cur, scope);
  while (cur.accept(Tok::Or)) c = Condition::disj(c, parse_cond_and(cur, scope));
  return c;
}

void expect_end(Cursor& cur) {
  if (!cur.at(Tok::End)) cur.fail("unexpected " + cur.found());
}

// Declaration statement: `ports a, b/2; consts k; vars v, u;`
void parse_declarations(Cursor& cur, Declarations& decls) {
  auto declared = [&](const std::string& n) {
    return decls.ports.count(n) || decls.constants.count(n) || decls.vars.count(n);
  };
  while (cur.at(Tok::Ident)) {
    Token kw = cur.next();
    if (kw.text != "ports" && kw.text != "consts" && kw.text != "vars")
      cur.fail_at(kw, "expected 'ports', 'consts' or 'vars'", ErrorKind::Parse);
    do {
      Token n = cur.expect(Tok::Ident);
      if (is_keyword(n.text) || n.text == Declarations::kSuccessPort)
        cur.fail_at(n, "reserved name '" + n.text + "'", ErrorKind::Parse);
      if (declared(n.text)) cur.fail_at(n, "'" + n.text + "' declared twice", ErrorKind::Parse);
      if (kw.text == "ports") {
        std::optional<int> arity;
        if (cur.accept(Tok::Slash)) {
          Token a = cur.peek();
          if (!cur.at(Tok::Ident) && !cur.at(Tok::Zero)) cur.fail("expected an arity");
          cur.next();
          try {
            std::size_t used = 0;
            arity = std::stoi(a.text, &used);
            if (used != a.text.size() || *arity < 0) throw std::invalid_argument("arity");
          } catch (const std::exception&) {
            cur.fail_at(a, "invalid arity '" + a.text + "'", ErrorKind::Parse);
          }
        }
        decls.ports[n.text] = arity;
      } else if (kw.text == "consts") {
        decls.constants.insert(n.text);
      } else {
        decls.vars.insert(n.text);
      }
    } while (cur.accept(Tok::Comma));
    if (!cur.accept(Tok::Semi) && !cur.at(Tok::End)) cur.fail("expected ';' or ','");
  }
  expect_end(cur);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with_word(std::string_view line, std::string_view w) {
  return line.substr(0, w.size()) == w && (line.size() == w.size() || !ident_char(line[w.size()]));
}

}  // namespace

Process parse_process(std::string_view text, Declarations& decls) {
  Cursor cur(lex(text));
  ProcessParser parser(cur, decls);
  Process p = parser.parse_par();
  expect_end(cur);
  return finish_process(p, decls);
}

Process parse_process(std::string_view text, const Declarations& decls) {
  Declarations copy = decls;
  return parse_process(text, copy);
}

Contract parse_contract(std::string_view text) {
  Cursor cur(lex(text));
  Contract c = parse_contract_int(cur);
  expect_end(cur);
  return c;
}

Condition parse_condition(std::string_view text, const Declarations& decls) {
  Cursor cur(lex(text));
  Scope scope(decls);
  Condition c = parse_cond_or(cur, scope);
  expect_end(cur);
  return c;
}

NameSet parse_name_set(std::string_view text) {
  NameSet out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.insert(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      if (!ident_char(c)) throw ParseError(ErrorKind::Parse, std::string("invalid name character '") + c + "'", 1, 1);
      cur += c;
    }
  }
  if (!cur.empty()) out.insert(cur);
  return out;
}

SourceFile parse_source(std::string_view text) {
  SourceFile file;
  std::vector<std::pair<int, std::string>> lines;
  {
    std::size_t start = 0;
    int no = 1;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      lines.emplace_back(no++, std::string(line));
      start = end + 1;
    }
  }

  Definition* open = nullptr;
  for (const auto& [no, raw] : lines) {
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (starts_with_word(line, "ports") || starts_with_word(line, "consts") || starts_with_word(line, "vars")) {
      Cursor cur(lex(raw, no));
      parse_declarations(cur, file.decls);
      open = nullptr;
      continue;
    }
    auto def = line.find(":=");
    if (def != std::string_view::npos) {
      std::string_view name = trim(line.substr(0, def));
      bool valid = !name.empty();
      for (char c : name) valid = valid && ident_char(c);
      if (!valid) throw ParseError(ErrorKind::Parse, "invalid definition name '" + std::string(name) + "'", no, 1);
      if (file.find(name)) throw ParseError(ErrorKind::Parse, "duplicate definition '" + std::string(name) + "'", no, 1);
      file.definitions.push_back({std::string(name), std::string(trim(line.substr(def + 2))), no});
      open = &file.definitions.back();
      continue;
    }
    if (!open) throw ParseError(ErrorKind::Parse, "text outside of a definition", no, 1);
    open->text += " ";
    open->text += line;
  }
  return file;
}

SourceFile load_source(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Precondition, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_source(buf.str());
}

}  // namespace ckit
