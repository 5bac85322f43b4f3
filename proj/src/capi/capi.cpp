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

#include "ckit/ckit.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ckit/abstraction.hpp"
#include "ckit/process_semantics.hpp"
#include "ckit/relations.hpp"
#include "ckit/sim_abstraction.hpp"
#include "ckit/syntax.hpp"
#include "ckit/typing.hpp"

struct ckit_contract {
  ckit::Contract value;
};

struct ckit_module {
  ckit::SourceFile source;
  std::string origin;  // path, or "<input>"
  std::size_t max_consts = 0;
};

struct ckit_verdict {
  std::string kind;
  bool holds = false;
  std::size_t certificate_size = 0;
  std::vector<std::string> counterexample;
};

namespace {

thread_local std::string g_last_error;

struct Failure {
  ckit_status status;
  std::string message;
};

ckit_status map_kind(ckit::ErrorKind k) {
  switch (k) {
    case ckit::ErrorKind::Parse:
      return CKIT_ERR_PARSE;
    case ckit::ErrorKind::Undeclared:
      return CKIT_ERR_UNDECLARED;
    case ckit::ErrorKind::Arity:
      return CKIT_ERR_ARITY;
    case ckit::ErrorKind::OpenTerm:
      return CKIT_ERR_OPEN_TERM;
    case ckit::ErrorKind::Precondition:
      return CKIT_ERR_PRECONDITION;
    case ckit::ErrorKind::Inference:
      return CKIT_ERR_INFERENCE;
  }
  return CKIT_ERR_INTERNAL;
}

// Runs `f`, translating exceptions into a status and the thread's last error.
template <typename F>
ckit_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return CKIT_OK;
  } catch (const Failure& e) {
    g_last_error = e.message;
    return e.status;
  } catch (const ckit::Error& e) {
    g_last_error = e.what();
    return map_kind(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CKIT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CKIT_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Failure{CKIT_ERR_INVALID_ARGUMENT, what};
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

const ckit::Definition& definition(const ckit_module* m, const char* name) {
  require(m && name, "null module or name");
  const ckit::Definition* d = m->source.find(name);
  if (!d) throw Failure{CKIT_ERR_NOT_FOUND, m->origin + ": no definition named '" + name + "'"};
  return *d;
}

// Re-raises errors inside a definition with the file and line prefixed.
template <typename F>
auto located(const ckit_module* m, const ckit::Definition& d, F&& f) {
  try {
    return f();
  } catch (const ckit::Error& e) {
    throw Failure{map_kind(e.kind()), m->origin + ":" + std::to_string(d.line) + ": " + d.name + ": " + e.what()};
  }
}

ckit::Process process_of(const ckit_module* m, const char* name) {
  const auto& d = definition(m, name);
  return located(m, d, [&] { return ckit::parse_process(d.text, m->source.decls); });
}

ckit::Domain domain_of(std::initializer_list<const ckit_module*> ms) {
  ckit::Domain dom;
  std::size_t limit = 0;
  for (const auto* m : ms) {
    auto d = m->source.decls.domain();
    dom.constants.insert(dom.constants.end(), d.constants.begin(), d.constants.end());
    if (m->max_consts && (!limit || m->max_consts < limit)) limit = m->max_consts;
  }
  std::sort(dom.constants.begin(), dom.constants.end());
  dom.constants.erase(std::unique(dom.constants.begin(), dom.constants.end()), dom.constants.end());
  if (limit && dom.constants.size() > limit)
    throw Failure{CKIT_ERR_LIMIT, std::to_string(dom.constants.size()) + " constants exceed the limit of " +
                                      std::to_string(limit)};
  return dom;
}

std::optional<ckit::NameSet> visible_set(const char* v) {
  if (!v) return std::nullopt;
  return ckit::parse_name_set(v);
}

ckit_verdict* relation_verdict(const char* kind, const ckit::RelationResult& r) {
  return new ckit_verdict{kind, r.holds, r.holds ? r.certificate.size() : 0, r.counterexample};
}

}  // namespace

extern "C" {

const char* ckit_version(void) { return "0.1.0"; }

const char* ckit_status_name(ckit_status s) {
  switch (s) {
    case CKIT_OK:
      return "ok";
    case CKIT_ERR_PARSE:
      return "parse error";
    case CKIT_ERR_UNDECLARED:
      return "undeclared identifier";
    case CKIT_ERR_ARITY:
      return "arity mismatch";
    case CKIT_ERR_OPEN_TERM:
      return "open term";
    case CKIT_ERR_PRECONDITION:
      return "precondition violated";
    case CKIT_ERR_INFERENCE:
      return "inference failed";
    case CKIT_ERR_NOT_FOUND:
      return "not found";
    case CKIT_ERR_IO:
      return "i/o error";
    case CKIT_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case CKIT_ERR_LIMIT:
      return "limit exceeded";
    case CKIT_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* ckit_last_error(void) { return g_last_error.c_str(); }

void ckit_string_free(char* s) { std::free(s); }

ckit_status ckit_contract_parse(const char* text, ckit_contract** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new ckit_contract{ckit::parse_contract(text)};
  });
}

void ckit_contract_free(ckit_contract* c) { delete c; }

ckit_status ckit_contract_print(const ckit_contract* c, char** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = dup(ckit::to_string(c->value));
  });
}

ckit_status ckit_contract_abstract(const ckit_contract* c, const char* visible, ckit_contract** out) {
  return guarded([&] {
    require(c && visible && out, "null argument");
    *out = new ckit_contract{ckit::abstract_contract(c->value, ckit::parse_name_set(visible))};
  });
}

ckit_status ckit_contract_equivalent(const ckit_contract* a, const ckit_contract* b, int* out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = ckit::equivalent(a->value, b->value) ? 1 : 0;
  });
}

ckit_status ckit_module_load(const char* path, ckit_module** out) {
  return guarded([&] {
    require(path && out, "null argument");
    std::ifstream probe(path);
    if (!probe) throw Failure{CKIT_ERR_IO, std::string("cannot open '") + path + "'"};
    try {
      *out = new ckit_module{ckit::load_source(path), path, 0};
    } catch (const ckit::Error& e) {
      throw Failure{map_kind(e.kind()), std::string(path) + ":" + e.what()};
    }
  });
}

ckit_status ckit_module_parse(const char* text, ckit_module** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new ckit_module{ckit::parse_source(text), "<input>", 0};
  });
}

void ckit_module_free(ckit_module* m) { delete m; }

size_t ckit_module_size(const ckit_module* m) { return m ? m->source.definitions.size() : 0; }

const char* ckit_module_name(const ckit_module* m, size_t i) {
  if (!m || i >= m->source.definitions.size()) return nullptr;
  return m->source.definitions[i].name.c_str();
}

void ckit_module_set_max_consts(ckit_module* m, size_t n) {
  if (m) m->max_consts = n;
}

ckit_status ckit_module_contract(const ckit_module* m, const char* name, ckit_contract** out) {
  return guarded([&] {
    require(out, "null argument");
    const auto& d = definition(m, name);
    *out = new ckit_contract{located(m, d, [&] { return ckit::parse_contract(d.text); })};
  });
}

ckit_status ckit_module_type(const ckit_module* m, const char* name, const char* visible, ckit_contract** out,
                             char** derivation) {
  return guarded([&] {
    require(out, "null argument");
    ckit::Process p = process_of(m, name);
    ckit::Domain dom = domain_of({m});
    auto v = visible_set(visible);
    const auto& d = definition(m, name);
    located(m, d, [&] {
      std::string text;
      if (derivation) text = ckit::render(v ? ckit::derive_abstraction(p, *v, dom) : ckit::derive(p, dom));
      auto type = v ? ckit::type_of_abstraction(p, *v, dom) : ckit::type_of(p, dom);
      *out = new ckit_contract{type};
      if (derivation) *derivation = dup(text);
      return 0;
    });
  });
}

ckit_status ckit_module_trace(const ckit_module* m, const char* name, ckit_trace_mode mode, const char* visible,
                              char** out) {
  return guarded([&] {
    require(out, "null argument");
    ckit::Process p = process_of(m, name);
    ckit::Domain dom = domain_of({m});
    std::vector<std::string> lines;
    switch (mode) {
      case CKIT_TRACE_SYMBOLIC:
        lines = ckit::symbolic_trace(p, dom);
        break;
      case CKIT_TRACE_CONCRETE:
        lines = ckit::concrete_trace(ckit::Agent{p, std::nullopt}, dom);
        break;
      case CKIT_TRACE_ABSTRACT:
        require(visible, "abstract traces need a visible set");
        lines = ckit::concrete_trace(ckit::Agent{p, visible_set(visible)}, dom);
        break;
      default:
        throw Failure{CKIT_ERR_INVALID_ARGUMENT, "unknown trace mode"};
    }
    *out = dup(join(lines));
  });
}

ckit_status ckit_check_compliance(const ckit_contract* client, const ckit_contract* service, ckit_verdict** out) {
  return guarded([&] {
    require(client && service && out, "null argument");
    *out = relation_verdict("compliance", ckit::compliant(client->value, service->value));
  });
}

ckit_status ckit_check_subcontract(const ckit_contract* sigma, const ckit_contract* rho, ckit_verdict** out) {
  return guarded([&] {
    require(sigma && rho && out, "null argument");
    *out = relation_verdict("subcontract", ckit::subcontract(sigma->value, rho->value));
  });
}

ckit_status ckit_check_abstraction(const ckit_module* am, const char* abstract_name, const ckit_module* cm,
                                   const char* concrete_name, const char* visible, ckit_verdict** out) {
  return guarded([&] {
    require(visible && out, "null argument");
    ckit::Process p = process_of(am, abstract_name);
    ckit::Process q = process_of(cm, concrete_name);
    ckit::Domain dom = domain_of({am, cm});
    auto r = ckit::check_abstraction({p, q, ckit::parse_name_set(visible), ckit::Condition::truth()}, dom);
    *out = new ckit_verdict{"abstraction", r.holds, r.holds ? r.explored : 0, r.trace};
  });
}

ckit_status ckit_check_process_compliance(const ckit_module* cm, const char* client_name, const ckit_module* sm,
                                          const char* service_name, const char* visible, ckit_verdict** out) {
  return guarded([&] {
    require(out, "null argument");
    ckit::Process c = process_of(cm, client_name);
    ckit::Process s = process_of(sm, service_name);
    ckit::Domain dom = domain_of({cm, sm});
    auto r = ckit::process_compliant(ckit::Agent{c, std::nullopt}, ckit::Agent{s, visible_set(visible)}, dom);
    *out = new ckit_verdict{"process-compliance", r.holds, r.holds ? r.explored : 0, r.counterexample};
  });
}

int ckit_verdict_holds(const ckit_verdict* v) { return v && v->holds ? 1 : 0; }

size_t ckit_verdict_certificate_size(const ckit_verdict* v) { return v ? v->certificate_size : 0; }

size_t ckit_verdict_counterexample_size(const ckit_verdict* v) { return v ? v->counterexample.size() : 0; }

const char* ckit_verdict_counterexample_line(const ckit_verdict* v, size_t i) {
  if (!v || i >= v->counterexample.size()) return nullptr;
  return v->counterexample[i].c_str();
}

ckit_status ckit_verdict_json(const ckit_verdict* v, char** out) {
  return guarded([&] {
    require(v && out, "null argument");
    nlohmann::json j{{"kind", v->kind}, {"verdict", v->holds ? "holds" : "fails"}};
    if (v->holds)
      j["certificate_size"] = v->certificate_size;
    else
      j["counterexample"] = v->counterexample;
    *out = dup(j.dump());
  });
}

void ckit_verdict_free(ckit_verdict* v) { delete v; }

}  // extern "C"
