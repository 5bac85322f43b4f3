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

// ckit command line front end. Everything goes through the C interface.
//
// Exit codes: 0 success or verdict holds, 1 verdict fails, 2 usage or parse
// errors, 3 type inference errors.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ckit/ckit.h"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kInference = 3;

struct Deleter {
  void operator()(ckit_contract* c) const { ckit_contract_free(c); }
  void operator()(ckit_module* m) const { ckit_module_free(m); }
  void operator()(ckit_verdict* v) const { ckit_verdict_free(v); }
  void operator()(char* s) const { ckit_string_free(s); }
};
using ContractPtr = std::unique_ptr<ckit_contract, Deleter>;
using ModulePtr = std::unique_ptr<ckit_module, Deleter>;
using VerdictPtr = std::unique_ptr<ckit_verdict, Deleter>;
using StringPtr = std::unique_ptr<char, Deleter>;

// Carries an exit code out of nested helpers.
struct Exit {
  int code;
};

int code_for(ckit_status s) {
  switch (s) {
    case CKIT_ERR_OPEN_TERM:
    case CKIT_ERR_INFERENCE:
      return kInference;
    default:
      return kUsage;
  }
}

void check(ckit_status s) {
  if (s == CKIT_OK) return;
  std::cerr << "ckit: " << ckit_last_error() << "\n";
  throw Exit{code_for(s)};
}

[[noreturn]] void usage(const std::string& msg) {
  std::cerr << "ckit: " << msg << "\n";
  throw Exit{kUsage};
}

bool is_file(const std::string& p) {
  std::error_code ec;
  return std::filesystem::is_regular_file(p, ec);
}

bool is_process_file(const std::string& p) { return std::filesystem::path(p).extension() == ".proc"; }

struct Ref {
  ModulePtr module;
  std::string path;
  std::string name;
};

// `file`, `file:Name`, or `file` plus a separate name. A bare file must hold
// exactly one definition.
std::optional<Ref> resolve(const std::string& arg, const std::string& name, std::size_t max_consts) {
  std::string path = arg, def = name;
  if (!is_file(path)) {
    auto colon = arg.rfind(':');
    if (colon == std::string::npos || !is_file(arg.substr(0, colon))) return std::nullopt;
    path = arg.substr(0, colon);
    def = arg.substr(colon + 1);
  }
  ckit_module* m = nullptr;
  check(ckit_module_load(path.c_str(), &m));
  ModulePtr mod(m);
  ckit_module_set_max_consts(m, max_consts);
  if (def.empty()) {
    if (ckit_module_size(m) != 1) usage(path + " has " + std::to_string(ckit_module_size(m)) +
                                        " definitions; name one with " + path + ":Name");
    def = ckit_module_name(m, 0);
  }
  return Ref{std::move(mod), path, def};
}

Ref process_ref(const std::string& arg, const std::string& name, std::size_t max_consts) {
  auto r = resolve(arg, name, max_consts);
  if (!r) usage("'" + arg + "' is not a file; processes are read from files");
  return std::move(*r);
}

// A contract: inline text, a `.ctr` definition, or the inferred type of a
// `.proc` definition.
ContractPtr contract_ref(const std::string& arg, std::size_t max_consts) {
  ckit_contract* c = nullptr;
  if (auto r = resolve(arg, "", max_consts)) {
    if (is_process_file(r->path))
      check(ckit_module_type(r->module.get(), r->name.c_str(), nullptr, &c, nullptr));
    else
      check(ckit_module_contract(r->module.get(), r->name.c_str(), &c));
  } else {
    check(ckit_contract_parse(arg.c_str(), &c));
  }
  return ContractPtr(c);
}

std::string print(const ckit_contract* c) {
  char* s = nullptr;
  check(ckit_contract_print(c, &s));
  return StringPtr(s).get();
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

int report(const ckit_verdict* v, bool json) {
  bool holds = ckit_verdict_holds(v);
  if (json) {
    char* s = nullptr;
    check(ckit_verdict_json(v, &s));
    std::cout << StringPtr(s).get() << "\n";
  } else if (holds) {
    std::cout << "holds (certificate size " << ckit_verdict_certificate_size(v) << ")\n";
  } else {
    std::cout << "fails\n";
    for (std::size_t i = 0; i < ckit_verdict_counterexample_size(v); ++i)
      std::cout << "  " << ckit_verdict_counterexample_line(v, i) << "\n";
  }
  return holds ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Behavioural contract toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ckit_version());

  std::string file, name, visible, mode = "symbolic", kind, first, second;
  bool explain = false, json = false;
  std::size_t max_consts = 8;

  auto add_limit = [&](CLI::App* c) {
    c->add_option("--max-consts", max_consts, "Refuse domains with more constants (0: no limit)")
        ->capture_default_str();
  };

  auto* type = app.add_subcommand("type", "Infer the contract of a process");
  type->add_option("file", file, "Process file, or file:Name")->required();
  type->add_option("name", name, "Definition name");
  type->add_option("--visible", visible, "Type the abstraction over these names");
  type->add_flag("--explain", explain, "Print the derivation");
  add_limit(type);

  auto* expl = app.add_subcommand("explain", "Print the typing derivation of a process");
  expl->add_option("file", file, "Process file, or file:Name")->required();
  expl->add_option("name", name, "Definition name");
  expl->add_option("--visible", visible, "Derive the type of the abstraction");
  add_limit(expl);

  auto* chk = app.add_subcommand("check", "Decide a relation");
  chk->add_option("kind", kind, "compliance, subcontract, abstraction or process-compliance")
      ->required()
      ->check(CLI::IsMember({"compliance", "subcontract", "abstraction", "process-compliance"}));
  chk->add_option("first", first, "Client, smaller contract, or abstract process")->required();
  chk->add_option("second", second, "Service, larger contract, or concrete process")->required();
  chk->add_option("--visible", visible, "Visible names (abstraction; process-compliance hides the service)");
  chk->add_flag("--json", json, "Emit the verdict as JSON");
  add_limit(chk);

  auto* abs = app.add_subcommand("abstract", "Abstract a contract");
  abs->add_option("contract", first, "Inline contract, file, or file:Name")->required();
  abs->add_option("--visible", visible, "Visible names")->required();
  add_limit(abs);

  auto* trace = app.add_subcommand("trace", "List the transitions of a process");
  trace->add_option("file", file, "Process file, or file:Name")->required();
  trace->add_option("name", name, "Definition name");
  trace->add_option("--mode", mode, "symbolic, concrete or abstract")
      ->check(CLI::IsMember({"symbolic", "concrete", "abstract"}))
      ->capture_default_str();
  trace->add_option("--visible", visible, "Visible names for the abstract mode");
  add_limit(trace);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (type->parsed() || expl->parsed()) {
      Ref r = process_ref(file, name, max_consts);
      bool want_tree = explain || expl->parsed();
      ckit_contract* c = nullptr;
      char* tree = nullptr;
      check(ckit_module_type(r.module.get(), r.name.c_str(), opt(visible), &c, want_tree ? &tree : nullptr));
      ContractPtr ct(c);
      StringPtr tp(tree);
      if (type->parsed()) std::cout << print(c) << "\n";
      if (want_tree) std::cout << tree;
      return 0;
    }
    if (abs->parsed()) {
      ContractPtr c = contract_ref(first, max_consts);
      ckit_contract* out = nullptr;
      check(ckit_contract_abstract(c.get(), visible.c_str(), &out));
      std::cout << print(ContractPtr(out).get()) << "\n";
      return 0;
    }
    if (trace->parsed()) {
      Ref r = process_ref(file, name, max_consts);
      ckit_trace_mode m = mode == "symbolic" ? CKIT_TRACE_SYMBOLIC
                          : mode == "concrete" ? CKIT_TRACE_CONCRETE
                                               : CKIT_TRACE_ABSTRACT;
      if (m == CKIT_TRACE_ABSTRACT && visible.empty()) usage("--mode abstract needs --visible");
      char* out = nullptr;
      check(ckit_module_trace(r.module.get(), r.name.c_str(), m, opt(visible), &out));
      std::cout << StringPtr(out).get();
      return 0;
    }
    ckit_verdict* v = nullptr;
    if (kind == "compliance" || kind == "subcontract") {
      ContractPtr a = contract_ref(first, max_consts), b = contract_ref(second, max_consts);
      check(kind == "compliance" ? ckit_check_compliance(a.get(), b.get(), &v)
                                 : ckit_check_subcontract(a.get(), b.get(), &v));
    } else {
      Ref a = process_ref(first, "", max_consts), b = process_ref(second, "", max_consts);
      if (kind == "abstraction") {
        if (visible.empty()) usage("check abstraction needs --visible");
        check(ckit_check_abstraction(a.module.get(), a.name.c_str(), b.module.get(), b.name.c_str(),
                                     visible.c_str(), &v));
      } else {
        check(ckit_check_process_compliance(a.module.get(), a.name.c_str(), b.module.get(), b.name.c_str(),
                                            opt(visible), &v));
      }
    }
    return report(VerdictPtr(v).get(), json);
  } catch (const Exit& e) {
    // Only the typing commands distinguish inference failures.
    bool typing = type->parsed() || expl->parsed();
    return e.code == kInference && !typing ? kUsage : e.code;
  }
}
