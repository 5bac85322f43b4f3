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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ckit/sim_abstraction.hpp"
#include "support/properties.hpp"

using namespace ckit;

namespace {

Declarations decls() {
  Declarations d;
  d.ports = {{"x", 1}, {"y", 1}, {"z", 1}, {"h", 1}};
  d.constants = {"a", "b"};
  d.vars = {"v"};
  return d;
}

Process P(std::string_view s) { return parse_process(s, decls()); }
const Domain kDom{{"a", "b"}};

AbsResult check(std::string_view abs, std::string_view conc, NameSet v, Condition m = Condition::truth()) {
  return check_abstraction({P(abs), P(conc), std::move(v), m}, kDom);
}

}  // namespace

TEST_CASE("visible received names and hiding") {
  SymAction in{ActKind::In, Name::port("x"), {"u"}, {}};
  CHECK(visible_received_names(in, {"x"}) == std::set<std::string>{"u"});
  CHECK(visible_received_names(in, {"y"}).empty());
  SymAction out{ActKind::Out, Name::port("y"), {}, {Name::var("v")}};
  CHECK(visible_received_names(out, {"y"}).empty());
  CHECK(visible_received_names(SymAction::tau(), {"x"}).empty());
  CHECK(hide_sym_action(out, {"y", "v"}) == out);
  SymAction h{ActKind::Out, Name::port("h"), {}, {Name::var("v")}};
  CHECK(hide_sym_action(h, {"y"}) == SymAction::tau());
  CHECK(hide_sym_action(SymAction::tau(), {}) == SymAction::tau());
}

TEST_CASE("characteristic conditions") {
  Substitution s{{"u", Name::constant("a")}, {"w", Name::opaque()}};
  Condition c = characteristic(s, kDom);
  CHECK(respects(s, c));
  CHECK(!respects({{"u", Name::constant("b")}, {"w", Name::opaque()}}, c));
  CHECK(!respects({{"u", Name::constant("a")}, {"w", Name::constant("b")}}, c));
  CHECK(respects({{"u", Name::opaque()}, {"w", Name::opaque()}}, c));
}

TEST_CASE("the opaque conditional abstracts the concrete one") {
  auto ok = check("if v = * then y!<v> else z!<v>", "if v = a then y!<v> else z!<v>", {"v", "y", "z"});
  CHECK(ok.holds);
  auto bad = check("if v = * then y!<v> else z!<v>", "if a = a then y!<v> else y!<v>", {"v", "y", "z"});
  CHECK(!bad.holds);
  CHECK(!bad.trace.empty());
  auto swapped = check("if v = a then y!<v> else z!<v>", "if v = * then y!<v> else z!<v>", {"v", "y", "z"});
  CHECK(!swapped.holds);
}

TEST_CASE("hidden actions are sliced away") {
  CHECK(check("x(u).tau.y!<u>", "x(u).h!<u>.y!<u>", {"x", "y"}).holds);
  CHECK(check("x(u).*(w).y!<w>", "x(u).h(w).y!<w>", {"x", "y"}).holds);
  CHECK(!check("x(u).y!<u>", "x(u).z!<u>", {"x", "y", "z"}).holds);
  auto leak = check("h!<a>", "h!<a>", {"x"});
  CHECK(!leak.holds);
  CHECK(!leak.trace.empty());
  CHECK_THROWS_AS(check("0", "0", {}, parse_condition("a = b", decls())), Error);
}

TEST_CASE("identity on fully visible closed processes") {
  gen::Rng rng(61);
  gen::ProcessShape shape;
  shape.allow_opaque_subject = false;
  shape.opaque = 0;
  gen::ProcessGen g(rng, shape);
  Domain dom{shape.consts};
  NameSet all{"x", "y", "z", "w", "a", "b"};
  for (int i = 0; i < 200; ++i) {
    Process p = g.closed(4);
    CHECK_MESSAGE(check_abstraction({p, p, all, Condition::truth()}, dom).holds, to_string(p));
  }
}

TEST_CASE("opaqued variants and co-exploration") {
  gen::Rng rng(62);
  gen::ProcessShape shape;
  gen::ProcessGen g(rng, shape);
  Domain dom{shape.consts};
  int accepted = 0;
  for (int i = 0; i < 600; ++i) {
    Process q = g.closed(3);
    NameSet v = gen::name_subset(rng, {"x", "y", "z", "w"}, 0.7);
    v.insert(shape.consts.begin(), shape.consts.end());
    if (!props::conditions_visible(q, v)) continue;
    Process p = props::opaque_variant(rng, q, v, 0.3);
    auto r = check_abstraction({p, q, v, Condition::truth()}, dom);
    if (!r.holds) continue;
    ++accepted;
    auto msg = props::co_explore(p, q, v, dom);
    CHECK_MESSAGE(msg.empty(), to_string(p) << " / " << to_string(q) << " / " << props::show(v) << ": " << msg);
  }
  CHECK(accepted > 50);
}

TEST_CASE("constraints on invisible names are dropped even when pinned") {
  // Accepted because the atom v1 = a is hidden, yet after receiving a the
  // concrete side can no longer move while the abstract one can.
  Process p = P("y(v1).if * = a then 0 else y(v2)");
  Process q = P("y(v1).if v1 = a then 0 else y(v2)");
  CHECK(check_abstraction({p, q, {"y"}, Condition::truth()}, kDom).holds);
  CHECK(!props::co_explore(p, q, {"y"}, kDom).empty());
  CHECK(!check_abstraction({p, q, {"y", "a", "b"}, Condition::truth()}, kDom).holds);
  // The same happens with a value received on a hidden port.
  Process p2 = P("*(v1).if * = v1 then y!<a> else 0");
  Process q2 = P("h(v1).if b = v1 then y!<a> else 0");
  NameSet v2{"y", "a", "b"};
  CHECK(check_abstraction({p2, q2, v2, Condition::truth()}, kDom).holds);
  CHECK(!props::co_explore(p2, q2, v2, kDom).empty());
  CHECK(!props::conditions_visible(q2, v2));
}

TEST_CASE("an index over unrelated names can be dropped") {
  gen::Rng rng(63);
  gen::ProcessShape shape;
  gen::ProcessGen g(rng, shape);
  Domain dom{{"a", "b", "c"}};
  Declarations d = gen::declarations(shape);
  d.constants.insert("c");
  d.vars = {"t"};
  Condition m = parse_condition("t = c", d);
  int held = 0;
  for (int i = 0; i < 200; ++i) {
    Process q = g.closed(3);
    NameSet v{"x", "y", "z", "w", "t"};
    Process p = props::opaque_variant(rng, q, v, 0.3);
    if (!check_abstraction({p, q, v, m}, dom).holds) continue;
    ++held;
    CHECK(check_abstraction({p, q, v, Condition::truth()}, dom).holds);
  }
  CHECK(held > 20);
}

TEST_CASE("instantiating a visible variable preserves the relation") {
  gen::Rng rng(64);
  gen::ProcessShape shape;
  gen::ProcessGen g(rng, shape);
  Domain dom{shape.consts};
  int held = 0;
  for (int i = 0; i < 200; ++i) {
    Process q = g.open(3, {"u"});
    NameSet v{"x", "y", "z", "w", "a", "b"};
    Process p = props::opaque_variant(rng, q, v, 0.3);
    NameSet vu = v;
    vu.insert("u");
    if (!check_abstraction({p, q, vu, Condition::truth()}, dom).holds) continue;
    ++held;
    for (const auto& c : shape.consts) {
      Substitution s{{"u", Name::constant(c)}};
      CHECK_MESSAGE(check_abstraction({ckit::apply(p, s), ckit::apply(q, s), v, Condition::truth()}, dom).holds,
                    to_string(p) << " / " << to_string(q) << " at u = " << c);
    }
  }
  CHECK(held > 20);
  // With the constant hidden the instantiated pair loses the relation.
  Process p = P("if * = v then y!<v> else z!<v>");
  Process q = P("if v = a then y!<v> else z!<v>");
  CHECK(check_abstraction({p, q, {"v", "y", "z"}, Condition::truth()}, kDom).holds);
  Substitution s{{"v", Name::constant("a")}};
  CHECK(!check_abstraction({ckit::apply(p, s), ckit::apply(q, s), {"y", "z"}, Condition::truth()}, kDom).holds);
}
