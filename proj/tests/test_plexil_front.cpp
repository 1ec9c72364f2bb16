// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "plexil_fixtures.hpp"
#include "syncsem/plexil/eval.hpp"

using namespace syncsem::plexil;

namespace {

const char* kSafeDrive = "safedrive.plx";

// Expression harness: x, y are ints and p, q, r bools declared on the root;
// the probe expression sits in E's Start clause.
ExecutionState probe(const std::string& expr, const std::string& extra_decls = "") {
  return fixtures::compile_text("List R { int x = 3; int y = 0; bool p = true; bool q = false; bool r = UNKNOWN; " +
                                extra_decls + " Empty E { Start: " + expr + "; } }");
}

const Expr& probe_expr(const ExecutionState& s) { return *s.internal.node("E.R").condition(Condition::Start); }

Value eval_probe(const std::string& expr, const ExternalState& gamma = {}) {
  ExecutionState s = probe(expr);
  s.external = gamma;
  return eval(s, probe_expr(s));
}

void set_var(ExecutionState& s, const std::string& id, Value v) { s.internal.find_variable(id)->actval = std::move(v); }

// Random expression trees, deliberately untyped: the printer and parser must
// agree on every tree regardless of whether it would compile.
ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  if (depth == 0 || pick(3) == 0) {
    switch (pick(9)) {
      case 0:
        return Expr::literal(Value::integer(pick(21) - 10));
      case 1:
        return Expr::literal(Value::boolean(pick(2) == 0));
      case 2:
        return Expr::literal(Value::unknown());
      case 3:
        return Expr::literal(Value::string(pick(2) ? "a\"b" : "probe"));
      case 4:
        return Expr::constant(pick(2) ? "FINISHED" : "SUCCESS");
      case 5:
        return Expr::node_state(pick(2) ? "OneMeter" : "Loop", pick(2) ? "status" : "outcome");
      case 6:
        return Expr::lookup(pick(2) ? "WheelStuck" : "OneMeter.Loop.ack");
      default:
        return Expr::variable(pick(2) ? "x" : "pictures");
    }
  }
  static constexpr Op kBinary[] = {Op::And, Op::Or, Op::Eq, Op::Ne, Op::Lt,  Op::Gt,
                                   Op::Le,  Op::Ge, Op::Add, Op::Sub, Op::Mul};
  switch (pick(4)) {
    case 0:
      return Expr::unary(pick(2) ? Op::Not : Op::Neg, random_expr(rng, depth - 1));
    default:
      return Expr::binary(kBinary[pick(11)], random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  }
}

PlanNode random_node(std::mt19937_64& rng, int depth, int& counter) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  PlanNode n;
  n.type = depth > 0 && pick(2) ? NodeType::List : static_cast<NodeType>(1 + pick(3));
  n.name = "N" + std::to_string(counter++);
  if (pick(2)) n.decls.push_back({"int", "v" + std::to_string(counter), Value::integer(pick(9) - 4)});
  if (pick(3) == 0) n.decls.push_back({"bool", "b" + std::to_string(counter), Value::boolean(pick(2))});
  for (auto& c : n.conditions) {
    if (pick(3) == 0) c = random_expr(rng, 2);
  }
  if (n.type == NodeType::Command && pick(4)) {
    n.command = CommandCall{"Cmd", {}};
    for (int i = pick(3); i > 0; --i) n.command->args.push_back(random_expr(rng, 1));
  }
  if (n.type == NodeType::Assignment) {
    n.assignment = AssignmentBody{"x", random_expr(rng, 2)};
    if (pick(2)) n.priority = pick(5);
  }
  if (n.type == NodeType::List) {
    for (int i = pick(4); i > 0; --i) n.children.push_back(random_node(rng, depth - 1, counter));
  }
  return n;
}

// Three-valued truth as a lattice F < U < T: AND is min, OR is max.
int lattice(const Value& v) { return v.is_unknown() ? 1 : (v.as_bool() ? 2 : 0); }

}  // namespace

TEST_SUITE("parse_plan") {
  TEST_CASE("SafeDrive parses into the documented tree") {
    const PlanAST plan = parse_plan(fixtures::read_corpus(kSafeDrive));
    const PlanNode& root = plan.root;
    CHECK(root.type == NodeType::List);
    CHECK(root.name == "SafeDrive");
    REQUIRE(root.decls.size() == 1);
    CHECK(root.decls[0].name == "pictures");
    CHECK(root.decls[0].init == Value::integer(0));
    CHECK(root.condition(Condition::End) != nullptr);
    CHECK(root.condition(Condition::Start) == nullptr);
    REQUIRE(root.children.size() == 1);
    const PlanNode& loop = root.children[0];
    CHECK(loop.type == NodeType::List);
    CHECK(loop.name == "Loop");
    CHECK(to_string(*loop.condition(Condition::Repeat)) == "LookupOnChange(WheelStuck) == false");
    REQUIRE(loop.children.size() == 3);
    CHECK(loop.children[0].name == "OneMeter");
    CHECK(loop.children[0].type == NodeType::Command);
    CHECK(loop.children[0].command->name == "Drive");
    CHECK(loop.children[1].name == "TakePic");
    CHECK(loop.children[1].command->args.empty());
    CHECK(to_string(*loop.children[1].condition(Condition::Start)) == "OneMeter.status == FINISHED AND pictures < 10");
    const PlanNode& counter = loop.children[2];
    CHECK(counter.type == NodeType::Assignment);
    CHECK(counter.assignment->target == "pictures");
    CHECK(to_string(*counter.assignment->value) == "pictures + 1");
    CHECK_FALSE(counter.priority.has_value());
  }

  TEST_CASE("single Empty node") {
    const PlanAST plan = parse_plan("Empty E {}");
    CHECK(plan.root.type == NodeType::Empty);
    CHECK(plan.root.children.empty());
    CHECK(std::all_of(plan.root.conditions.begin(), plan.root.conditions.end(), [](const ExprPtr& e) { return !e; }));
  }

  TEST_CASE("parent and child may share a short name") {
    const ExecutionState s = compile(parse_plan("List L { Command L { } }"));
    REQUIRE(s.internal.nodes.size() == 2);
    CHECK(s.internal.nodes[0].id == "L");
    CHECK(s.internal.nodes[1].id == "L.L");
  }

  TEST_CASE("syntax errors carry line and column") {
    try {
      parse_plan("List A {\n  Start: x +;\n}");
      FAIL("expected a PlanError");
    } catch (const PlanError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 13);
    }
    CHECK_THROWS_AS(parse_plan(""), PlanError);
    CHECK_THROWS_AS(parse_plan("List A {"), PlanError);
    CHECK_THROWS_AS(parse_plan("List A {} Empty B {}"), PlanError);
    CHECK_THROWS_AS(parse_plan("Empty E { Start: \"open; }"), PlanError);
    CHECK_THROWS_AS(parse_plan("Empty E { Start: 1 < 2 < 3; }"), PlanError);
    CHECK_THROWS_AS(parse_plan("Empty E { Start: 99999999999999999999; }"), PlanError);
    CHECK_THROWS_AS(parse_plan("Empty E { Start: X.color; }"), PlanError);
    CHECK_THROWS_AS(parse_plan("Empty E { # }"), PlanError);
  }

  TEST_CASE("unknown condition keyword") {
    try {
      parse_plan("Empty E {\n  Until: true;\n}");
      FAIL("expected a PlanError");
    } catch (const PlanError& e) {
      CHECK(std::string(e.what()).find("unknown condition keyword 'Until'") != std::string::npos);
      CHECK(e.line() == 2);
    }
  }

  TEST_CASE("duplicate sibling names") {
    CHECK_THROWS_WITH_AS(parse_plan("List L { Empty A {} Empty A {} }"), doctest::Contains("duplicate sibling"),
                         PlanError);
    CHECK_NOTHROW(parse_plan("List L { List A { Empty A {} } Empty B {} }"));
  }

  TEST_CASE("clauses must fit the node type") {
    CHECK_THROWS_AS(parse_plan("Empty E { Command: Go(); }"), PlanError);
    CHECK_THROWS_AS(parse_plan("Command C { Assignment: x := 1; }"), PlanError);
    CHECK_THROWS_AS(parse_plan("Command C { Priority: 1; }"), PlanError);
    CHECK_THROWS_AS(parse_plan("Empty E { Empty F {} }"), PlanError);
    CHECK_THROWS_AS(parse_plan("Assignment A { Start: true; }"), PlanError);
    CHECK_THROWS_AS(parse_plan("Empty E { Start: true; Start: false; }"), PlanError);
    CHECK_THROWS_AS(parse_plan("List L { int x = 0; bool x = true; }"), PlanError);
  }

  TEST_CASE("negative literals and negation stay distinct") {
    const PlanAST plan = parse_plan("Empty E { Start: -1 < -(1) AND - x > 0; }");
    const Expr& e = *plan.root.condition(Condition::Start);
    const Expr& lhs = *e.operands[0];
    CHECK(lhs.operands[0]->kind == Expr::Kind::Literal);
    CHECK(lhs.operands[0]->value == Value::integer(-1));
    CHECK(lhs.operands[1]->kind == Expr::Kind::Unary);
    CHECK(to_string(e) == "-1 < -(1) AND -x > 0");
  }

  TEST_CASE("comments and Repeat-while") {
    const PlanAST plan = parse_plan("// header\nEmpty E { // trailing\n Repeat-while: false; }");
    CHECK(plan.root.condition(Condition::Repeat) != nullptr);
    CHECK(print_plan(plan) == "Empty E {\n  Repeat-while: false;\n}\n");
  }
}

TEST_CASE("print then parse is the identity on random expressions") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 2000; ++i) {
    PlanAST plan;
    plan.root.name = "E";
    plan.root.conditions[0] = random_expr(rng, 4);
    const std::string text = print_plan(plan);
    CAPTURE(text);
    CHECK(same_plan(parse_plan(text), plan));
  }
}

TEST_CASE("print then parse is the identity on random plans and the corpus") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    int counter = 0;
    PlanAST plan{random_node(rng, 3, counter)};
    const std::string text = print_plan(plan);
    CAPTURE(text);
    const PlanAST back = parse_plan(text);
    CHECK(same_plan(back, plan));
    CHECK(print_plan(back) == text);
  }
  for (const char* name : {"safedrive.plx", "race.plx", "cyclic.plx", "empty.plx", "guarded.plx"}) {
    const PlanAST plan = parse_plan(fixtures::read_corpus(name));
    CHECK(same_plan(parse_plan(print_plan(plan)), plan));
  }
}

TEST_SUITE("compile") {
  TEST_CASE("SafeDrive: five nodes and one variable") {
    const ExecutionState s = fixtures::compile_corpus(kSafeDrive);
    std::vector<std::string> ids;
    for (const NodeObject& n : s.internal.nodes) ids.push_back(n.id);
    CHECK(ids == std::vector<std::string>{"SafeDrive", "Loop.SafeDrive", "OneMeter.Loop.SafeDrive",
                                          "TakePic.Loop.SafeDrive", "Counter.Loop.SafeDrive"});
    REQUIRE(s.internal.variables.size() == 1);
    CHECK(s.internal.variables[0].id == "pictures.SafeDrive");
    CHECK(s.internal.variables[0].initval == Value::integer(0));
    CHECK(s.internal.variables[0].actval == Value::integer(0));
    CHECK(s.external.empty());
    CHECK(s.pending.empty());
    for (const NodeObject& n : s.internal.nodes) {
      CHECK(n.status == Status::Inactive);
      CHECK(n.outcome == Outcome::None);
      CHECK_FALSE(n.primed);
      for (const ExprPtr& c : n.conditions) CHECK(c != nullptr);
    }
    const NodeObject& counter = s.internal.node("Counter.Loop.SafeDrive");
    CHECK(counter.assign_target == "pictures.SafeDrive");
    CHECK(counter.parent == "Loop.SafeDrive");
    CHECK(counter.priority == 0);
    const NodeObject& take = s.internal.node("TakePic.Loop.SafeDrive");
    CHECK(take.condition(Condition::Start)->operands[0]->operands[0]->resolved == "OneMeter.Loop.SafeDrive");
  }

  TEST_CASE("no declarations, no variable objects") {
    CHECK(fixtures::compile_text("List L { Empty A {} }").internal.variables.empty());
  }

  TEST_CASE("defaults for omitted conditions") {
    const ExecutionState s = fixtures::compile_text("List L { Empty A {} Empty B {} }");
    const NodeObject& leaf = s.internal.node("A.L");
    auto literal = [](const NodeObject& n, Condition c) { return n.condition(c)->value; };
    CHECK(literal(leaf, Condition::Start) == Value::boolean(true));
    CHECK(literal(leaf, Condition::Skip) == Value::boolean(false));
    CHECK(literal(leaf, Condition::Repeat) == Value::boolean(false));
    CHECK(literal(leaf, Condition::End) == Value::boolean(true));
    CHECK(literal(leaf, Condition::Pre) == Value::boolean(true));
    CHECK(literal(leaf, Condition::Post) == Value::boolean(true));
    CHECK(literal(leaf, Condition::Inv) == Value::boolean(true));
    const Expr& list_end = *s.internal.node("L").condition(Condition::End);
    CHECK(list_end.kind == Expr::Kind::ChildrenFinished);
    CHECK(list_end.children == std::vector<std::string>{"A.L", "B.L"});
  }

  TEST_CASE("lexical scoping and shadowing") {
    const ExecutionState s =
        fixtures::compile_text("List R { int x = 1; List M { int x = 2; Assignment A { Assignment: x := x + 1; } } "
                               "Assignment B { Assignment: x := 0; } }");
    CHECK(s.internal.node("A.M.R").assign_target == "x.M.R");
    CHECK(s.internal.node("B.R").assign_target == "x.R");
    CHECK(s.internal.variables.size() == 2);
  }

  TEST_CASE("node references search children, then self, then upward") {
    const ExecutionState s = fixtures::compile_text(
        "List L { Command L { Start: L.status == WAITING; } Empty K { Start: L.status == FINISHED; } "
        "List P { Empty Q { Start: P.outcome == SUCCESS; } } }");
    CHECK(s.internal.node("L.L").condition(Condition::Start)->operands[0]->resolved == "L.L");
    CHECK(s.internal.node("K.L").condition(Condition::Start)->operands[0]->resolved == "L.L");
    CHECK(s.internal.node("Q.P.L").condition(Condition::Start)->operands[0]->resolved == "P.L");
  }

  TEST_CASE("compile errors") {
    CHECK_THROWS_WITH_AS(fixtures::compile_text("Empty E { Start: z > 0; }"), doctest::Contains("unresolved variable"),
                         CompileError);
    CHECK_THROWS_WITH_AS(fixtures::compile_text("Assignment A { Assignment: z := 1; }"),
                         doctest::Contains("undeclared variable"), CompileError);
    CHECK_THROWS_WITH_AS(fixtures::compile_text("Empty E { Start: Ghost.status == FINISHED; }"),
                         doctest::Contains("unknown node"), CompileError);
    // A sibling's variables are not visible.
    CHECK_THROWS_AS(fixtures::compile_text("List R { List A { int v = 0; } Empty B { Start: v > 0; } }"), CompileError);
    CHECK_THROWS_AS(fixtures::compile_text("List R { int x = 0; Empty E { Start: x AND true; } }"), CompileError);
    CHECK_THROWS_AS(fixtures::compile_text("List R { int x = 0; Empty E { Start: x + 1; } }"), CompileError);
    CHECK_THROWS_AS(fixtures::compile_text("List R { int x = 0; Empty E { Start: x == true; } }"), CompileError);
    CHECK_THROWS_AS(fixtures::compile_text("List R { bool b = true; Assignment A { Assignment: b := 1; } }"),
                    CompileError);
    CHECK_THROWS_AS(fixtures::compile_text("Empty E { Start: E.status < 1; }"), CompileError);
    CHECK_NOTHROW(fixtures::compile_text("List R { int x = 0; Empty E { Start: x == UNKNOWN; } }"));
    CHECK_NOTHROW(fixtures::compile_text("Empty E { Start: LookupOnChange(a) + 1 > LookupOnChange(b); }"));
  }

  TEST_CASE("qualified names") {
    const QualifiedName q = QualifiedName::parse("Counter.Loop.SafeDrive");
    CHECK(q.leaf() == "Counter");
    CHECK(q.parent().to_string() == "Loop.SafeDrive");
    CHECK(q.parent().parent().parent().empty());
    CHECK(QualifiedName::parse("Loop.SafeDrive").child("Counter") == q);
  }
}

TEST_SUITE("eval") {
  TEST_CASE("lookup equality") {
    CHECK(eval_probe("LookupOnChange(WheelStuck) == false", {{"WheelStuck", Value::boolean(false)}}) ==
          Value::boolean(true));
    CHECK(eval_probe("LookupOnChange(WheelStuck) == false").is_unknown());
  }

  TEST_CASE("Kleene absorption and Unknown comparisons") {
    CHECK(eval_probe("false AND r") == Value::boolean(false));
    CHECK(eval_probe("r AND false") == Value::boolean(false));
    CHECK(eval_probe("true OR r") == Value::boolean(true));
    CHECK(eval_probe("true AND r").is_unknown());
    CHECK(eval_probe("NOT r").is_unknown());
    CHECK(eval_probe("UNKNOWN == 5").is_unknown());
    CHECK(eval_probe("LookupOnChange(n) + 1 > 2").is_unknown());
  }

  TEST_CASE("arithmetic and comparisons") {
    CHECK(eval_probe("x * 2 - 1 == 5") == Value::boolean(true));
    CHECK(eval_probe("-x < y AND x >= 3 AND x <= 3 AND x != y") == Value::boolean(true));
    CHECK(eval_probe("E.status == INACTIVE AND E.outcome == NONE") == Value::boolean(true));
  }

  TEST_CASE("type mismatch at run time is an error, not Unknown") {
    CHECK_THROWS_AS(eval_probe("LookupOnChange(a) < 3", {{"a", Value::boolean(true)}}), EvalError);
    CHECK_THROWS_AS(eval_probe("LookupOnChange(a) AND true", {{"a", Value::integer(1)}}), EvalError);
    CHECK_THROWS_AS(eval_probe("LookupOnChange(a) == 1", {{"a", Value::string("s")}}), EvalError);
    CHECK_THROWS_AS(eval_probe("LookupOnChange(a) * 2 > 0", {{"a", Value::integer(INT64_MAX)}}), EvalError);
  }

  TEST_CASE("boolean connectives agree with the three-valued lattice") {
    const std::vector<std::string> vars = {"p", "q", "r"};
    const std::vector<Value> values = {Value::boolean(false), Value::unknown(), Value::boolean(true)};
    std::mt19937_64 rng(5);
    // Oracle: F < U < T, AND = min, OR = max, NOT = mirror.
    std::function<std::pair<std::string, std::function<int(const std::vector<int>&)>>(int)> gen =
        [&](int depth) -> std::pair<std::string, std::function<int(const std::vector<int>&)>> {
      if (depth == 0 || rng() % 4 == 0) {
        const std::size_t i = rng() % vars.size();
        return {vars[i], [i](const std::vector<int>& env) { return env[i]; }};
      }
      switch (rng() % 3) {
        case 0: {
          auto a = gen(depth - 1);
          return {"NOT (" + a.first + ")", [f = a.second](const std::vector<int>& env) { return 2 - f(env); }};
        }
        case 1: {
          auto a = gen(depth - 1);
          auto b = gen(depth - 1);
          return {"(" + a.first + ") AND (" + b.first + ")",
                  [f = a.second, g = b.second](const std::vector<int>& env) { return std::min(f(env), g(env)); }};
        }
        default: {
          auto a = gen(depth - 1);
          auto b = gen(depth - 1);
          return {"(" + a.first + ") OR (" + b.first + ")",
                  [f = a.second, g = b.second](const std::vector<int>& env) { return std::max(f(env), g(env)); }};
        }
      }
    };
    for (int t = 0; t < 60; ++t) {
      auto [text, oracle] = gen(4);
      ExecutionState s = probe(text);
      CAPTURE(text);
      for (int code = 0; code < 27; ++code) {
        const std::vector<int> env = {code % 3, code / 3 % 3, code / 9};
        for (std::size_t i = 0; i < vars.size(); ++i) set_var(s, vars[i] + ".R", values[env[i]]);
        const Value got = eval(s, probe_expr(s));
        CHECK(lattice(got) == oracle(env));
      }
    }
  }

  TEST_CASE("two-valued inputs coincide with classical semantics") {
    ExecutionState s = probe("(p AND NOT q) OR (x - y > 2 AND q)");
    for (int p = 0; p < 2; ++p) {
      for (int q = 0; q < 2; ++q) {
        for (int x = -3; x <= 3; ++x) {
          for (int y = -3; y <= 3; ++y) {
            set_var(s, "p.R", Value::boolean(p));
            set_var(s, "q.R", Value::boolean(q));
            set_var(s, "x.R", Value::integer(x));
            set_var(s, "y.R", Value::integer(y));
            const bool classical = (p && !q) || (x - y > 2 && q);
            CHECK(eval(s, probe_expr(s)) == Value::boolean(classical));
          }
        }
      }
    }
  }

  TEST_CASE("eval is pure") {
    ExecutionState s = probe("x + y > 2 AND LookupOnChange(k) == 1", "");
    s.external["k"] = Value::integer(1);
    const std::string before = state_key(s);
    const Value first = eval(s, probe_expr(s));
    for (int i = 0; i < 5; ++i) CHECK(eval(s, probe_expr(s)) == first);
    CHECK(state_key(s) == before);
  }
}

TEST_SUITE("anc_inv and anc_end") {
  const char* kNested = "List G { Inv: LookupOnChange(g); End: LookupOnChange(ge); List P { Inv: LookupOnChange(p); "
                        "End: LookupOnChange(pe); Empty C {} } }";

  TEST_CASE("root has no ancestors") {
    ExecutionState s = fixtures::compile_text(kNested);
    CHECK(anc_inv(s, "G") == Value::boolean(true));
    CHECK(anc_end(s, "G") == Value::boolean(false));
  }

  TEST_CASE("three-valued lifting over ancestors") {
    ExecutionState s = fixtures::compile_text(kNested);
    s.external = {{"g", Value::boolean(true)}, {"p", Value::boolean(false)}};
    CHECK(anc_inv(s, "C.P.G") == Value::boolean(false));
    s.external = {{"g", Value::boolean(true)}};
    CHECK(anc_inv(s, "C.P.G").is_unknown());
    s.external = {{"g", Value::boolean(false)}};
    CHECK(anc_inv(s, "C.P.G") == Value::boolean(false));
    s.external = {{"g", Value::boolean(true)}, {"p", Value::boolean(true)}};
    CHECK(anc_inv(s, "C.P.G") == Value::boolean(true));
    // P's own invariant does not count for P.
    s.external = {{"g", Value::boolean(true)}, {"p", Value::boolean(false)}};
    CHECK(anc_inv(s, "P.G") == Value::boolean(true));

    s.external = {{"ge", Value::boolean(false)}, {"pe", Value::boolean(false)}};
    CHECK(anc_end(s, "C.P.G") == Value::boolean(false));
    s.external = {{"ge", Value::boolean(false)}};
    CHECK(anc_end(s, "C.P.G").is_unknown());
    s.external = {{"ge", Value::boolean(true)}};
    CHECK(anc_end(s, "C.P.G") == Value::boolean(true));
  }
}
