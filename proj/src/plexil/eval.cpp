// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include "syncsem/plexil/eval.hpp"

namespace syncsem::plexil {

namespace {

[[noreturn]] void mismatch(const Expr& e, const Value& got, std::string_view want) {
  throw EvalError("'" + to_string(e) + "': expected " + std::string(want) + ", got " + got.to_string());
}

// Unknown or a boolean; anything else is a type error.
const Value& expect_bool(const Expr& e, const Value& v) {
  if (!v.is_unknown() && v.kind() != Value::Kind::Bool) mismatch(e, v, "bool");
  return v;
}

const Value& expect_int(const Expr& e, const Value& v) {
  if (!v.is_unknown() && v.kind() != Value::Kind::Int) mismatch(e, v, "int");
  return v;
}

Value kleene_and(const Value& a, const Value& b) {
  if (a.is_false() || b.is_false()) return Value::boolean(false);
  if (a.is_true() && b.is_true()) return Value::boolean(true);
  return Value::unknown();
}

Value kleene_or(const Value& a, const Value& b) {
  if (a.is_true() || b.is_true()) return Value::boolean(true);
  if (a.is_false() && b.is_false()) return Value::boolean(false);
  return Value::unknown();
}

Value compare(const Expr& e, const Value& a, const Value& b) {
  if (a.is_unknown() || b.is_unknown()) return Value::unknown();
  if (e.op == Op::Eq || e.op == Op::Ne) {
    if (a.kind() != b.kind()) mismatch(e, b, kind_name(a.kind()));
    return Value::boolean((a == b) == (e.op == Op::Eq));
  }
  expect_int(e, a);
  expect_int(e, b);
  const auto x = a.as_int();
  const auto y = b.as_int();
  switch (e.op) {
    case Op::Lt:
      return Value::boolean(x < y);
    case Op::Gt:
      return Value::boolean(x > y);
    case Op::Le:
      return Value::boolean(x <= y);
    default:
      return Value::boolean(x >= y);
  }
}

Value arith(const Expr& e, const Value& a, const Value& b) {
  expect_int(e, a);
  expect_int(e, b);
  if (a.is_unknown() || b.is_unknown()) return Value::unknown();
  std::int64_t out = 0;
  bool overflow = false;
  switch (e.op) {
    case Op::Add:
      overflow = __builtin_add_overflow(a.as_int(), b.as_int(), &out);
      break;
    case Op::Sub:
      overflow = __builtin_sub_overflow(a.as_int(), b.as_int(), &out);
      break;
    default:
      overflow = __builtin_mul_overflow(a.as_int(), b.as_int(), &out);
      break;
  }
  if (overflow) throw EvalError("'" + to_string(e) + "': integer overflow");
  return Value::integer(out);
}

}  // namespace

Value eval(const ExternalState& gamma, const InternalState& pi, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal:
    case Expr::Kind::Constant:
      return e.value;
    case Expr::Kind::Variable:
      return pi.variable(e.resolved).actval;
    case Expr::Kind::NodeState: {
      const NodeObject& n = pi.node(e.resolved);
      return Value::string(std::string(e.attribute == "status" ? status_keyword(n.status) : outcome_keyword(n.outcome)));
    }
    case Expr::Kind::Lookup: {
      auto it = gamma.find(e.name);
      return it == gamma.end() ? Value::unknown() : it->second;
    }
    case Expr::Kind::ChildrenFinished: {
      for (const std::string& c : e.children) {
        if (pi.node(c).status != Status::Finished) return Value::boolean(false);
      }
      return Value::boolean(true);
    }
    case Expr::Kind::Unary: {
      const Value v = eval(gamma, pi, *e.operands[0]);
      if (e.op == Op::Not) {
        expect_bool(e, v);
        return v.is_unknown() ? v : Value::boolean(!v.as_bool());
      }
      expect_int(e, v);
      if (v.is_unknown()) return v;
      std::int64_t out = 0;
      if (__builtin_sub_overflow(std::int64_t{0}, v.as_int(), &out)) throw EvalError("integer overflow");
      return Value::integer(out);
    }
    case Expr::Kind::Binary:
      break;
  }
  const Value a = eval(gamma, pi, *e.operands[0]);
  // Both operands are always evaluated so type errors are not masked by
  // short-circuiting; the language has no side effects.
  const Value b = eval(gamma, pi, *e.operands[1]);
  switch (e.op) {
    case Op::And:
      return kleene_and(expect_bool(e, a), expect_bool(e, b));
    case Op::Or:
      return kleene_or(expect_bool(e, a), expect_bool(e, b));
    case Op::Eq:
    case Op::Ne:
    case Op::Lt:
    case Op::Gt:
    case Op::Le:
    case Op::Ge:
      return compare(e, a, b);
    default:
      return arith(e, a, b);
  }
}

Value eval(const ExecutionState& s, const Expr& e) { return eval(s.external, s.internal, e); }

Value anc_inv(const ExecutionState& s, std::string_view node_id) {
  Value acc = Value::boolean(true);
  for (const NodeObject* n = &s.internal.node(node_id); !n->parent.empty();) {
    n = &s.internal.node(n->parent);
    const Expr& inv = *n->condition(Condition::Inv);
    acc = kleene_and(acc, expect_bool(inv, eval(s, inv)));
  }
  return acc;
}

Value anc_end(const ExecutionState& s, std::string_view node_id) {
  Value acc = Value::boolean(false);
  for (const NodeObject* n = &s.internal.node(node_id); !n->parent.empty();) {
    n = &s.internal.node(n->parent);
    const Expr& end = *n->condition(Condition::End);
    acc = kleene_or(acc, expect_bool(end, eval(s, end)));
  }
  return acc;
}

}  // namespace syncsem::plexil
