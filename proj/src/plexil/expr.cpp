// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include "syncsem/plexil/expr.hpp"

namespace syncsem::plexil {

namespace {

// Binding strength used by the printer; mirrors the parser's precedence.
int precedence(const Expr& e) {
  if (e.kind == Expr::Kind::Unary) return e.op == Op::Not ? 3 : 7;
  if (e.kind != Expr::Kind::Binary) return 8;
  switch (e.op) {
    case Op::Or:
      return 1;
    case Op::And:
      return 2;
    case Op::Eq:
    case Op::Ne:
    case Op::Lt:
    case Op::Gt:
    case Op::Le:
    case Op::Ge:
      return 4;
    case Op::Add:
    case Op::Sub:
      return 5;
    default:
      return 6;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = to_string(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

std::string_view to_string(Op op) {
  switch (op) {
    case Op::Not:
      return "NOT";
    case Op::Neg:
      return "-";
    case Op::And:
      return "AND";
    case Op::Or:
      return "OR";
    case Op::Eq:
      return "==";
    case Op::Ne:
      return "!=";
    case Op::Lt:
      return "<";
    case Op::Gt:
      return ">";
    case Op::Le:
      return "<=";
    case Op::Ge:
      return ">=";
    case Op::Add:
      return "+";
    case Op::Sub:
      return "-";
    case Op::Mul:
      return "*";
  }
  return "?";
}

ExprPtr Expr::literal(Value v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Literal;
  e->value = std::move(v);
  return e;
}

ExprPtr Expr::constant(std::string keyword) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Constant;
  e->value = Value::string(keyword);
  e->name = std::move(keyword);
  return e;
}

ExprPtr Expr::variable(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Variable;
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::node_state(std::string node, std::string attribute) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::NodeState;
  e->name = std::move(node);
  e->attribute = std::move(attribute);
  return e;
}

ExprPtr Expr::lookup(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Lookup;
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::unary(Op op, ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Unary;
  e->op = op;
  e->operands = {std::move(operand)};
  return e;
}

ExprPtr Expr::binary(Op op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Binary;
  e->op = op;
  e->operands = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr Expr::children_finished(std::vector<std::string> child_ids) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::ChildrenFinished;
  e->children = std::move(child_ids);
  return e;
}

bool same_expr(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.attribute != b.attribute ||
      a.resolved != b.resolved || a.op != b.op || a.children != b.children ||
      a.operands.size() != b.operands.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.operands.size(); ++i) {
    if (!same_expr(a.operands[i], b.operands[i])) return false;
  }
  return true;
}

bool same_expr(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return a == b || same_expr(*a, *b);
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return e.value.to_string();
    case Expr::Kind::Constant:
      return e.name;
    case Expr::Kind::Variable:
      return e.name;
    case Expr::Kind::NodeState:
      return e.name + "." + e.attribute;
    case Expr::Kind::Lookup:
      return "LookupOnChange(" + e.name + ")";
    case Expr::Kind::ChildrenFinished: {
      std::string out = "AllChildrenFinished(";
      for (std::size_t i = 0; i < e.children.size(); ++i) out += (i ? "," : "") + e.children[i];
      return out + ")";
    }
    case Expr::Kind::Unary:
      if (e.op == Op::Not) return "NOT " + wrap(*e.operands[0], 3);
      // "-(1)" keeps negation of a literal distinct from the literal -1.
      if (e.operands[0]->kind == Expr::Kind::Literal) return "-(" + to_string(*e.operands[0]) + ")";
      return "-" + wrap(*e.operands[0], 8);
    case Expr::Kind::Binary: {
      const int p = precedence(e);
      // Comparisons do not chain; arithmetic and logic are left-associative.
      const int right_min = p + 1;
      const int left_min = p == 4 ? p + 1 : p;
      return wrap(*e.operands[0], left_min) + " " + std::string(to_string(e.op)) + " " +
             wrap(*e.operands[1], right_min);
    }
  }
  return "?";
}

}  // namespace syncsem::plexil
