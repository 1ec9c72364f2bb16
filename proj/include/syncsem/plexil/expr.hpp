// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "syncsem/plexil/value.hpp"

namespace syncsem::plexil {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class Op : std::uint8_t { Not, Neg, And, Or, Eq, Ne, Lt, Gt, Le, Ge, Add, Sub, Mul };

std::string_view to_string(Op op);

/// Expression tree. Names are as written in the plan; `resolved` holds the
/// qualified object id filled in by compile().
struct Expr {
  enum class Kind : std::uint8_t {
    Literal,           // value
    Constant,          // status/outcome keyword, e.g. FINISHED; value holds it as a string
    Variable,          // name -> resolved variable id
    NodeState,         // name.attribute, attribute is "status" or "outcome"
    Lookup,            // LookupOnChange(name)
    Unary,             // op, operands[0]
    Binary,            // op, operands[0..1]
    ChildrenFinished,  // compile-time default end of a List node; children holds node ids
  };

  Kind kind = Kind::Literal;
  Value value;
  std::string name;
  std::string attribute;
  std::string resolved;
  Op op = Op::Not;
  std::vector<ExprPtr> operands;
  std::vector<std::string> children;

  static ExprPtr literal(Value v);
  static ExprPtr constant(std::string keyword);
  static ExprPtr variable(std::string name);
  static ExprPtr node_state(std::string node, std::string attribute);
  static ExprPtr lookup(std::string name);
  static ExprPtr unary(Op op, ExprPtr operand);
  static ExprPtr binary(Op op, ExprPtr lhs, ExprPtr rhs);
  static ExprPtr children_finished(std::vector<std::string> child_ids);
};

/// Deep structural equality, including resolved ids.
bool same_expr(const Expr& a, const Expr& b);
bool same_expr(const ExprPtr& a, const ExprPtr& b);

/// Plan-syntax rendering, fully parenthesized where precedence requires.
std::string to_string(const Expr& e);

}  // namespace syncsem::plexil
