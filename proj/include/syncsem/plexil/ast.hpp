// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "syncsem/plexil/expr.hpp"
#include "syncsem/plexil/value.hpp"

namespace syncsem::plexil {

/// Syntax or compile error in a plan, with a 1-based source position
/// (0 when the position is not known).
class PlanError : public std::runtime_error {
 public:
  PlanError(const std::string& what, int line, int column)
      : std::runtime_error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " + what : what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

enum class Condition : std::uint8_t { Start, Skip, Repeat, End, Pre, Post, Inv };
inline constexpr std::size_t kConditionCount = 7;

/// Clause keyword as written in plans (`Repeat-while` for Repeat).
std::string_view clause_keyword(Condition c);
std::string_view to_string(Condition c);

struct VarDecl {
  std::string type;  // "int" or "bool"
  std::string name;
  Value init;
};

struct CommandCall {
  std::string name;
  std::vector<ExprPtr> args;
};

struct AssignmentBody {
  std::string target;
  ExprPtr value;
};

struct PlanNode {
  NodeType type = NodeType::Empty;
  std::string name;
  std::vector<VarDecl> decls;
  std::array<ExprPtr, kConditionCount> conditions{};  // null when not written
  std::optional<CommandCall> command;
  std::optional<AssignmentBody> assignment;
  std::optional<std::int64_t> priority;
  std::vector<PlanNode> children;
  int line = 0;
  int column = 0;

  const ExprPtr& condition(Condition c) const { return conditions[static_cast<std::size_t>(c)]; }
};

struct PlanAST {
  PlanNode root;
};

/// Structural equality; source positions are ignored.
bool same_plan(const PlanNode& a, const PlanNode& b);
bool same_plan(const PlanAST& a, const PlanAST& b);

/// Parses one root node:
///   node := TYPE IDENT '{' (decl | clause | node)* '}'
/// Throws PlanError on syntax errors, unknown clause keywords, clauses that
/// do not fit the node type, and duplicate sibling names.
PlanAST parse_plan(std::string_view text);

/// Canonical plan text: declarations, then clauses, then children.
std::string print_plan(const PlanAST& plan);

}  // namespace syncsem::plexil
