// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syncsem/plexil/ast.hpp"
#include "syncsem/plexil/expr.hpp"
#include "syncsem/plexil/value.hpp"

namespace syncsem::plexil {

/// Child-first dotted name, e.g. Counter.Loop.SafeDrive. The parent's name
/// is the tail.
class QualifiedName {
 public:
  QualifiedName() = default;
  explicit QualifiedName(std::vector<std::string> parts);

  static QualifiedName parse(std::string_view dotted);

  /// `leaf.<this>`
  QualifiedName child(std::string leaf) const;
  /// Drops the first component; the root's parent is empty.
  QualifiedName parent() const;

  const std::vector<std::string>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  const std::string& leaf() const { return parts_.front(); }
  std::string to_string() const;

  auto operator<=>(const QualifiedName&) const = default;

 private:
  std::vector<std::string> parts_;
};

struct NodeObject {
  std::string id;
  NodeType type = NodeType::Empty;
  Status status = Status::Inactive;
  Outcome outcome = Outcome::None;
  std::array<ExprPtr, kConditionCount> conditions{};  // never null after compile

  // Body. `command` may be absent on a Command node (a no-op command).
  std::optional<CommandCall> command;
  std::string assign_target;  // variable id
  ExprPtr assign_value;
  std::vector<std::string> children;  // node ids, plan order

  std::string parent;                // empty for the root
  std::vector<std::string> declared;  // variable ids declared by this node
  std::int64_t priority = 0;
  bool primed = false;

  const ExprPtr& condition(Condition c) const { return conditions[static_cast<std::size_t>(c)]; }
};

struct VariableObject {
  std::string id;
  std::string type;  // "int" or "bool"
  Value initval;
  Value actval;
  bool primed = false;
};

/// Γ: one binding per name.
using ExternalState = std::map<std::string, Value>;

/// π: nodes in plan pre-order, variables sorted by id.
struct InternalState {
  std::vector<NodeObject> nodes;
  std::vector<VariableObject> variables;
  /// Node positions sorted by id; rebuilt by reindex(). Lookups fall back to
  /// a scan when it does not cover `nodes`.
  std::vector<std::size_t> node_index;

  void reindex();

  const NodeObject* find_node(std::string_view id) const;
  NodeObject* find_node(std::string_view id);
  const VariableObject* find_variable(std::string_view id) const;
  VariableObject* find_variable(std::string_view id);
  const NodeObject& node(std::string_view id) const;
  const VariableObject& variable(std::string_view id) const;
};

struct UpdateMsg {
  enum class Kind : std::uint8_t { Status, Outcome, Variable };
  Kind kind = Kind::Status;
  std::string id;
  Status status = Status::Inactive;
  Outcome outcome = Outcome::None;
  Value value;
  /// Node whose transition produced the message; not part of equality.
  std::string source;

  static UpdateMsg update_status(std::string id, Status s);
  static UpdateMsg update_outcome(std::string id, Outcome o);
  static UpdateMsg update_variable(std::string id, Value v);

  /// `<id> status = Finished` and friends, as written in traces.
  std::string to_string() const;

  bool operator==(const UpdateMsg& o) const {
    return kind == o.kind && id == o.id && status == o.status && outcome == o.outcome && value == o.value;
  }
};

/// Γ ⊢ π, plus the primed marks and pending messages used inside a micro step.
struct ExecutionState {
  ExternalState external;
  InternalState internal;
  std::vector<UpdateMsg> pending;

  const NodeObject& root() const { return internal.nodes.front(); }
};

class CompileError : public PlanError {
 public:
  using PlanError::PlanError;
};

/// Builds the initial execution state: every node Inactive with outcome
/// None, missing conditions defaulted, references resolved to qualified ids,
/// variables at their initial values, Γ empty. Throws CompileError on
/// unresolved names and ill-typed expressions.
ExecutionState compile(const PlanAST& plan);

/// Sorted `qualified-id field = value` lines for every object, followed by
/// `<name> lookup = <value>` for each binding in Γ.
std::string dump(const ExecutionState& state);

/// Full structural key of Γ ⊢ π; equal keys mean equal states.
std::string state_key(const ExecutionState& state);

}  // namespace syncsem::plexil
