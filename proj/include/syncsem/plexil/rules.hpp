// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syncsem/plexil/state.hpp"
#include "syncsem/plexil/value.hpp"

namespace syncsem::plexil {

enum class Probe : std::uint8_t {
  Start,
  Skip,
  Repeat,
  End,
  Pre,
  Post,
  Inv,
  AncInv,
  AncEnd,
  Ack,
  ChildrenFinished,
  Parent,
};

/// `probe=value` or, when `negated`, `probe!=value`.
struct GuardAtom {
  Probe probe = Probe::Start;
  bool negated = false;
  Value value;
};

struct UpdateTemplate {
  enum class Kind : std::uint8_t { Status, Outcome, VarValue, VarUnknown, ResetVars, Issue };
  Kind kind = Kind::Status;
  Status status = Status::Inactive;
  Outcome outcome = Outcome::None;
};

struct AtomicRule {
  std::string label;
  bool from_core = false;
  std::vector<GuardAtom> guard;  // conjunction; empty means always
  std::vector<UpdateTemplate> updates;
};

/// Rules for one (type, status) pair, highest priority first.
struct RuleGroup {
  NodeType type = NodeType::Empty;
  Status status = Status::Inactive;
  std::vector<AtomicRule> rules;
};

/// An atomic transition: the rule that fired and its instantiated updates.
struct Firing {
  std::string node;
  std::string label;
  std::vector<UpdateMsg> updates;
  /// `Name(args)` with arguments evaluated in the pre-state.
  std::optional<std::string> issued;

  bool operator==(const Firing&) const = default;
};

class RuleTable {
 public:
  /// Parses the table format documented in data/atomic_rules.tbl. Throws
  /// std::invalid_argument with a line number on malformed input.
  static RuleTable parse(std::string_view text);

  /// The table compiled into the library.
  static const RuleTable& builtin();

  /// Null when no rule applies to the pair (a terminal status).
  const RuleGroup* group(NodeType type, Status status) const;
  const std::vector<RuleGroup>& groups() const noexcept { return groups_; }

 private:
  std::vector<RuleGroup> groups_;
};

/// Whether every atom of the rule's guard holds for `node` in `state`.
bool guard_holds(const AtomicRule& rule, const ExecutionState& state, const NodeObject& node);

/// First rule of `group` whose guard holds, instantiated for `node`.
std::optional<Firing> atomic_try(const RuleGroup& group, const ExecutionState& state, const NodeObject& node);

/// Looks up the node's group in `table` and calls atomic_try.
std::optional<Firing> atomic_try(const RuleTable& table, const ExecutionState& state, const NodeObject& node);

std::string_view to_string(Probe p);

}  // namespace syncsem::plexil
