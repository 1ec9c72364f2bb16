// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace syncsem::plexil {

enum class NodeType : std::uint8_t { List, Command, Assignment, Empty };
enum class Status : std::uint8_t { Inactive, Waiting, Executing, Finishing, Failing, Finished, IterationEnded };
enum class Outcome : std::uint8_t { None, Success, Failure };

std::string_view to_string(NodeType t);
std::string_view to_string(Status s);
std::string_view to_string(Outcome o);

std::optional<NodeType> parse_node_type(std::string_view s);
/// Accepts the spelled-out names (`IterationEnded`).
std::optional<Status> parse_status(std::string_view s);
std::optional<Outcome> parse_outcome(std::string_view s);

/// Upper-case spelling used inside plan expressions (`ITERATION_ENDED`).
std::string_view status_keyword(Status s);
std::string_view outcome_keyword(Outcome o);
std::optional<Status> status_from_keyword(std::string_view s);
std::optional<Outcome> outcome_from_keyword(std::string_view s);

/// Integer, boolean, string, or Unknown.
class Value {
 public:
  enum class Kind : std::uint8_t { Unknown, Int, Bool, String };

  Value() = default;
  static Value unknown() { return Value(); }
  static Value integer(std::int64_t v) { return Value(Rep(v)); }
  static Value boolean(bool v) { return Value(Rep(v)); }
  static Value string(std::string v) { return Value(Rep(std::move(v))); }

  Kind kind() const noexcept { return static_cast<Kind>(rep_.index()); }
  bool is_unknown() const noexcept { return kind() == Kind::Unknown; }
  bool is_true() const noexcept { return kind() == Kind::Bool && std::get<bool>(rep_); }
  bool is_false() const noexcept { return kind() == Kind::Bool && !std::get<bool>(rep_); }

  std::int64_t as_int() const { return std::get<std::int64_t>(rep_); }
  bool as_bool() const { return std::get<bool>(rep_); }
  const std::string& as_string() const { return std::get<std::string>(rep_); }

  /// `UNKNOWN`, `42`, `true`, `"text"`.
  std::string to_string() const;

  friend bool operator==(const Value&, const Value&) = default;
  friend auto operator<=>(const Value&, const Value&) = default;

 private:
  using Rep = std::variant<std::monostate, std::int64_t, bool, std::string>;
  explicit Value(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

std::string_view kind_name(Value::Kind k);

/// Inverse of Value::to_string; nullopt on malformed text.
std::optional<Value> parse_value(std::string_view text);

}  // namespace syncsem::plexil
