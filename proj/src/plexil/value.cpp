// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include "syncsem/plexil/value.hpp"

#include <array>
#include <charconv>

namespace syncsem::plexil {

namespace {

constexpr std::array<std::string_view, 4> kTypeNames = {"List", "Command", "Assignment", "Empty"};
constexpr std::array<std::string_view, 7> kStatusNames = {"Inactive", "Waiting",  "Executing",     "Finishing",
                                                          "Failing",  "Finished", "IterationEnded"};
constexpr std::array<std::string_view, 7> kStatusKeywords = {"INACTIVE", "WAITING",  "EXECUTING",      "FINISHING",
                                                             "FAILING",  "FINISHED", "ITERATION_ENDED"};
constexpr std::array<std::string_view, 3> kOutcomeNames = {"None", "Success", "Failure"};
constexpr std::array<std::string_view, 3> kOutcomeKeywords = {"NONE", "SUCCESS", "FAILURE"};

template <typename E, std::size_t N>
std::optional<E> find_name(const std::array<std::string_view, N>& names, std::string_view s) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == s) return static_cast<E>(i);
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(NodeType t) { return kTypeNames[static_cast<std::size_t>(t)]; }
std::string_view to_string(Status s) { return kStatusNames[static_cast<std::size_t>(s)]; }
std::string_view to_string(Outcome o) { return kOutcomeNames[static_cast<std::size_t>(o)]; }

std::optional<NodeType> parse_node_type(std::string_view s) { return find_name<NodeType>(kTypeNames, s); }
std::optional<Status> parse_status(std::string_view s) { return find_name<Status>(kStatusNames, s); }
std::optional<Outcome> parse_outcome(std::string_view s) { return find_name<Outcome>(kOutcomeNames, s); }

std::string_view status_keyword(Status s) { return kStatusKeywords[static_cast<std::size_t>(s)]; }
std::string_view outcome_keyword(Outcome o) { return kOutcomeKeywords[static_cast<std::size_t>(o)]; }
std::optional<Status> status_from_keyword(std::string_view s) { return find_name<Status>(kStatusKeywords, s); }
std::optional<Outcome> outcome_from_keyword(std::string_view s) { return find_name<Outcome>(kOutcomeKeywords, s); }

std::string Value::to_string() const {
  switch (kind()) {
    case Kind::Unknown:
      return "UNKNOWN";
    case Kind::Int:
      return std::to_string(as_int());
    case Kind::Bool:
      return as_bool() ? "true" : "false";
    case Kind::String:
      break;
  }
  std::string out = "\"";
  for (char c : as_string()) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string_view kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::Unknown:
      return "unknown";
    case Value::Kind::Int:
      return "int";
    case Value::Kind::Bool:
      return "bool";
    case Value::Kind::String:
      return "string";
  }
  return "?";
}

std::optional<Value> parse_value(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  if (text == "true") return Value::boolean(true);
  if (text == "false") return Value::boolean(false);
  if (text == "UNKNOWN") return Value::unknown();
  if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
    std::string out;
    for (std::size_t i = 1; i + 1 < text.size(); ++i) {
      if (text[i] == '\\' && i + 2 < text.size()) ++i;
      out += text[i];
    }
    return Value::string(std::move(out));
  }
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec == std::errc() && ptr == text.data() + text.size()) return Value::integer(v);
  return std::nullopt;
}

}  // namespace syncsem::plexil
