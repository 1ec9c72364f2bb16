// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include "syncsem/plexil/events.hpp"

#include <cctype>
#include <set>

namespace syncsem::plexil {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view name) {
  if (name.empty() || name.front() == '.' || name.back() == '.') return false;
  char prev = 0;
  for (char c : name) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
    if (!ok || (c == '.' && prev == '.')) return false;
    prev = c;
  }
  return !std::isdigit(static_cast<unsigned char>(name.front()));
}

// Splits on commas outside string literals.
std::vector<std::string_view> split_pairs(std::string_view line) {
  std::vector<std::string_view> out;
  bool quoted = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '\\' && quoted) {
      ++i;
    } else if (line[i] == '"') {
      quoted = !quoted;
    } else if (line[i] == ',' && !quoted) {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(line.substr(start));
  return out;
}

}  // namespace

std::vector<Event> parse_event_script(std::string_view text) {
  std::vector<Event> events;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::string_view line =
        trim(text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
    ++line_no;
    start = nl == std::string_view::npos ? text.size() : nl + 1;
    Event event;
    if (!line.empty()) {
      std::set<std::string_view> names;
      for (std::string_view pair : split_pairs(line)) {
        const std::size_t eq = pair.find('=');
        if (eq == std::string_view::npos) throw EventScriptError("expected name=value in '" + std::string(trim(pair)) + "'", line_no);
        const std::string_view name = trim(pair.substr(0, eq));
        if (!valid_name(name)) throw EventScriptError("invalid name '" + std::string(name) + "'", line_no);
        if (!names.insert(name).second) throw EventScriptError("name '" + std::string(name) + "' bound twice", line_no);
        auto value = parse_value(pair.substr(eq + 1));
        if (!value) throw EventScriptError("invalid value for '" + std::string(name) + "'", line_no);
        event.emplace_back(std::string(name), std::move(*value));
      }
    }
    events.push_back(std::move(event));
  }
  return events;
}

std::string format_event(const Event& event) {
  std::string out;
  for (std::size_t i = 0; i < event.size(); ++i) {
    out += (i ? ", " : "") + event[i].first + "=" + event[i].second.to_string();
  }
  return out;
}

}  // namespace syncsem::plexil
