// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "syncsem/plexil/exec.hpp"

namespace syncsem::plexil {

class EventScriptError : public std::runtime_error {
 public:
  EventScriptError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// One event per line as comma-separated `name=value` pairs; a blank line is
/// an empty event. Names are dotted identifiers; values use the plan's
/// literal syntax (42, true, UNKNOWN, "text"). A name may appear once per line.
std::vector<Event> parse_event_script(std::string_view text);

/// Inverse of one line of parse_event_script.
std::string format_event(const Event& event);

}  // namespace syncsem::plexil
