// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "syncsem/plexil/exec.hpp"

namespace syncsem::plexil {

/// How much of each micro step the trace shows.
///   0  macro headers only
///   1  plus micro headers, firings, races and issued commands
///   2  plus every applied update (the default)
///   3  plus a state dump after each macro step
struct TraceFormat {
  int verbosity = 2;
};

/// Line-oriented record of one micro step:
///   micro <n>
///     fire <node> <label>
///     issued <Name(args)> from <node>
///     race <variable> winner <node>|none
///     update <object> <field> = <value>
std::string format_micro(std::size_t index, const MicroReport& report, const TraceFormat& format = {});

/// `macro <k> event {<pairs>}` followed by its micro steps, numbered from
/// `*micro_counter` (advanced past them).
std::string format_macro(std::size_t index, const Event& event, const std::vector<MicroReport>& reports,
                         const ExecutionState* after, std::size_t* micro_counter, const TraceFormat& format = {});

/// The whole run; micro steps are numbered from 1 across macro steps.
std::string format_trace(const ExecutionTrace& trace, const TraceFormat& format = {});

/// Human-readable report of a spurious loop: the cycle's states and steps.
std::string format_cycle(const SpuriousLoop& loop);

}  // namespace syncsem::plexil
