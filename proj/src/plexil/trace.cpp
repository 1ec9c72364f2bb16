// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include "syncsem/plexil/trace.hpp"

#include "syncsem/plexil/events.hpp"

namespace syncsem::plexil {

std::string format_micro(std::size_t index, const MicroReport& report, const TraceFormat& format) {
  if (format.verbosity < 1) return "";
  std::string out = "micro " + std::to_string(index) + "\n";
  for (const Firing& f : report.fired) {
    out += "  fire " + f.node + " " + f.label + "\n";
    if (f.issued) out += "  issued " + *f.issued + " from " + f.node + "\n";
  }
  for (const Race& r : report.races) out += "  race " + r.variable + " winner " + r.winner.value_or("none") + "\n";
  if (format.verbosity >= 2) {
    for (const UpdateMsg& m : report.applied) out += "  update " + m.to_string() + "\n";
  }
  return out;
}

std::string format_macro(std::size_t index, const Event& event, const std::vector<MicroReport>& reports,
                         const ExecutionState* after, std::size_t* micro_counter, const TraceFormat& format) {
  std::string out = "macro " + std::to_string(index) + " event {" + format_event(event) + "}\n";
  for (const MicroReport& r : reports) out += format_micro((*micro_counter)++, r, format);
  if (format.verbosity >= 3 && after) {
    const std::string d = dump(*after);
    std::size_t start = 0;
    while (start < d.size()) {
      const std::size_t nl = d.find('\n', start);
      out += "  state " + d.substr(start, nl - start) + "\n";
      start = nl + 1;
    }
  }
  return out;
}

std::string format_trace(const ExecutionTrace& trace, const TraceFormat& format) {
  std::string out;
  std::size_t micro_counter = 1;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const MacroStep& s = trace.steps[i];
    out += format_macro(i + 1, s.event, s.reports, &s.after, &micro_counter, format);
  }
  return out;
}

std::string format_cycle(const SpuriousLoop& loop) {
  std::string out = std::string(loop.what()) + "\n";
  for (std::size_t i = 0; i < loop.cycle().size(); ++i) {
    out += "cycle state " + std::to_string(i) + "\n";
    const std::string& d = loop.cycle()[i];
    std::size_t start = 0;
    while (start < d.size()) {
      const std::size_t nl = d.find('\n', start);
      out += "  " + d.substr(start, nl - start) + "\n";
      start = nl + 1;
    }
    const std::size_t step = loop.first_step() + i;
    if (step < loop.reports().size()) {
      for (const Firing& f : loop.reports()[step].fired) out += "  -> fire " + f.node + " " + f.label + "\n";
    }
  }
  return out;
}

}  // namespace syncsem::plexil
