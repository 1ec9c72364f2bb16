// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "syncsem/plexil/rules.hpp"
#include "syncsem/plexil/state.hpp"

namespace syncsem::plexil {

/// Outcome of one assignment race: every node writing `variable` in the
/// same micro step, and the strictly highest-priority writer if there is one.
struct Race {
  std::string variable;
  std::vector<std::string> writers;
  std::optional<std::string> winner;

  bool operator==(const Race&) const = default;
};

struct MicroReport {
  /// Firings in plan order, with their updates as computed (before races).
  std::vector<Firing> fired;
  /// Updates that reached the state, in plan order.
  std::vector<UpdateMsg> applied;
  std::vector<Race> races;

  bool empty() const noexcept { return fired.empty(); }
  bool operator==(const MicroReport&) const = default;
};

struct MicroOptions {
  /// Null means RuleTable::builtin().
  const RuleTable* table = nullptr;
  /// Evaluate guards with the OpenMP kernel instead of the serial one.
  bool parallel = false;
  /// Node indices in the order guards are evaluated; empty means plan order.
  /// The result never depends on it.
  std::vector<std::size_t> scan_order;

  const RuleTable& rules() const { return table ? *table : RuleTable::builtin(); }
};

/// One synchronous step: every node's group is tried against the shared
/// pre-state, transitioning nodes are primed and their messages queued,
/// races are resolved, updates are applied and objects unprimed. A state
/// in which nothing fires is returned unchanged with an empty report.
std::pair<ExecutionState, MicroReport> micro(const ExecutionState& state, const MicroOptions& options = {});

/// Drops every losing UpdateVariable from `state.pending`: for each variable
/// written by two or more nodes only the strictly highest-priority writer
/// keeps its write, and nobody does on a tie. Status and outcome messages
/// are never dropped.
std::vector<Race> resolve_races(ExecutionState& state);

/// Consumes `state.pending`, overwriting the target fields. Throws
/// std::logic_error for a message naming an unknown object.
void apply_updates(ExecutionState& state);

/// Clears every primed mark.
void unprime(ExecutionState& state);

class SpuriousLoop : public std::runtime_error {
 public:
  SpuriousLoop(std::size_t first_step, std::vector<std::string> cycle, std::vector<MicroReport> reports);

  /// Micro step index (within the quiescence run) where the cycle starts.
  std::size_t first_step() const noexcept { return first_step_; }
  /// State dumps around the cycle; the state after the last one is the first.
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }
  /// Every micro report of the run, the cycle included.
  const std::vector<MicroReport>& reports() const noexcept { return reports_; }

 private:
  std::size_t first_step_;
  std::vector<std::string> cycle_;
  std::vector<MicroReport> reports_;
};

class BoundExhausted : public std::runtime_error {
 public:
  BoundExhausted(std::size_t bound, std::vector<MicroReport> reports);

  std::size_t bound() const noexcept { return bound_; }
  const std::vector<MicroReport>& reports() const noexcept { return reports_; }

 private:
  std::size_t bound_;
  std::vector<MicroReport> reports_;
};

struct QuiescenceResult {
  ExecutionState state;
  std::vector<MicroReport> reports;  // non-empty micro steps only
};

/// Iterates micro to a normal form. Throws SpuriousLoop when a state
/// repeats, BoundExhausted when `bound` steps do not reach a normal form.
QuiescenceResult quiescence(const ExecutionState& state, std::size_t bound, const MicroOptions& options = {});

using Event = std::vector<std::pair<std::string, Value>>;

/// Overwrites Γ with the event's bindings, then quiesces.
QuiescenceResult macro(const ExecutionState& state, const Event& event, std::size_t bound,
                       const MicroOptions& options = {});

struct MacroStep {
  Event event;
  std::vector<MicroReport> reports;
  ExecutionState after;
};

struct ExecutionTrace {
  std::vector<MacroStep> steps;
  ExecutionState final_state;
};

/// Folds macro over `events`.
ExecutionTrace execute(const ExecutionState& state, const std::vector<Event>& events, std::size_t bound,
                       const MicroOptions& options = {});

namespace kernels {

/// Guard evaluation for every node, visiting nodes in `order`. Slot i holds
/// node i's firing.
std::vector<std::optional<Firing>> collect_firings_serial(const ExecutionState& state, const RuleTable& table,
                                                          const std::vector<std::size_t>& order);

/// Same result, with nodes shared across OpenMP threads.
std::vector<std::optional<Firing>> collect_firings_omp(const ExecutionState& state, const RuleTable& table);

}  // namespace kernels

}  // namespace syncsem::plexil
