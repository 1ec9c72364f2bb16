// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include "syncsem/plexil/exec.hpp"

#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace syncsem::plexil {

namespace kernels {

std::vector<std::optional<Firing>> collect_firings_serial(const ExecutionState& state, const RuleTable& table,
                                                          const std::vector<std::size_t>& order) {
  const auto& nodes = state.internal.nodes;
  std::vector<std::optional<Firing>> slots(nodes.size());
  auto visit = [&](std::size_t i) { slots[i] = atomic_try(table, state, nodes[i]); };
  if (order.empty()) {
    for (std::size_t i = 0; i < nodes.size(); ++i) visit(i);
  } else {
    if (order.size() != nodes.size()) throw std::invalid_argument("scan order must list every node once");
    std::vector<bool> seen(nodes.size(), false);
    for (std::size_t i : order) {
      if (i >= nodes.size() || seen[i]) throw std::invalid_argument("scan order must list every node once");
      seen[i] = true;
      visit(i);
    }
  }
  return slots;
}

std::vector<std::optional<Firing>> collect_firings_omp(const ExecutionState& state, const RuleTable& table) {
  const auto& nodes = state.internal.nodes;
  std::vector<std::optional<Firing>> slots(nodes.size());
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto n = static_cast<std::ptrdiff_t>(nodes.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      slots[static_cast<std::size_t>(i)] = atomic_try(table, state, nodes[static_cast<std::size_t>(i)]);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return slots;
}

}  // namespace kernels

std::vector<Race> resolve_races(ExecutionState& state) {
  // Writers per variable, in message order.
  std::map<std::string, std::vector<std::string>> writers;
  for (const UpdateMsg& m : state.pending) {
    if (m.kind != UpdateMsg::Kind::Variable) continue;
    auto& w = writers[m.id];
    if (w.empty() || w.back() != m.source) w.push_back(m.source);
  }
  std::vector<Race> races;
  std::map<std::string, std::optional<std::string>> keep;  // variable -> surviving writer
  for (auto& [var, ws] : writers) {
    if (ws.size() < 2) continue;
    Race race{var, ws, std::nullopt};
    std::int64_t best = 0;
    std::size_t best_count = 0;
    for (const std::string& w : ws) {
      const std::int64_t p = state.internal.node(w).priority;
      if (best_count == 0 || p > best) {
        best = p;
        best_count = 1;
        race.winner = w;
      } else if (p == best) {
        ++best_count;
      }
    }
    if (best_count != 1) race.winner.reset();
    keep[var] = race.winner;
    races.push_back(std::move(race));
  }
  std::erase_if(state.pending, [&](const UpdateMsg& m) {
    if (m.kind != UpdateMsg::Kind::Variable) return false;
    auto it = keep.find(m.id);
    return it != keep.end() && it->second != m.source;
  });
  return races;
}

void apply_updates(ExecutionState& state) {
  for (const UpdateMsg& m : state.pending) {
    if (m.kind == UpdateMsg::Kind::Variable) {
      VariableObject* v = state.internal.find_variable(m.id);
      if (!v) throw std::logic_error("update for unknown variable '" + m.id + "'");
      v->actval = m.value;
      v->primed = true;
      continue;
    }
    NodeObject* n = state.internal.find_node(m.id);
    if (!n) throw std::logic_error("update for unknown node '" + m.id + "'");
    if (m.kind == UpdateMsg::Kind::Status) {
      n->status = m.status;
    } else {
      n->outcome = m.outcome;
    }
  }
  state.pending.clear();
}

void unprime(ExecutionState& state) {
  for (NodeObject& n : state.internal.nodes) n.primed = false;
  for (VariableObject& v : state.internal.variables) v.primed = false;
}

std::pair<ExecutionState, MicroReport> micro(const ExecutionState& state, const MicroOptions& options) {
  if (!state.pending.empty()) throw std::logic_error("micro step started with pending messages");
  const RuleTable& table = options.rules();
  auto slots = options.parallel ? kernels::collect_firings_omp(state, table)
                                : kernels::collect_firings_serial(state, table, options.scan_order);

  MicroReport report;
  ExecutionState next = state;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) continue;
    next.internal.nodes[i].primed = true;
    next.pending.insert(next.pending.end(), slots[i]->updates.begin(), slots[i]->updates.end());
    report.fired.push_back(std::move(*slots[i]));
  }
  if (report.empty()) return {state, std::move(report)};
  report.races = resolve_races(next);
  report.applied = next.pending;
  apply_updates(next);
  unprime(next);
  return {std::move(next), std::move(report)};
}

SpuriousLoop::SpuriousLoop(std::size_t first_step, std::vector<std::string> cycle, std::vector<MicroReport> reports)
    : std::runtime_error("spurious loop: micro steps " + std::to_string(first_step) + ".." +
                         std::to_string(first_step + cycle.size()) + " return to an earlier state (period " +
                         std::to_string(cycle.size()) + ")"),
      first_step_(first_step),
      cycle_(std::move(cycle)),
      reports_(std::move(reports)) {}

BoundExhausted::BoundExhausted(std::size_t bound, std::vector<MicroReport> reports)
    : std::runtime_error("no micro normal form within " + std::to_string(bound) + " steps"),
      bound_(bound),
      reports_(std::move(reports)) {}

QuiescenceResult quiescence(const ExecutionState& state, std::size_t bound, const MicroOptions& options) {
  if (bound == 0) throw std::invalid_argument("quiescence bound must be at least 1");
  QuiescenceResult out{state, {}};
  // Dumps for the cycle report; full keys for detection.
  std::vector<std::string> dumps{dump(state)};
  std::unordered_map<std::string, std::size_t> seen{{state_key(state), 0}};
  for (std::size_t k = 0;; ++k) {
    auto [next, report] = micro(out.state, options);
    if (report.empty()) return out;
    if (k == bound) throw BoundExhausted(bound, std::move(out.reports));
    out.reports.push_back(std::move(report));
    out.state = std::move(next);
    std::string key = state_key(out.state);
    if (auto it = seen.find(key); it != seen.end()) {
      std::vector<std::string> cycle;
      for (std::size_t i = it->second; i <= k; ++i) cycle.push_back(dumps[i]);
      throw SpuriousLoop(it->second, std::move(cycle), std::move(out.reports));
    }
    seen.emplace(std::move(key), k + 1);
    dumps.push_back(dump(out.state));
  }
}

QuiescenceResult macro(const ExecutionState& state, const Event& event, std::size_t bound,
                       const MicroOptions& options) {
  ExecutionState s = state;
  for (const auto& [name, value] : event) s.external[name] = value;
  return quiescence(s, bound, options);
}

ExecutionTrace execute(const ExecutionState& state, const std::vector<Event>& events, std::size_t bound,
                       const MicroOptions& options) {
  ExecutionTrace trace{{}, state};
  for (const Event& e : events) {
    QuiescenceResult r = macro(trace.final_state, e, bound, options);
    trace.final_state = r.state;
    trace.steps.push_back(MacroStep{e, std::move(r.reports), std::move(r.state)});
  }
  return trace;
}

}  // namespace syncsem::plexil
