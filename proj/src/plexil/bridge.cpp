// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include "syncsem/plexil/bridge.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "syncsem/plexil/events.hpp"

namespace syncsem::plexil {

namespace {

Term value_term(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Int:
      return Term::integer(v.as_int());
    case Value::Kind::Bool:
      return Term::boolean(v.as_bool());
    case Value::Kind::String:
      return Term::symbol(v.to_string());
    case Value::Kind::Unknown:
      break;
  }
  return Term::symbol("UNKNOWN");
}

Term node_term(const std::string& id, Status s, Outcome o) {
  return Term::symbol("Node", {Term::symbol(id), Term::symbol(std::string(to_string(s))),
                               Term::symbol(std::string(to_string(o)))});
}

Term var_term(const std::string& id, const Value& v) { return Term::symbol("Var", {Term::symbol(id), value_term(v)}); }

struct Transition {
  const NodeObject* node;
  Status status;
  Outcome outcome;
  std::map<std::string, Value> writes;  // variable -> new value
};

std::vector<Transition> transitions(const ExecutionState& s, const MicroOptions& options) {
  const auto slots = kernels::collect_firings_serial(s, options.rules(), {});
  std::vector<Transition> out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) continue;
    const NodeObject& n = s.internal.nodes[i];
    Transition t{&n, n.status, n.outcome, {}};
    for (const UpdateMsg& m : slots[i]->updates) {
      if (m.kind == UpdateMsg::Kind::Status) t.status = m.status;
      if (m.kind == UpdateMsg::Kind::Outcome) t.outcome = m.outcome;
      if (m.kind == UpdateMsg::Kind::Variable) t.writes[m.id] = m.value;
    }
    out.push_back(std::move(t));
  }
  return out;
}

struct Table {
  std::map<TermSet, TermSet> reduct;
  std::map<TermSet, std::uint64_t> priority;
};

Table build(const ExecutionState& s, const MicroOptions& options) {
  const auto ts = transitions(s, options);
  Table table;
  for (const Transition& t : ts) {
    std::vector<std::string> vars;
    for (const auto& [v, _] : t.writes) vars.push_back(v);
    // N loses v when some other writer of v has priority at least N's.
    std::set<std::string> lost;
    for (const std::string& v : vars) {
      for (const Transition& other : ts) {
        if (other.node != t.node && other.writes.contains(v) && other.node->priority >= t.node->priority) {
          lost.insert(v);
        }
      }
    }
    if (vars.size() > 16) throw SizeCapExceeded(vars.size(), 16);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars.size()); ++mask) {
      std::vector<Term> lhs{node_term(t.node->id, t.node->status, t.node->outcome)};
      std::vector<Term> rhs{node_term(t.node->id, t.status, t.outcome)};
      bool loses = false;
      std::uint64_t size = 0;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        lhs.push_back(var_term(vars[i], s.internal.variable(vars[i]).actval));
        rhs.push_back(var_term(vars[i], t.writes.at(vars[i])));
        loses = loses || lost.contains(vars[i]);
        ++size;
      }
      TermSet l(std::move(lhs));
      table.reduct.emplace(l, TermSet(std::move(rhs)));
      table.priority.emplace(std::move(l), loses ? 0 : 1 + size);
    }
  }
  return table;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TermSet encode(const ExecutionState& state) {
  std::vector<Term> terms;
  for (const NodeObject& n : state.internal.nodes) terms.push_back(node_term(n.id, n.status, n.outcome));
  for (const VariableObject& v : state.internal.variables) terms.push_back(var_term(v.id, v.actval));
  return TermSet(std::move(terms));
}

SetRelation micro_as_setrel(const ExecutionState& state, const MicroOptions& options, Limits limits) {
  auto table = std::make_shared<const Table>(build(state, options));
  auto step = [table](const TermSet& a) {
    Successors out;
    if (auto it = table->reduct.find(a); it != table->reduct.end()) out.states.insert(it->second);
    return out;
  };
  auto redexes = [table](const TermSet& u) {
    std::vector<Redex> out;
    for (const auto& [lhs, rhs] : table->reduct) {
      if (u.includes(lhs)) out.push_back(Redex{lhs, Family{rhs}});
    }
    return out;
  };
  return SetRelation("atomic", step, redexes, limits);
}

PriorityFn race_priority(const ExecutionState& state, const MicroOptions& options) {
  auto table = std::make_shared<const Table>(build(state, options));
  return [table](const TermSet& b) -> std::uint64_t {
    auto it = table->priority.find(b);
    return it == table->priority.end() ? 0 : it->second;
  };
}

Agreement differential_check(const ExecutionState& state, const MicroOptions& options, Limits limits) {
  const TermSet enc = encode(state);
  const SetRelation rel = micro_as_setrel(state, options, limits);
  const Strategy strategy = max_redexes(rel, race_priority(state, options));
  const Family oracle = sync_ext(rel, strategy).step(enc).states;
  const auto [next, report] = micro(state, options);

  Agreement out;
  if (report.empty()) {
    if (!oracle.empty()) {
      out.agree = false;
      out.detail = "micro is quiescent but the oracle has successors " + to_string(oracle);
    }
    return out;
  }
  const TermSet expected = encode(next);
  if (oracle != Family{expected}) {
    out.agree = false;
    out.detail = "micro gives " + expected.to_string() + " but the oracle gives " + to_string(oracle);
    return out;
  }
  const Family serial = serialize(rel, strategy, enc);
  if (serial != Family{expected}) {
    out.agree = false;
    out.detail = "serialization gives " + to_string(serial) + " instead of " + expected.to_string();
  }
  return out;
}

std::vector<CaseResult> differential_corpus_check(const std::string& dir, std::size_t bound) {
  std::vector<std::filesystem::path> plans;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".plx") plans.push_back(entry.path());
  }
  std::sort(plans.begin(), plans.end());
  std::vector<CaseResult> results;
  for (const auto& plan_path : plans) {
    CaseResult result;
    const std::string name = plan_path.filename().string();
    std::size_t checked = 0;
    try {
      ExecutionState s = compile(parse_plan(read_file(plan_path)));
      auto events_path = plan_path;
      events_path.replace_extension(".events");
      const auto events = parse_event_script(read_file(events_path));
      bool normal = true;
      for (std::size_t e = 0; e < events.size() && result.passed && normal; ++e) {
        for (const auto& [n, v] : events[e]) s.external[n] = v;
        std::set<std::string> seen;
        normal = false;
        for (std::size_t k = 0; k <= bound; ++k) {
          const Agreement a = differential_check(s);
          ++checked;
          if (!a.agree) {
            result.passed = false;
            result.detail = name + ", macro step " + std::to_string(e + 1) + ", micro step " + std::to_string(k + 1) +
                            ":\n  state " + encode(s).to_string() + "\n  " + a.detail;
            break;
          }
          // A repeated state never reaches normal form; the plan ends here.
          if (!seen.insert(state_key(s)).second) break;
          auto [next, report] = micro(s);
          if (report.empty()) {
            normal = true;
            break;
          }
          s = std::move(next);
        }
      }
    } catch (const std::exception& ex) {
      result.passed = false;
      result.detail = name + ": " + ex.what();
    }
    if (result.passed) result.detail = name + ": " + std::to_string(checked) + " states agree";
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace syncsem::plexil
