// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include "syncsem/plexil/rules.hpp"

#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

#include "syncsem/plexil/eval.hpp"

namespace syncsem::plexil {

namespace detail {
extern const char* const kRuleTableText;
}  // namespace detail

namespace {

constexpr std::array<std::string_view, 12> kProbeNames = {
    "Start", "Skip", "Repeat", "End", "Pre", "Post", "Inv", "AncInv", "AncEnd", "Ack", "ChildrenFinished", "Parent"};

std::optional<Probe> parse_probe(std::string_view s) {
  for (std::size_t i = 0; i < kProbeNames.size(); ++i) {
    if (kProbeNames[i] == s) return static_cast<Probe>(i);
  }
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    std::string_view piece = trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (!piece.empty()) out.push_back(piece);
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

class TableParser {
 public:
  std::vector<RuleGroup> run(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t nl = text.find('\n', start);
      std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
      ++line_no_;
      if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (!line.empty()) this->line(line);
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
    return std::move(groups_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("rule table line " + std::to_string(line_no_) + ": " + msg);
  }

  void line(std::string_view line) {
    if (line.starts_with("group ")) {
      group(line.substr(6));
      return;
    }
    if (current_.empty()) fail("rule outside a group");
    const std::size_t colon = line.find(" : ");
    const std::size_t arrow = line.find("->");
    if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon) {
      fail("expected `<label> <origin> : <guard> -> <updates>`");
    }
    const auto head = split(line.substr(0, colon), ' ');
    if (head.size() != 2) fail("expected a label and an origin before ':'");
    AtomicRule rule;
    rule.label = std::string(head[0]);
    if (head[1] == "core") {
      rule.from_core = true;
    } else if (head[1] != "subset") {
      fail("origin must be `core` or `subset`");
    }
    const std::string_view guard = trim(line.substr(colon + 3, arrow - colon - 3));
    if (guard != "always") {
      for (std::string_view atom : split(guard, ',')) rule.guard.push_back(parse_atom(atom));
    }
    for (std::string_view u : split(line.substr(arrow + 2), ' ')) rule.updates.push_back(parse_update(u));
    if (rule.updates.empty()) fail("rule '" + rule.label + "' has no updates");
    for (std::size_t g : current_) {
      for (const AtomicRule& r : groups_[g].rules) {
        if (r.label == rule.label) fail("duplicate label '" + rule.label + "' in a group");
      }
      groups_[g].rules.push_back(rule);
    }
  }

  void group(std::string_view rest) {
    const auto parts = split(rest, ' ');
    if (parts.size() != 2) fail("expected `group <type> <status>`");
    const auto status = parse_status(parts[1]);
    if (!status) fail("unknown status '" + std::string(parts[1]) + "'");
    std::vector<NodeType> types;
    if (parts[0] == "*") {
      types = {NodeType::List, NodeType::Command, NodeType::Assignment, NodeType::Empty};
    } else if (auto t = parse_node_type(parts[0])) {
      types = {*t};
    } else {
      fail("unknown node type '" + std::string(parts[0]) + "'");
    }
    current_.clear();
    for (NodeType t : types) {
      if (!seen_.insert({t, *status}).second) {
        fail("group " + std::string(to_string(t)) + " " + std::string(to_string(*status)) + " defined twice");
      }
      current_.push_back(groups_.size());
      groups_.push_back(RuleGroup{t, *status, {}});
    }
  }

  GuardAtom parse_atom(std::string_view atom) {
    GuardAtom a;
    std::size_t eq = atom.find("!=");
    std::size_t value_at = 0;
    if (eq != std::string_view::npos) {
      a.negated = true;
      value_at = eq + 2;
    } else {
      eq = atom.find('=');
      if (eq == std::string_view::npos) fail("guard atom '" + std::string(atom) + "' has no '='");
      value_at = eq + 1;
    }
    const std::string_view name = trim(atom.substr(0, eq));
    const std::string_view value = trim(atom.substr(value_at));
    const auto probe = parse_probe(name);
    if (!probe) fail("unknown probe '" + std::string(name) + "'");
    a.probe = *probe;
    if (a.probe == Probe::Parent) {
      if (!status_from_keyword(value)) fail("unknown status keyword '" + std::string(value) + "'");
      a.value = Value::string(std::string(value));
    } else {
      auto v = parse_value(value);
      if (!v || v->kind() == Value::Kind::Int || v->kind() == Value::Kind::String) {
        fail("probe value must be true, false or UNKNOWN");
      }
      a.value = *v;
    }
    return a;
  }

  UpdateTemplate parse_update(std::string_view u) {
    UpdateTemplate t;
    if (u == "var=value") {
      t.kind = UpdateTemplate::Kind::VarValue;
    } else if (u == "var=unknown") {
      t.kind = UpdateTemplate::Kind::VarUnknown;
    } else if (u == "reset-vars") {
      t.kind = UpdateTemplate::Kind::ResetVars;
    } else if (u == "issue") {
      t.kind = UpdateTemplate::Kind::Issue;
    } else if (u.starts_with("status=")) {
      auto s = parse_status(u.substr(7));
      if (!s) fail("unknown status in '" + std::string(u) + "'");
      t.kind = UpdateTemplate::Kind::Status;
      t.status = *s;
    } else if (u.starts_with("outcome=")) {
      auto o = parse_outcome(u.substr(8));
      if (!o) fail("unknown outcome in '" + std::string(u) + "'");
      t.kind = UpdateTemplate::Kind::Outcome;
      t.outcome = *o;
    } else {
      fail("unknown update '" + std::string(u) + "'");
    }
    return t;
  }

  std::vector<RuleGroup> groups_;
  std::vector<std::size_t> current_;
  std::set<std::pair<NodeType, Status>> seen_;
  int line_no_ = 0;
};

Value condition_value(const ExecutionState& s, const NodeObject& n, Condition c) {
  const Expr& e = *n.condition(c);
  Value v = eval(s, e);
  if (!v.is_unknown() && v.kind() != Value::Kind::Bool) {
    throw EvalError(std::string(clause_keyword(c)) + " condition of '" + n.id + "' gave " + v.to_string());
  }
  return v;
}

Value probe_value(const ExecutionState& s, const NodeObject& n, Probe p) {
  switch (p) {
    case Probe::Start:
    case Probe::Skip:
    case Probe::Repeat:
    case Probe::End:
    case Probe::Pre:
    case Probe::Post:
    case Probe::Inv:
      return condition_value(s, n, static_cast<Condition>(p));
    case Probe::AncInv:
      return anc_inv(s, n.id);
    case Probe::AncEnd:
      return anc_end(s, n.id);
    case Probe::Ack: {
      auto it = s.external.find(n.id + ".ack");
      return it == s.external.end() ? Value::unknown() : it->second;
    }
    case Probe::ChildrenFinished:
      for (const std::string& c : n.children) {
        if (s.internal.node(c).status != Status::Finished) return Value::boolean(false);
      }
      return Value::boolean(true);
    case Probe::Parent:
      break;
  }
  // The root behaves as if its parent were always executing.
  if (n.parent.empty()) return Value::string(std::string(status_keyword(Status::Executing)));
  return Value::string(std::string(status_keyword(s.internal.node(n.parent).status)));
}

Firing instantiate(const AtomicRule& rule, const ExecutionState& s, const NodeObject& n) {
  Firing f;
  f.node = n.id;
  f.label = rule.label;
  auto push = [&](UpdateMsg m) {
    m.source = n.id;
    f.updates.push_back(std::move(m));
  };
  for (const UpdateTemplate& t : rule.updates) {
    switch (t.kind) {
      case UpdateTemplate::Kind::Status:
        push(UpdateMsg::update_status(n.id, t.status));
        break;
      case UpdateTemplate::Kind::Outcome:
        push(UpdateMsg::update_outcome(n.id, t.outcome));
        break;
      case UpdateTemplate::Kind::VarValue:
        if (!n.assign_target.empty()) push(UpdateMsg::update_variable(n.assign_target, eval(s, *n.assign_value)));
        break;
      case UpdateTemplate::Kind::VarUnknown:
        if (!n.assign_target.empty()) push(UpdateMsg::update_variable(n.assign_target, Value::unknown()));
        break;
      case UpdateTemplate::Kind::ResetVars:
        for (const std::string& v : n.declared) push(UpdateMsg::update_variable(v, s.internal.variable(v).initval));
        break;
      case UpdateTemplate::Kind::Issue:
        if (n.command) {
          std::string text = n.command->name + "(";
          for (std::size_t i = 0; i < n.command->args.size(); ++i) {
            text += (i ? ", " : "") + eval(s, *n.command->args[i]).to_string();
          }
          f.issued = text + ")";
        }
        break;
    }
  }
  return f;
}

}  // namespace

std::string_view to_string(Probe p) { return kProbeNames[static_cast<std::size_t>(p)]; }

RuleTable RuleTable::parse(std::string_view text) {
  RuleTable table;
  table.groups_ = TableParser().run(text);
  return table;
}

const RuleTable& RuleTable::builtin() {
  static const RuleTable table = parse(detail::kRuleTableText);
  return table;
}

const RuleGroup* RuleTable::group(NodeType type, Status status) const {
  for (const RuleGroup& g : groups_) {
    if (g.type == type && g.status == status) return &g;
  }
  return nullptr;
}

bool guard_holds(const AtomicRule& rule, const ExecutionState& state, const NodeObject& node) {
  for (const GuardAtom& a : rule.guard) {
    const bool match = probe_value(state, node, a.probe) == a.value;
    if (match == a.negated) return false;
  }
  return true;
}

std::optional<Firing> atomic_try(const RuleGroup& group, const ExecutionState& state, const NodeObject& node) {
  for (const AtomicRule& rule : group.rules) {
    if (guard_holds(rule, state, node)) return instantiate(rule, state, node);
  }
  return std::nullopt;
}

std::optional<Firing> atomic_try(const RuleTable& table, const ExecutionState& state, const NodeObject& node) {
  const RuleGroup* g = table.group(node.type, node.status);
  if (!g) return std::nullopt;
  return atomic_try(*g, state, node);
}

}  // namespace syncsem::plexil
