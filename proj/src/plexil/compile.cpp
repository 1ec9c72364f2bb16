// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "syncsem/plexil/state.hpp"

namespace syncsem::plexil {

QualifiedName::QualifiedName(std::vector<std::string> parts) : parts_(std::move(parts)) {}

QualifiedName QualifiedName::parse(std::string_view dotted) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= dotted.size()) {
    const std::size_t dot = dotted.find('.', start);
    const std::size_t end = dot == std::string_view::npos ? dotted.size() : dot;
    parts.emplace_back(dotted.substr(start, end - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return QualifiedName(std::move(parts));
}

QualifiedName QualifiedName::child(std::string leaf) const {
  std::vector<std::string> parts;
  parts.reserve(parts_.size() + 1);
  parts.push_back(std::move(leaf));
  parts.insert(parts.end(), parts_.begin(), parts_.end());
  return QualifiedName(std::move(parts));
}

QualifiedName QualifiedName::parent() const {
  if (parts_.size() <= 1) return QualifiedName();
  return QualifiedName(std::vector<std::string>(parts_.begin() + 1, parts_.end()));
}

std::string QualifiedName::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "." : "") + parts_[i];
  return out;
}

namespace {

template <typename Vec>
auto find_by_id(Vec& objects, std::string_view id) -> decltype(&objects.front()) {
  for (auto& o : objects) {
    if (o.id == id) return &o;
  }
  return nullptr;
}

}  // namespace

void InternalState::reindex() {
  node_index.resize(nodes.size());
  std::iota(node_index.begin(), node_index.end(), 0);
  std::sort(node_index.begin(), node_index.end(), [&](std::size_t a, std::size_t b) { return nodes[a].id < nodes[b].id; });
}

const NodeObject* InternalState::find_node(std::string_view id) const {
  if (node_index.size() != nodes.size()) return find_by_id(nodes, id);
  auto it = std::lower_bound(node_index.begin(), node_index.end(), id,
                             [&](std::size_t i, std::string_view k) { return nodes[i].id < k; });
  return it != node_index.end() && nodes[*it].id == id ? &nodes[*it] : nullptr;
}

NodeObject* InternalState::find_node(std::string_view id) {
  return const_cast<NodeObject*>(std::as_const(*this).find_node(id));
}

const VariableObject* InternalState::find_variable(std::string_view id) const {
  auto it = std::lower_bound(variables.begin(), variables.end(), id,
                             [](const VariableObject& v, std::string_view k) { return v.id < k; });
  return it != variables.end() && it->id == id ? &*it : nullptr;
}

VariableObject* InternalState::find_variable(std::string_view id) {
  return const_cast<VariableObject*>(std::as_const(*this).find_variable(id));
}

const NodeObject& InternalState::node(std::string_view id) const {
  const NodeObject* n = find_node(id);
  if (!n) throw std::out_of_range("no node '" + std::string(id) + "'");
  return *n;
}

const VariableObject& InternalState::variable(std::string_view id) const {
  const VariableObject* v = find_variable(id);
  if (!v) throw std::out_of_range("no variable '" + std::string(id) + "'");
  return *v;
}

UpdateMsg UpdateMsg::update_status(std::string id, Status s) {
  UpdateMsg m;
  m.kind = Kind::Status;
  m.id = std::move(id);
  m.status = s;
  return m;
}

UpdateMsg UpdateMsg::update_outcome(std::string id, Outcome o) {
  UpdateMsg m;
  m.kind = Kind::Outcome;
  m.id = std::move(id);
  m.outcome = o;
  return m;
}

UpdateMsg UpdateMsg::update_variable(std::string id, Value v) {
  UpdateMsg m;
  m.kind = Kind::Variable;
  m.id = std::move(id);
  m.value = std::move(v);
  return m;
}

std::string UpdateMsg::to_string() const {
  switch (kind) {
    case Kind::Status:
      return id + " status = " + std::string(plexil::to_string(status));
    case Kind::Outcome:
      return id + " outcome = " + std::string(plexil::to_string(outcome));
    case Kind::Variable:
      break;
  }
  return id + " actval = " + value.to_string();
}

namespace {

enum class Ty { Any, Int, Bool, String };

std::string_view ty_name(Ty t) {
  switch (t) {
    case Ty::Int:
      return "int";
    case Ty::Bool:
      return "bool";
    case Ty::String:
      return "string";
    case Ty::Any:
      break;
  }
  return "unknown";
}

Ty ty_of(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Int:
      return Ty::Int;
    case Value::Kind::Bool:
      return Ty::Bool;
    case Value::Kind::String:
      return Ty::String;
    case Value::Kind::Unknown:
      break;
  }
  return Ty::Any;
}

bool fits(Ty have, Ty want) { return have == Ty::Any || want == Ty::Any || have == want; }

struct Scope {
  // Variable short name -> (id, type), innermost last.
  std::vector<std::map<std::string, std::pair<std::string, Ty>>> frames;

  const std::pair<std::string, Ty>* lookup(const std::string& name) const {
    for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return &f->second;
    }
    return nullptr;
  }
};

class Compiler {
 public:
  ExecutionState run(const PlanAST& plan) {
    build(plan.root, QualifiedName(), "");
    state_.internal.reindex();
    std::sort(state_.internal.variables.begin(), state_.internal.variables.end(),
              [](const VariableObject& a, const VariableObject& b) { return a.id < b.id; });
    Scope scope;
    resolve(plan.root, scope);
    return std::move(state_);
  }

 private:
  // Pass 1: node objects, ids and variable objects.
  void build(const PlanNode& n, const QualifiedName& parent, const std::string& parent_id) {
    const QualifiedName qn = parent.child(n.name);
    NodeObject obj;
    obj.id = qn.to_string();
    obj.type = n.type;
    obj.parent = parent_id;
    obj.priority = n.priority.value_or(0);
    for (const VarDecl& d : n.decls) {
      VariableObject v;
      v.id = d.name + "." + obj.id;
      v.type = d.type;
      v.initval = d.init;
      v.actval = d.init;
      obj.declared.push_back(v.id);
      state_.internal.variables.push_back(std::move(v));
    }
    for (const PlanNode& c : n.children) obj.children.push_back(qn.child(c.name).to_string());
    state_.internal.nodes.push_back(std::move(obj));
    for (const PlanNode& c : n.children) build(c, qn, qn.to_string());
  }

  // Pass 2: defaults, references and types. Nodes are visited in the same
  // pre-order as pass 1.
  void resolve(const PlanNode& n, Scope& scope) {
    NodeObject& obj = state_.internal.nodes[cursor_++];
    std::map<std::string, std::pair<std::string, Ty>> frame;
    for (const VarDecl& d : n.decls) {
      frame[d.name] = {d.name + "." + obj.id, d.type == "int" ? Ty::Int : Ty::Bool};
    }
    scope.frames.push_back(std::move(frame));

    for (std::size_t i = 0; i < kConditionCount; ++i) {
      const Condition c = static_cast<Condition>(i);
      ExprPtr e = n.conditions[i] ? n.conditions[i] : default_condition(c, obj);
      Ty t = Ty::Any;
      obj.conditions[i] = resolve_expr(e, obj, scope, n, t);
      if (!fits(t, Ty::Bool)) {
        fail(n, std::string(clause_keyword(c)) + " condition of '" + obj.id + "' has type " +
                    std::string(ty_name(t)) + ", expected bool");
      }
    }
    if (n.command) {
      CommandCall call{n.command->name, {}};
      for (const ExprPtr& a : n.command->args) {
        Ty t = Ty::Any;
        call.args.push_back(resolve_expr(a, obj, scope, n, t));
      }
      obj.command = std::move(call);
    }
    if (n.assignment) {
      const auto* target = scope.lookup(n.assignment->target);
      if (!target) fail(n, "assignment to undeclared variable '" + n.assignment->target + "'");
      obj.assign_target = target->first;
      Ty t = Ty::Any;
      obj.assign_value = resolve_expr(n.assignment->value, obj, scope, n, t);
      if (!fits(t, target->second)) {
        fail(n, "cannot assign a " + std::string(ty_name(t)) + " value to " + std::string(ty_name(target->second)) +
                    " variable '" + n.assignment->target + "'");
      }
    }
    for (const PlanNode& c : n.children) resolve(c, scope);
    scope.frames.pop_back();
  }

  static ExprPtr default_condition(Condition c, const NodeObject& obj) {
    switch (c) {
      case Condition::Skip:
      case Condition::Repeat:
        return Expr::literal(Value::boolean(false));
      case Condition::End:
        if (obj.type == NodeType::List) return Expr::children_finished(obj.children);
        return Expr::literal(Value::boolean(true));
      default:
        return Expr::literal(Value::boolean(true));
    }
  }

  // Child-first search: at each level L starting from the node itself, look
  // at L's children, then at L, then move to L's parent.
  std::optional<std::string> find_node_ref(const NodeObject& from, const std::string& name) const {
    const NodeObject* level = &from;
    while (level) {
      for (const std::string& c : level->children) {
        if (QualifiedName::parse(c).leaf() == name) return c;
      }
      if (QualifiedName::parse(level->id).leaf() == name) return level->id;
      level = level->parent.empty() ? nullptr : state_.internal.find_node(level->parent);
    }
    return std::nullopt;
  }

  ExprPtr resolve_expr(const ExprPtr& src, const NodeObject& obj, const Scope& scope, const PlanNode& n, Ty& type) {
    auto e = std::make_shared<Expr>(*src);
    switch (e->kind) {
      case Expr::Kind::Literal:
        type = ty_of(e->value);
        break;
      case Expr::Kind::Constant:
        type = Ty::String;
        break;
      case Expr::Kind::Variable: {
        const auto* v = scope.lookup(e->name);
        if (!v) fail(n, "unresolved variable '" + e->name + "' in node '" + obj.id + "'");
        e->resolved = v->first;
        type = v->second;
        break;
      }
      case Expr::Kind::NodeState: {
        auto target = find_node_ref(obj, e->name);
        if (!target) fail(n, "reference to unknown node '" + e->name + "' in node '" + obj.id + "'");
        e->resolved = *target;
        type = Ty::String;
        break;
      }
      case Expr::Kind::Lookup:
        type = Ty::Any;
        break;
      case Expr::Kind::ChildrenFinished:
        type = Ty::Bool;
        break;
      case Expr::Kind::Unary: {
        Ty t = Ty::Any;
        e->operands[0] = resolve_expr(e->operands[0], obj, scope, n, t);
        const Ty want = e->op == Op::Not ? Ty::Bool : Ty::Int;
        if (!fits(t, want)) type_error(n, e->op, t);
        type = want;
        break;
      }
      case Expr::Kind::Binary: {
        Ty l = Ty::Any;
        Ty r = Ty::Any;
        e->operands[0] = resolve_expr(e->operands[0], obj, scope, n, l);
        e->operands[1] = resolve_expr(e->operands[1], obj, scope, n, r);
        switch (e->op) {
          case Op::And:
          case Op::Or:
            if (!fits(l, Ty::Bool)) type_error(n, e->op, l);
            if (!fits(r, Ty::Bool)) type_error(n, e->op, r);
            type = Ty::Bool;
            break;
          case Op::Eq:
          case Op::Ne:
            if (!fits(l, r)) {
              fail(n, "cannot compare " + std::string(ty_name(l)) + " with " + std::string(ty_name(r)) + " in '" +
                          to_string(*src) + "'");
            }
            type = Ty::Bool;
            break;
          case Op::Lt:
          case Op::Gt:
          case Op::Le:
          case Op::Ge:
            if (!fits(l, Ty::Int)) type_error(n, e->op, l);
            if (!fits(r, Ty::Int)) type_error(n, e->op, r);
            type = Ty::Bool;
            break;
          default:
            if (!fits(l, Ty::Int)) type_error(n, e->op, l);
            if (!fits(r, Ty::Int)) type_error(n, e->op, r);
            type = Ty::Int;
            break;
        }
        break;
      }
    }
    return e;
  }

  [[noreturn]] static void type_error(const PlanNode& n, Op op, Ty got) {
    fail(n, "operator " + std::string(to_string(op)) + " applied to a " + std::string(ty_name(got)) + " operand");
  }

  [[noreturn]] static void fail(const PlanNode& n, const std::string& msg) {
    throw CompileError(msg, n.line, n.column);
  }

  ExecutionState state_;
  std::size_t cursor_ = 0;
};

std::vector<std::string> dump_lines(const ExecutionState& s) {
  std::vector<std::string> lines;
  for (const NodeObject& n : s.internal.nodes) {
    lines.push_back(n.id + " outcome = " + std::string(to_string(n.outcome)));
    lines.push_back(n.id + " status = " + std::string(to_string(n.status)));
  }
  for (const VariableObject& v : s.internal.variables) {
    lines.push_back(v.id + " actval = " + v.actval.to_string());
    lines.push_back(v.id + " initval = " + v.initval.to_string());
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [name, value] : s.external) lines.push_back(name + " lookup = " + value.to_string());
  return lines;
}

}  // namespace

ExecutionState compile(const PlanAST& plan) { return Compiler().run(plan); }

std::string dump(const ExecutionState& state) {
  std::string out;
  for (const std::string& line : dump_lines(state)) out += line + "\n";
  return out;
}

std::string state_key(const ExecutionState& state) {
  std::string key = dump(state);
  for (const NodeObject& n : state.internal.nodes) key += n.primed ? '1' : '0';
  for (const VariableObject& v : state.internal.variables) key += v.primed ? '1' : '0';
  key += "|" + std::to_string(state.pending.size());
  return key;
}

}  // namespace syncsem::plexil
