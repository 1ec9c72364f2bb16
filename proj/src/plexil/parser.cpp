// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <charconv>
#include <set>

#include "syncsem/plexil/ast.hpp"

namespace syncsem::plexil {

namespace {

constexpr std::array<std::string_view, kConditionCount> kClauseKeywords = {"Start", "Skip", "Repeat-while", "End",
                                                                           "Pre",   "Post", "Inv"};
constexpr std::array<std::string_view, kConditionCount> kConditionNames = {"start", "skip", "repeat", "end",
                                                                           "pre",   "post", "inv"};

struct Token {
  enum class Kind { Ident, Int, String, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 0;
  int column = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Token::Kind::Ident;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          t.text += advance();
        }
        if (t.text == "Repeat" && text_.substr(pos_, 6) == "-while") {
          for (int i = 0; i < 6; ++i) t.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Token::Kind::Int;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) t.text += advance();
      } else if (c == '"') {
        t.kind = Token::Kind::String;
        advance();
        while (true) {
          if (pos_ >= text_.size() || text_[pos_] == '\n') throw PlanError("unterminated string", t.line, t.column);
          char ch = advance();
          if (ch == '"') break;
          if (ch == '\\' && pos_ < text_.size()) ch = advance();
          t.text += ch;
        }
      } else {
        t.kind = Token::Kind::Punct;
        static constexpr std::string_view kTwo[] = {":=", "==", "!=", "<=", ">="};
        for (std::string_view two : kTwo) {
          if (text_.substr(pos_, 2) == two) {
            t.text = std::string(two);
            break;
          }
        }
        if (t.text.empty()) {
          if (std::string_view("{}();:,.=<>+-*").find(c) == std::string_view::npos) {
            throw PlanError(std::string("unexpected character '") + c + "'", line_, column_);
          }
          t.text = std::string(1, c);
        }
        for (std::size_t i = 0; i < t.text.size(); ++i) advance();
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else if (text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  PlanAST plan() {
    PlanAST out{node()};
    if (peek().kind != Token::Kind::End) error("trailing input after the root node");
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  bool is_punct(const char* p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Punct && peek(ahead).text == p;
  }
  bool is_ident(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Ident && peek(ahead).text == s;
  }

  [[noreturn]] void error(const std::string& msg) const { throw PlanError(msg, peek().line, peek().column); }
  [[noreturn]] void error_at(const std::string& msg, const Token& t) const {
    throw PlanError(msg, t.line, t.column);
  }

  void expect(const char* p) {
    if (!is_punct(p)) error(std::string("expected '") + p + "'" + found());
    next();
  }

  std::string found() const {
    if (peek().kind == Token::Kind::End) return ", found end of input";
    return ", found '" + peek().text + "'";
  }

  std::string ident(const char* what) {
    if (peek().kind != Token::Kind::Ident) error(std::string("expected ") + what + found());
    return next().text;
  }

  std::int64_t integer(bool negative) {
    const Token t = next();
    if (t.kind != Token::Kind::Int) error_at("expected an integer", t);
    std::int64_t v = 0;
    const std::string digits = (negative ? "-" : "") + t.text;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) error_at("integer out of range", t);
    return v;
  }

  PlanNode node() {
    const Token type_tok = peek();
    const auto type = type_tok.kind == Token::Kind::Ident ? parse_node_type(type_tok.text) : std::nullopt;
    if (!type) error("expected a node type (List, Command, Assignment, Empty)" + found());
    next();
    PlanNode n;
    n.type = *type;
    n.line = type_tok.line;
    n.column = type_tok.column;
    n.name = ident("a node name");
    expect("{");
    std::set<std::string> child_names;
    std::set<std::string> decl_names;
    while (!is_punct("}")) {
      if (peek().kind == Token::Kind::End) error("unterminated node '" + n.name + "'");
      const Token head = peek();
      if (head.kind != Token::Kind::Ident) error("expected a declaration, clause or node" + found());
      if ((head.text == "int" || head.text == "bool") && peek(1).kind == Token::Kind::Ident) {
        VarDecl d = declaration();
        if (!decl_names.insert(d.name).second) error_at("duplicate variable '" + d.name + "'", head);
        n.decls.push_back(std::move(d));
      } else if (parse_node_type(head.text) && peek(1).kind == Token::Kind::Ident) {
        if (n.type != NodeType::List) error_at("only List nodes may contain child nodes", head);
        PlanNode child = node();
        if (!child_names.insert(child.name).second) {
          throw PlanError("duplicate sibling node name '" + child.name + "'", child.line, child.column);
        }
        n.children.push_back(std::move(child));
      } else if (is_punct(":", 1)) {
        clause(n);
      } else {
        error("expected a declaration, clause or node" + found());
      }
    }
    next();
    if (n.type == NodeType::Assignment && !n.assignment) {
      error_at("Assignment node '" + n.name + "' has no Assignment clause", type_tok);
    }
    return n;
  }

  VarDecl declaration() {
    VarDecl d;
    d.type = next().text;
    d.name = ident("a variable name");
    expect("=");
    const Token t = peek();
    if (d.type == "bool") {
      if (is_ident("true") || is_ident("false")) {
        d.init = Value::boolean(next().text == "true");
      } else if (is_ident("UNKNOWN")) {
        next();
      } else {
        error("expected a boolean initial value" + found());
      }
    } else if (is_ident("UNKNOWN")) {
      next();
    } else {
      const bool negative = is_punct("-");
      if (negative) next();
      d.init = Value::integer(integer(negative));
    }
    expect(";");
    return d;
  }

  void clause(PlanNode& n) {
    const Token kw = next();
    next();  // ':'
    for (std::size_t i = 0; i < kConditionCount; ++i) {
      if (kw.text == kClauseKeywords[i]) {
        if (n.conditions[i]) error_at("duplicate " + kw.text + " clause", kw);
        n.conditions[i] = expr();
        expect(";");
        return;
      }
    }
    if (kw.text == "Command") {
      if (n.type != NodeType::Command) error_at("Command clause in a " + std::string(to_string(n.type)) + " node", kw);
      if (n.command) error_at("duplicate Command clause", kw);
      CommandCall call;
      call.name = ident("a command name");
      expect("(");
      if (!is_punct(")")) {
        do {
          if (is_punct(",")) next();
          call.args.push_back(expr());
        } while (is_punct(","));
      }
      expect(")");
      expect(";");
      n.command = std::move(call);
    } else if (kw.text == "Assignment") {
      if (n.type != NodeType::Assignment) {
        error_at("Assignment clause in a " + std::string(to_string(n.type)) + " node", kw);
      }
      if (n.assignment) error_at("duplicate Assignment clause", kw);
      AssignmentBody body;
      body.target = ident("an assignment target");
      expect(":=");
      body.value = expr();
      expect(";");
      n.assignment = std::move(body);
    } else if (kw.text == "Priority") {
      if (n.type != NodeType::Assignment) error_at("Priority clause outside an Assignment node", kw);
      if (n.priority) error_at("duplicate Priority clause", kw);
      const std::int64_t p = integer(false);
      expect(";");
      n.priority = p;
    } else {
      error_at("unknown condition keyword '" + kw.text + "'", kw);
    }
  }

  // or := and ('OR' and)*
  ExprPtr expr() {
    ExprPtr lhs = conjunction();
    while (is_ident("OR")) {
      next();
      lhs = Expr::binary(Op::Or, lhs, conjunction());
    }
    return lhs;
  }

  ExprPtr conjunction() {
    ExprPtr lhs = negation();
    while (is_ident("AND")) {
      next();
      lhs = Expr::binary(Op::And, lhs, negation());
    }
    return lhs;
  }

  ExprPtr negation() {
    if (is_ident("NOT")) {
      next();
      return Expr::unary(Op::Not, negation());
    }
    return comparison();
  }

  ExprPtr comparison() {
    ExprPtr lhs = additive();
    static constexpr std::pair<const char*, Op> kOps[] = {{"==", Op::Eq}, {"!=", Op::Ne}, {"<=", Op::Le},
                                                          {">=", Op::Ge}, {"<", Op::Lt},  {">", Op::Gt}};
    for (const auto& [text, op] : kOps) {
      if (is_punct(text)) {
        next();
        return Expr::binary(op, lhs, additive());
      }
    }
    return lhs;
  }

  ExprPtr additive() {
    ExprPtr lhs = multiplicative();
    while (is_punct("+") || is_punct("-")) {
      const Op op = next().text == "+" ? Op::Add : Op::Sub;
      lhs = Expr::binary(op, lhs, multiplicative());
    }
    return lhs;
  }

  ExprPtr multiplicative() {
    ExprPtr lhs = unary_minus();
    while (is_punct("*")) {
      next();
      lhs = Expr::binary(Op::Mul, lhs, unary_minus());
    }
    return lhs;
  }

  ExprPtr unary_minus() {
    if (is_punct("-")) {
      next();
      if (peek().kind == Token::Kind::Int) return Expr::literal(Value::integer(integer(true)));
      return Expr::unary(Op::Neg, unary_minus());
    }
    return primary();
  }

  ExprPtr primary() {
    const Token t = peek();
    switch (t.kind) {
      case Token::Kind::Int:
        return Expr::literal(Value::integer(integer(false)));
      case Token::Kind::String:
        next();
        return Expr::literal(Value::string(t.text));
      case Token::Kind::Punct:
        if (t.text == "(") {
          next();
          ExprPtr inner = expr();
          expect(")");
          return inner;
        }
        error("expected an expression" + found());
      case Token::Kind::End:
        error("expected an expression, found end of input");
      case Token::Kind::Ident:
        break;
    }
    next();
    if (t.text == "true" || t.text == "false") return Expr::literal(Value::boolean(t.text == "true"));
    if (t.text == "UNKNOWN") return Expr::literal(Value::unknown());
    if (status_from_keyword(t.text) || outcome_from_keyword(t.text)) return Expr::constant(t.text);
    if (t.text == "LookupOnChange") {
      expect("(");
      std::string name = ident("a lookup name");
      while (is_punct(".")) {
        next();
        name += "." + ident("a lookup name");
      }
      expect(")");
      return Expr::lookup(std::move(name));
    }
    if (is_punct(".")) {
      next();
      const Token attr = next();
      if (attr.kind != Token::Kind::Ident || (attr.text != "status" && attr.text != "outcome")) {
        error_at("expected 'status' or 'outcome' after '" + t.text + ".'", attr);
      }
      return Expr::node_state(t.text, attr.text);
    }
    return Expr::variable(t.text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_node(const PlanNode& n, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
  out += pad + std::string(to_string(n.type)) + " " + n.name + " {\n";
  for (const VarDecl& d : n.decls) out += inner + d.type + " " + d.name + " = " + d.init.to_string() + ";\n";
  for (std::size_t i = 0; i < kConditionCount; ++i) {
    if (n.conditions[i]) out += inner + std::string(kClauseKeywords[i]) + ": " + to_string(*n.conditions[i]) + ";\n";
  }
  if (n.priority) out += inner + "Priority: " + std::to_string(*n.priority) + ";\n";
  if (n.command) {
    out += inner + "Command: " + n.command->name + "(";
    for (std::size_t i = 0; i < n.command->args.size(); ++i) {
      out += (i ? ", " : "") + to_string(*n.command->args[i]);
    }
    out += ");\n";
  }
  if (n.assignment) out += inner + "Assignment: " + n.assignment->target + " := " + to_string(*n.assignment->value) + ";\n";
  for (const PlanNode& c : n.children) print_node(c, depth + 1, out);
  out += pad + "}\n";
}

}  // namespace

std::string_view clause_keyword(Condition c) { return kClauseKeywords[static_cast<std::size_t>(c)]; }
std::string_view to_string(Condition c) { return kConditionNames[static_cast<std::size_t>(c)]; }

bool same_plan(const PlanNode& a, const PlanNode& b) {
  if (a.type != b.type || a.name != b.name || a.priority != b.priority || a.decls.size() != b.decls.size() ||
      a.children.size() != b.children.size() || a.command.has_value() != b.command.has_value() ||
      a.assignment.has_value() != b.assignment.has_value()) {
    return false;
  }
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    if (a.decls[i].type != b.decls[i].type || a.decls[i].name != b.decls[i].name || a.decls[i].init != b.decls[i].init) {
      return false;
    }
  }
  for (std::size_t i = 0; i < kConditionCount; ++i) {
    if (!same_expr(a.conditions[i], b.conditions[i])) return false;
  }
  if (a.command) {
    if (a.command->name != b.command->name || a.command->args.size() != b.command->args.size()) return false;
    for (std::size_t i = 0; i < a.command->args.size(); ++i) {
      if (!same_expr(a.command->args[i], b.command->args[i])) return false;
    }
  }
  if (a.assignment &&
      (a.assignment->target != b.assignment->target || !same_expr(a.assignment->value, b.assignment->value))) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!same_plan(a.children[i], b.children[i])) return false;
  }
  return true;
}

bool same_plan(const PlanAST& a, const PlanAST& b) { return same_plan(a.root, b.root); }

PlanAST parse_plan(std::string_view text) { return Parser(Lexer(text).run()).plan(); }

std::string print_plan(const PlanAST& plan) {
  std::string out;
  print_node(plan.root, 0, out);
  return out;
}

}  // namespace syncsem::plexil
