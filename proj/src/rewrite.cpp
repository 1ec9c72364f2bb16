// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include "syncsem/rewrite.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <unordered_map>

#include "term_reader.hpp"

namespace syncsem {

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::Var) {
    out.insert(t.head());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

std::set<std::string> vars_of(const TermSet& s) {
  std::set<std::string> out;
  for (const Term& t : s) collect_vars(t, out);
  return out;
}

void collect_arities(const Term& t, std::unordered_map<std::string, std::size_t>& seen, const std::string& label) {
  if (t.kind() != Term::Kind::Symbol) return;
  auto [it, fresh] = seen.emplace(t.head(), t.arity());
  if (!fresh && it->second != t.arity()) {
    throw InvalidRule("rule '" + label + "': symbol " + t.head() + " used with arities " +
                      std::to_string(it->second) + " and " + std::to_string(t.arity()));
  }
  for (const Term& a : t.args()) collect_arities(a, seen, label);
}

bool match_term(const Term& pattern, const Term& subject, Substitution& sigma) {
  if (pattern.kind() == Term::Kind::Var) {
    auto [it, fresh] = sigma.emplace(pattern.head(), subject);
    return fresh || it->second == subject;
  }
  if (pattern.kind() != subject.kind() || pattern.head() != subject.head() || pattern.arity() != subject.arity()) {
    return false;
  }
  if (pattern.kind() != Term::Kind::Symbol) return pattern == subject;
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match_term(pattern.args()[i], subject.args()[i], sigma)) return false;
  }
  return true;
}

// Maps pattern element i onward onto subject elements; `covered` records
// which subject elements already have a preimage.
void match_from(const TermSet& pattern, const TermSet& subject, std::size_t i, std::uint64_t covered,
                const Substitution& sigma, std::set<Substitution>& out) {
  const std::size_t uncovered = subject.size() - static_cast<std::size_t>(std::popcount(covered));
  if (pattern.size() - i < uncovered) return;
  if (i == pattern.size()) {
    out.insert(sigma);
    return;
  }
  for (std::size_t j = 0; j < subject.size(); ++j) {
    Substitution extended = sigma;
    if (match_term(pattern[i], subject[j], extended)) {
      match_from(pattern, subject, i + 1, covered | (std::uint64_t{1} << j), extended, out);
    }
  }
}

}  // namespace

std::string to_string(const Substitution& sigma) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : sigma) {
    if (!first) out += ',';
    first = false;
    out += name + "->" + value.to_string();
  }
  return out + "}";
}

RewriteRule::RewriteRule(std::string label, TermSet lhs, TermSet rhs)
    : label_(std::move(label)), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  if (lhs_.empty()) throw InvalidRule("rule '" + label_ + "': empty left-hand side");
  for (const Term& t : lhs_) {
    if (t.kind() == Term::Kind::Var) throw InvalidRule("rule '" + label_ + "': set variables are not supported");
  }
  const auto lhs_vars = vars_of(lhs_);
  for (const std::string& v : vars_of(rhs_)) {
    if (!lhs_vars.contains(v)) throw InvalidRule("rule '" + label_ + "': variable " + v + " not bound by lhs");
  }
}

std::string RewriteRule::to_string() const { return label_ + " : " + lhs_.to_string() + " -> " + rhs_.to_string(); }

RewriteSystem::RewriteSystem(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {
  std::set<std::string> labels;
  std::unordered_map<std::string, std::size_t> arities;
  for (const RewriteRule& r : rules_) {
    if (!labels.insert(r.label()).second) throw InvalidRule("duplicate rule label '" + r.label() + "'");
    for (const Term& t : r.lhs()) collect_arities(t, arities, r.label());
    for (const Term& t : r.rhs()) collect_arities(t, arities, r.label());
  }
}

std::size_t RewriteSystem::max_lhs_size() const noexcept {
  std::size_t n = 0;
  for (const RewriteRule& r : rules_) n = std::max(n, r.lhs().size());
  return n;
}

std::string RewriteSystem::to_string() const {
  std::string out;
  for (const RewriteRule& r : rules_) out += r.to_string() + "\n";
  return out;
}

std::vector<Substitution> match(const TermSet& pattern, const TermSet& subject) {
  if (subject.size() > 63) throw SizeCapExceeded(subject.size(), 63);
  std::set<Substitution> found;
  if (!subject.empty() || pattern.empty()) match_from(pattern, subject, 0, 0, {}, found);
  return {found.begin(), found.end()};
}

Term apply(const Substitution& sigma, const Term& pattern) {
  switch (pattern.kind()) {
    case Term::Kind::Var: {
      auto it = sigma.find(pattern.head());
      return it == sigma.end() ? pattern : it->second;
    }
    case Term::Kind::Symbol: {
      if (pattern.arity() == 0) return pattern;
      std::vector<Term> args;
      args.reserve(pattern.arity());
      for (const Term& a : pattern.args()) args.push_back(apply(sigma, a));
      return Term::symbol(pattern.head(), std::move(args));
    }
    default:
      return pattern;
  }
}

TermSet apply(const Substitution& sigma, const TermSet& pattern) {
  std::vector<Term> out;
  out.reserve(pattern.size());
  for (const Term& t : pattern) out.push_back(apply(sigma, t));
  return TermSet(std::move(out));
}

SetRelation relation_of(const RewriteSystem& system, Limits limits) {
  auto step = [system](const TermSet& a) {
    Successors out;
    for (const RewriteRule& rule : system.rules()) {
      for (const Substitution& sigma : match(rule.lhs(), a)) out.states.insert(apply(sigma, rule.rhs()));
    }
    return out;
  };
  // A whole-set match never covers more elements than the lhs has, so only
  // subsets up to that size need to be tried.
  auto redexes = [system, step](const TermSet& u) {
    std::vector<Redex> out;
    const std::size_t max_size = system.max_lhs_size();
    const std::uint64_t count = std::uint64_t{1} << u.size();
    for (std::uint64_t mask = 1; mask < count; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) > max_size) continue;
      TermSet b = u.subset(mask);
      Successors succ = step(b);
      if (!succ.states.empty()) out.push_back({std::move(b), std::move(succ.states)});
    }
    return out;
  };
  return SetRelation("R", step, redexes, limits);
}

namespace {

TermSet read_side(detail::TermReader& reader) {
  reader.skip_ws();
  std::vector<Term> terms;
  if (reader.consume('{')) {
    if (!reader.consume('}')) {
      do {
        terms.push_back(reader.term());
      } while (reader.consume(','));
      reader.expect('}');
    }
    return TermSet(std::move(terms));
  }
  do {
    terms.push_back(reader.term());
  } while (reader.consume(','));
  return TermSet(std::move(terms));
}

}  // namespace

Term parse_pattern_term(std::string_view text) {
  detail::TermReader reader(text, /*patterns=*/true);
  Term t = reader.term();
  reader.expect_end();
  return t;
}

RewriteSystem parse_rules(std::string_view text) {
  std::vector<RewriteRule> rules;
  std::size_t line_start = 0;
  std::size_t line_no = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    ++line_no;
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::size_t offset = line_start;
    line_start = line_end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("line " + std::to_string(line_no) + ": missing ':'", offset);
    std::string label(line.substr(0, colon));
    label.erase(0, label.find_first_not_of(" \t"));
    label.erase(label.find_last_not_of(" \t") + 1);
    if (label.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty rule label", offset);

    std::string_view body = line.substr(colon + 1);
    try {
      detail::TermReader reader(body, /*patterns=*/true);
      TermSet lhs = read_side(reader);
      if (!reader.consume(std::string_view("->"))) reader.fail("expected '->'");
      TermSet rhs = read_side(reader);
      reader.expect_end();
      rules.emplace_back(std::move(label), std::move(lhs), std::move(rhs));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), offset + colon + 1 + e.position());
    }
  }
  return RewriteSystem(std::move(rules));
}

}  // namespace syncsem
