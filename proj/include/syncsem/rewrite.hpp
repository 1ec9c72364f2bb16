// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "syncsem/setrel.hpp"
#include "syncsem/term.hpp"

namespace syncsem {

/// Binding of rule variables to ground terms.
using Substitution = std::map<std::string, Term>;

std::string to_string(const Substitution& sigma);

class InvalidRule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `lhs -> rhs` over pattern sets. Variables may appear only at argument
/// positions, and every variable of `rhs` must occur in `lhs`.
class RewriteRule {
 public:
  RewriteRule(std::string label, TermSet lhs, TermSet rhs);

  const std::string& label() const noexcept { return label_; }
  const TermSet& lhs() const noexcept { return lhs_; }
  const TermSet& rhs() const noexcept { return rhs_; }

  std::string to_string() const;

 private:
  std::string label_;
  TermSet lhs_;
  TermSet rhs_;
};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(std::vector<RewriteRule> rules);

  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  bool empty() const noexcept { return rules_.empty(); }

  /// Largest lhs; no redex of the induced relation is bigger than this.
  std::size_t max_lhs_size() const noexcept;

  std::string to_string() const;

 private:
  std::vector<RewriteRule> rules_;
};

/// Every σ with σ(pattern) =ACUI subject, in canonical order. Matching is
/// against the whole set: each subject element must be the image of some
/// pattern element.
std::vector<Substitution> match(const TermSet& pattern, const TermSet& subject);

/// σ applied to every element of `pattern`.
TermSet apply(const Substitution& sigma, const TermSet& pattern);
Term apply(const Substitution& sigma, const Term& pattern);

/// a -> b iff some rule l -> r and σ give a =ACUI σl and b =ACUI σr.
SetRelation relation_of(const RewriteSystem& system, Limits limits = {});

/// One rule per line: `label : lhs -> rhs`, where each side is either a
/// braced set or a bare comma-separated term list. `#` starts a comment.
RewriteSystem parse_rules(std::string_view text);

/// Single term in pattern mode (lowercase nullary arguments are variables).
Term parse_pattern_term(std::string_view text);

}  // namespace syncsem
