// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include "syncsem/term.hpp"

#include <algorithm>
#include <iterator>

#include "term_reader.hpp"

namespace syncsem {

Term Term::integer(std::int64_t v) { return Term(Kind::Int, {}, v, {}); }

Term Term::boolean(bool v) { return Term(Kind::Bool, {}, v ? 1 : 0, {}); }

Term Term::symbol(std::string head, std::vector<Term> args) {
  return Term(Kind::Symbol, std::move(head), 0, std::move(args));
}

Term Term::variable(std::string name) { return Term(Kind::Var, std::move(name), 0, {}); }

bool Term::is_ground() const noexcept {
  if (kind_ == Kind::Var) return false;
  return std::all_of(args_.begin(), args_.end(), [](const Term& a) { return a.is_ground(); });
}

std::string Term::to_string() const {
  switch (kind_) {
    case Kind::Int:
      return std::to_string(value_);
    case Kind::Bool:
      return value_ ? "true" : "false";
    case Kind::Var:
    case Kind::Symbol:
      break;
  }
  std::string out = head_;
  if (!args_.empty()) {
    out += '(';
    for (std::size_t i = 0; i < args_.size(); ++i) {
      if (i) out += ',';
      out += args_[i].to_string();
    }
    out += ')';
  }
  return out;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.value_ <=> b.value_; c != 0) return c;
  if (auto c = a.head_.compare(b.head_) <=> 0; c != 0) return c;
  const std::size_t n = std::min(a.args_.size(), b.args_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.args_[i] <=> b.args_[i]; c != 0) return c;
  }
  return a.args_.size() <=> b.args_.size();
}

TermSet::TermSet(std::initializer_list<Term> terms) : TermSet(std::vector<Term>(terms)) {}

TermSet::TermSet(std::vector<Term> terms) : elems_(std::move(terms)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool TermSet::contains(const Term& t) const {
  return std::binary_search(elems_.begin(), elems_.end(), t);
}

bool TermSet::includes(const TermSet& sub) const {
  return std::includes(elems_.begin(), elems_.end(), sub.elems_.begin(), sub.elems_.end());
}

bool TermSet::intersects(const TermSet& other) const {
  auto i = elems_.begin();
  auto j = other.elems_.begin();
  while (i != elems_.end() && j != other.elems_.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

void TermSet::insert(Term t) {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), t);
  if (it == elems_.end() || *it != t) elems_.insert(it, std::move(t));
}

TermSet TermSet::subset(std::uint64_t mask) const {
  TermSet out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (mask & (std::uint64_t{1} << i)) out.elems_.push_back(elems_[i]);
  }
  return out;
}

std::string TermSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ',';
    out += elems_[i].to_string();
  }
  out += '}';
  return out;
}

TermSet set_union(const TermSet& a, const TermSet& b) {
  TermSet out;
  out.elems_.reserve(a.size() + b.size());
  std::set_union(a.elems_.begin(), a.elems_.end(), b.elems_.begin(), b.elems_.end(),
                 std::back_inserter(out.elems_));
  return out;
}

TermSet set_difference(const TermSet& a, const TermSet& b) {
  TermSet out;
  std::set_difference(a.elems_.begin(), a.elems_.end(), b.elems_.begin(), b.elems_.end(),
                      std::back_inserter(out.elems_));
  return out;
}

Term parse_term(std::string_view text) {
  detail::TermReader reader(text, /*patterns=*/false);
  Term t = reader.term();
  reader.expect_end();
  return t;
}

TermSet parse_termset(std::string_view text) {
  detail::TermReader reader(text, /*patterns=*/false);
  TermSet s = reader.termset();
  reader.expect_end();
  return s;
}

}  // namespace syncsem
