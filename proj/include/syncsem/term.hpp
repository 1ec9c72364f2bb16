// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace syncsem {

/// Raised by the term / term-set / rule readers. `position()` is a 0-based
/// byte offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A first-order term. Leaves are integer and boolean literals, nullary
/// symbols, or (inside rule patterns only) variables.
class Term {
 public:
  enum class Kind : std::uint8_t { Int, Bool, Symbol, Var };

  static Term integer(std::int64_t v);
  static Term boolean(bool v);
  static Term symbol(std::string head, std::vector<Term> args = {});
  static Term variable(std::string name);

  Kind kind() const noexcept { return kind_; }
  const std::string& head() const noexcept { return head_; }
  std::span<const Term> args() const noexcept { return args_; }
  std::size_t arity() const noexcept { return args_.size(); }
  std::int64_t int_value() const noexcept { return value_; }
  bool bool_value() const noexcept { return value_ != 0; }

  bool is_ground() const noexcept;
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
  friend bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

 private:
  Term(Kind kind, std::string head, std::int64_t value, std::vector<Term> args)
      : kind_(kind), head_(std::move(head)), value_(value), args_(std::move(args)) {}

  Kind kind_;
  std::string head_;
  std::int64_t value_ = 0;
  std::vector<Term> args_;
};

/// Finite set of terms. Stored sorted and duplicate-free, so structural
/// equality of the storage is equality modulo ACUI.
class TermSet {
 public:
  TermSet() = default;
  TermSet(std::initializer_list<Term> terms);
  explicit TermSet(std::vector<Term> terms);

  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }
  const Term& operator[](std::size_t i) const { return elems_[i]; }
  std::span<const Term> elements() const noexcept { return elems_; }

  bool contains(const Term& t) const;
  bool includes(const TermSet& sub) const;
  bool intersects(const TermSet& other) const;

  void insert(Term t);

  /// Sub-family selected by the low `size()` bits of `mask`.
  TermSet subset(std::uint64_t mask) const;

  std::string to_string() const;

  friend TermSet set_union(const TermSet& a, const TermSet& b);
  friend TermSet set_difference(const TermSet& a, const TermSet& b);

  friend auto operator<=>(const TermSet&, const TermSet&) = default;
  friend bool operator==(const TermSet&, const TermSet&) = default;

 private:
  std::vector<Term> elems_;
};

/// Equality modulo associativity, commutativity, identity and idempotence.
inline bool termset_equal(const TermSet& a, const TermSet& b) { return a == b; }

/// `term := IDENT | IDENT '(' term (',' term)* ')' | INT | 'true' | 'false'`.
/// Identifiers are read as symbols; see `parse_pattern_term` for patterns.
Term parse_term(std::string_view text);

/// `{ term, ... }`; `{}` is the empty set.
TermSet parse_termset(std::string_view text);

}  // namespace syncsem
