// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "syncsem/term.hpp"

namespace syncsem::detail {

// Recursive-descent reader shared by the term, term-set and rule parsers.
// In pattern mode a nullary identifier starting with a lowercase letter in
// argument position is read as a rule variable.
class TermReader {
 public:
  TermReader(std::string_view text, bool patterns) : text_(text), patterns_(patterns) {}

  Term term() { return term_at(/*depth=*/0); }

  TermSet termset() {
    skip_ws();
    expect('{');
    std::vector<Term> elems;
    skip_ws();
    if (!consume('}')) {
      do {
        elems.push_back(term());
        skip_ws();
      } while (consume(','));
      expect('}');
    }
    return TermSet(std::move(elems));
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool consume(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::size_t position() const noexcept { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

 private:
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  Term term_at(int depth) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return integer();
    if (!ident_start(c)) fail(std::string("unexpected character '") + c + "'");
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (consume('(')) {
      std::vector<Term> args;
      do {
        args.push_back(term_at(depth + 1));
      } while (consume(','));
      expect(')');
      return Term::symbol(std::move(name), std::move(args));
    }
    if (name == "true") return Term::boolean(true);
    if (name == "false") return Term::boolean(false);
    if (patterns_ && depth > 0 && std::islower(static_cast<unsigned char>(name[0]))) {
      return Term::variable(std::move(name));
    }
    return Term::symbol(std::move(name));
  }

  Term integer() {
    std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed integer");
    }
    return Term::integer(v);
  }

  std::string_view text_;
  bool patterns_;
  std::size_t pos_ = 0;
};

}  // namespace syncsem::detail
