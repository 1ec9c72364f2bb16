// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "syncsem/term.hpp"

using namespace syncsem;

namespace {

Term random_term(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 2 ? 2 : 4);
  switch (pick(rng)) {
    case 0:
      return Term::integer(std::uniform_int_distribution<int>(-3, 3)(rng));
    case 1:
      return Term::boolean(rng() & 1);
    case 2:
      return Term::symbol(std::string(1, static_cast<char>('A' + rng() % 3)));
    default: {
      std::vector<Term> args;
      const int n = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < n; ++i) args.push_back(random_term(rng, depth + 1));
      return Term::symbol(rng() & 1 ? "F" : "G", std::move(args));
    }
  }
}

TermSet random_set(std::mt19937& rng) {
  std::vector<Term> elems;
  const int n = static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i) elems.push_back(random_term(rng, 0));
  return TermSet(std::move(elems));
}

}  // namespace

TEST_CASE("termset_equal is ACUI equality") {
  CHECK(termset_equal(parse_termset("{A(0),A(1)}"), parse_termset("{A(1),A(0)}")));
  CHECK(termset_equal(parse_termset("{A(0),A(0)}"), parse_termset("{A(0)}")));
  CHECK_FALSE(termset_equal(parse_termset("{A(0)}"), parse_termset("{B(0)}")));
  CHECK(termset_equal(parse_termset("{}"), TermSet{}));
}

TEST_CASE("parse_term") {
  const Term a = parse_term("A(0)");
  CHECK(a.kind() == Term::Kind::Symbol);
  CHECK(a.head() == "A");
  REQUIRE(a.arity() == 1);
  CHECK(a.args()[0] == Term::integer(0));

  const Term pair = parse_term("Pair(A(1),true)");
  REQUIRE(pair.arity() == 2);
  CHECK(pair.args()[0] == parse_term("A(1)"));
  CHECK(pair.args()[1] == Term::boolean(true));
  CHECK(parse_term(" Pair( A(-1) , false ) ").to_string() == "Pair(A(-1),false)");

  CHECK_THROWS_AS(parse_term("A("), ParseError);
  CHECK_THROWS_AS(parse_term("A(0) B"), ParseError);
  CHECK_THROWS_AS(parse_term(""), ParseError);
  try {
    parse_term("A(0,)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("terms print and reparse to themselves") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Term t = random_term(rng, 0);
    CHECK(parse_term(t.to_string()) == t);
    const TermSet s = random_set(rng);
    CHECK(parse_termset(s.to_string()) == s);
  }
}

TEST_CASE("union satisfies the ACUI laws") {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    const TermSet a = random_set(rng), b = random_set(rng), c = random_set(rng);
    CHECK(termset_equal(set_union(set_union(a, b), c), set_union(a, set_union(b, c))));
    CHECK(termset_equal(set_union(a, b), set_union(b, a)));
    CHECK(termset_equal(set_union(a, TermSet{}), a));
    CHECK(termset_equal(set_union(a, a), a));
    CHECK(set_difference(set_union(a, b), b).includes(set_difference(a, b)));
  }
}

TEST_CASE("subset masks select by position") {
  const TermSet u = parse_termset("{A(0),A(1),B(1)}");
  CHECK(u.subset(0) == TermSet{});
  CHECK(u.subset(0b101) == parse_termset("{A(0),B(1)}"));
  CHECK(u.intersects(parse_termset("{B(1),C}")));
  CHECK_FALSE(u.intersects(parse_termset("{C}")));
}
