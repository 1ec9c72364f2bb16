// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference semantics used only by the tests. Everything here is
// computed straight from the set-relation definitions by enumeration over an
// explicit finite universe; nothing calls into the engine's matcher,
// combinators or strategy code, so agreement between the two is evidence.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "syncsem/rewrite.hpp"
#include "syncsem/term.hpp"

namespace oracle {

using syncsem::Term;
using syncsem::TermSet;
using Family = std::set<TermSet>;
using Table = std::map<TermSet, Family>;

inline std::vector<TermSet> power_set(const TermSet& u) {
  std::vector<TermSet> out;
  const std::size_t n = u.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Term> elems;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) elems.push_back(u[i]);
    }
    out.emplace_back(std::move(elems));
  }
  return out;
}

inline TermSet unite(const TermSet& a, const TermSet& b) {
  std::vector<Term> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return TermSet(std::move(all));
}

inline TermSet minus(const TermSet& a, const TermSet& b) {
  std::vector<Term> keep;
  for (const Term& t : a) {
    if (!b.contains(t)) keep.push_back(t);
  }
  return TermSet(std::move(keep));
}

inline bool disjoint(const TermSet& a, const TermSet& b) {
  for (const Term& t : a) {
    if (b.contains(t)) return false;
  }
  return true;
}

inline void collect_args(const Term& t, std::set<Term>& out) {
  for (const Term& a : t.args()) {
    out.insert(a);
    collect_args(a, out);
  }
}

inline void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::Var) out.insert(t.head());
  for (const Term& a : t.args()) collect_vars(a, out);
}

inline Term substitute(const Term& t, const std::map<std::string, Term>& sigma) {
  if (t.kind() == Term::Kind::Var) return sigma.at(t.head());
  if (t.kind() != Term::Kind::Symbol || t.arity() == 0) return t;
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(substitute(a, sigma));
  return Term::symbol(t.head(), std::move(args));
}

inline TermSet substitute(const TermSet& s, const std::map<std::string, Term>& sigma) {
  std::vector<Term> out;
  for (const Term& t : s) out.push_back(substitute(t, sigma));
  return TermSet(std::move(out));
}

/// Base relation of a rule system restricted to sources in P(universe):
/// every σ over the universe's argument subterms is tried, and a → σr is
/// recorded whenever σl equals a.
inline Table base_table(const syncsem::RewriteSystem& sys, const TermSet& universe) {
  std::set<Term> domain_set;
  for (const Term& t : universe) collect_args(t, domain_set);
  const std::vector<Term> domain(domain_set.begin(), domain_set.end());

  Table table;
  for (const TermSet& a : power_set(universe)) table[a];
  for (const auto& rule : sys.rules()) {
    std::set<std::string> var_set;
    for (const Term& t : rule.lhs()) collect_vars(t, var_set);
    const std::vector<std::string> vars(var_set.begin(), var_set.end());
    std::vector<std::size_t> pick(vars.size(), 0);
    if (!vars.empty() && domain.empty()) continue;
    while (true) {
      std::map<std::string, Term> sigma;
      for (std::size_t i = 0; i < vars.size(); ++i) sigma.emplace(vars[i], domain[pick[i]]);
      const TermSet lhs = substitute(rule.lhs(), sigma);
      if (auto it = table.find(lhs); it != table.end()) it->second.insert(substitute(rule.rhs(), sigma));
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == domain.size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  return table;
}

inline Family lookup(const Table& t, const TermSet& a) {
  auto it = t.find(a);
  return it == t.end() ? Family{} : it->second;
}

inline Family async_step(const Table& base, const TermSet& a) {
  Family out;
  for (const TermSet& b : power_set(a)) {
    if (b.empty()) continue;
    for (const TermSet& b2 : lookup(base, b)) out.insert(unite(minus(a, b), b2));
  }
  return out;
}

// Families of nonempty, pairwise-disjoint subsets of `rest`: the smallest
// remaining element is either left alone or opens a new block.
inline void disjoint_families(const TermSet& rest, std::vector<TermSet>& current,
                              std::vector<std::vector<TermSet>>& out) {
  if (rest.empty()) {
    out.push_back(current);
    return;
  }
  const Term first = rest[0];
  const TermSet tail = minus(rest, TermSet{first});
  disjoint_families(tail, current, out);
  for (const TermSet& extra : power_set(tail)) {
    TermSet block = unite(TermSet{first}, extra);
    current.push_back(block);
    disjoint_families(minus(tail, extra), current, out);
    current.pop_back();
  }
}

inline Family fire(const Table& base, const TermSet& a, const std::vector<TermSet>& blocks) {
  Family partial;
  TermSet fired;
  for (const TermSet& b : blocks) fired = unite(fired, b);
  partial.insert(minus(a, fired));
  for (const TermSet& b : blocks) {
    Family next;
    for (const TermSet& base_set : partial) {
      for (const TermSet& r : lookup(base, b)) next.insert(unite(base_set, r));
    }
    partial = std::move(next);
  }
  return partial;
}

inline Family parallel_step(const Table& base, const TermSet& a) {
  std::vector<std::vector<TermSet>> families;
  std::vector<TermSet> current;
  disjoint_families(a, current, families);
  Family out;
  for (const auto& fam : families) {
    if (fam.empty()) continue;
    bool all_redexes = true;
    for (const TermSet& b : fam) all_redexes = all_redexes && !lookup(base, b).empty();
    if (!all_redexes) continue;
    Family r = fire(base, a, fam);
    out.insert(r.begin(), r.end());
  }
  return out;
}

using Priority = std::function<std::uint64_t(const TermSet&)>;

/// The maximal-redex definition, verbatim: b is a redex and p(b) > p(c) for
/// every other nonempty redex c ⊆ a with c ∩ b ≠ ∅.
inline std::vector<TermSet> maximal_redexes(const Table& base, const TermSet& a, const Priority& p) {
  std::vector<TermSet> subs;
  for (const TermSet& s : power_set(a)) {
    if (!s.empty() && !lookup(base, s).empty()) subs.push_back(s);
  }
  std::vector<TermSet> out;
  for (const TermSet& b : subs) {
    bool ok = true;
    for (const TermSet& c : subs) {
      if (c != b && !disjoint(b, c) && !(p(b) > p(c))) ok = false;
    }
    if (ok) out.push_back(b);
  }
  return out;
}

inline Family sync_step(const Table& base, const TermSet& a, const Priority& p) {
  const std::vector<TermSet> blocks = maximal_redexes(base, a, p);
  if (blocks.empty()) return {};
  return fire(base, a, blocks);
}

/// Endpoints of all chains of exactly n steps of `step` from a.
template <typename Step>
Family chains(const Step& step, const TermSet& a, std::size_t n) {
  Family frontier{a};
  for (std::size_t i = 0; i < n; ++i) {
    Family next;
    for (const TermSet& x : frontier) {
      Family s = step(x);
      next.insert(s.begin(), s.end());
    }
    frontier = std::move(next);
  }
  return frontier;
}

}  // namespace oracle
