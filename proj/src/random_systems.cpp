// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include "syncsem/random_systems.hpp"

#include <algorithm>
#include <set>

namespace syncsem {

namespace {

constexpr const char* kSymbols[] = {"A", "B", "C"};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Term pattern_term(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  const std::string sym = kSymbols[draw(rng, 0, 2)];
  // Arguments: a variable from `vars` or a constant.
  const std::size_t choice = draw(rng, 0, vars.size() + 1);
  Term arg = choice < vars.size() ? Term::variable(vars[choice]) : Term::integer(static_cast<int>(choice - vars.size()));
  return Term::symbol(sym, {std::move(arg)});
}

void vars_in(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::Var) out.insert(t.head());
  for (const Term& a : t.args()) vars_in(a, out);
}

}  // namespace

PriorityFn RandomSystem::priority_fn() const {
  switch (priority) {
    case PriorityKind::Cardinality:
      return [](const TermSet& b) { return static_cast<std::uint64_t>(b.size()); };
    case PriorityKind::Hashed:
      return [](const TermSet& b) { return fnv1a(b.to_string()) % 4; };
    case PriorityKind::Uniform:
      break;
  }
  return uniform_priority();
}

std::string RandomSystem::describe() const {
  static constexpr const char* kNames[] = {"uniform", "cardinality", "hashed"};
  std::string out = "universe " + universe.to_string() + ", priority " + kNames[static_cast<int>(priority)] + "\n";
  out += system.to_string();
  return out;
}

RandomSystem random_system(std::mt19937_64& rng, const GeneratorConfig& config) {
  std::vector<Term> all;
  for (const char* s : kSymbols) {
    for (int v = 0; v < 2; ++v) all.push_back(Term::symbol(s, {Term::integer(v)}));
  }

  std::vector<RewriteRule> rules;
  const std::size_t rule_count = draw(rng, 1, std::max<std::size_t>(1, config.max_rules));
  // Rules only mention A, B, C over 0 and 1, so every reduct of a subset of
  // this universe is again a subset of it.
  const std::vector<std::string> lhs_vars = {"x", "y"};
  for (std::size_t i = 0; i < rule_count; ++i) {
    std::vector<Term> lhs;
    for (std::size_t k = 0, n = draw(rng, 1, config.max_lhs); k < n; ++k) lhs.push_back(pattern_term(rng, lhs_vars));
    std::set<std::string> bound;
    for (const Term& t : lhs) vars_in(t, bound);
    const std::vector<std::string> rhs_vars(bound.begin(), bound.end());
    std::vector<Term> rhs;
    for (std::size_t k = 0, n = draw(rng, 0, config.max_rhs); k < n; ++k) rhs.push_back(pattern_term(rng, rhs_vars));
    rules.emplace_back("r" + std::to_string(i), TermSet(std::move(lhs)), TermSet(std::move(rhs)));
  }

  RandomSystem out{RewriteSystem(std::move(rules)), TermSet(std::move(all)), PriorityKind::Uniform};
  out.priority = static_cast<PriorityKind>(draw(rng, 0, 2));
  return out;
}

RandomSystem random_deterministic_system(std::mt19937_64& rng, const GeneratorConfig& config, std::size_t* rejected) {
  std::size_t misses = 0;
  while (true) {
    RandomSystem candidate = random_system(rng, config);
    if (is_deterministic(relation_of(candidate.system), candidate.universe)) {
      if (rejected) *rejected = misses;
      return candidate;
    }
    ++misses;
  }
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over (seed, index)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace syncsem
