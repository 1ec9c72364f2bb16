// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "syncsem/rewrite.hpp"
#include "syncsem/setrel.hpp"

namespace syncsem {

enum class PriorityKind : std::uint8_t { Uniform, Cardinality, Hashed };

/// A small rule system over the unary symbols A, B, C with arguments 0 and 1,
/// the universe its properties are checked on, and a priority function. The
/// universe holds all six ground terms, so it is closed under the rules.
struct RandomSystem {
  RewriteSystem system;
  TermSet universe;
  PriorityKind priority = PriorityKind::Uniform;

  PriorityFn priority_fn() const;
  std::string describe() const;
};

struct GeneratorConfig {
  std::size_t max_rules = 4;
  std::size_t max_lhs = 2;
  std::size_t max_rhs = 2;
};

RandomSystem random_system(std::mt19937_64& rng, const GeneratorConfig& config = {});

/// Draws until `is_deterministic` holds on the universe. `rejected`, when
/// given, receives the number of discarded draws.
RandomSystem random_deterministic_system(std::mt19937_64& rng, const GeneratorConfig& config = {},
                                         std::size_t* rejected = nullptr);

/// Per-case seed for case `index` of a suite seeded with `seed`, so cases
/// can be generated independently and in any order.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace syncsem
