// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syncsem/random_systems.hpp"

namespace syncsem {

/// Property suites run by `syncsem check`.
enum class Suite : std::uint8_t { Soundness, Completeness, DeterminismPropagation, PlexilDifferential };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct CaseResult {
  bool passed = true;
  /// Outcome reported but not counted: completeness on a relation that is
  /// not deterministic, where completeness is not claimed.
  bool informational = false;
  std::string detail;
};

struct SuiteReport {
  Suite suite = Suite::Soundness;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t informational = 0;
  std::size_t informational_failed = 0;
  /// Pretty-printed first counterexample (lowest case index).
  std::string first_failure;

  bool ok() const noexcept { return failed == 0; }
};

struct CheckOptions {
  std::uint64_t seed = 7;
  std::size_t cases = 200;
  bool parallel = true;
  /// Directory of `.plx` plans with matching `.events` scripts.
  std::string corpus_dir;
  std::size_t micro_bound = 10000;
};

/// Serialization soundness for every subset of the universe, plus the
/// replay of each synchronous step as a sequence of asynchronous steps
/// wherever no reduct of one chosen redex meets another chosen redex.
CaseResult check_soundness(const RandomSystem& sys);

/// Serialization equals the synchronous successors for every subset.
/// Informational when the base relation is not deterministic.
CaseResult check_completeness(const RandomSystem& sys);

/// n-fold composition (n ≤ 3), normalized reduction and the synchronous
/// extension of a deterministic relation are deterministic on the universe.
CaseResult check_determinism_propagation(const RandomSystem& sys);

/// Case `index` of `suite`, drawn from the per-case seed.
CaseResult run_case(Suite suite, std::uint64_t seed, std::size_t index);

SuiteReport run_suite(Suite suite, const CheckOptions& options);

std::string format_report(const SuiteReport& report);

namespace kernels {

/// Runs cases [0, count) one after another.
std::vector<CaseResult> run_cases_serial(Suite suite, std::uint64_t seed, std::size_t count);

/// Shards cases [0, count) across OpenMP threads; same results, same order.
std::vector<CaseResult> run_cases_omp(Suite suite, std::uint64_t seed, std::size_t count);

}  // namespace kernels

}  // namespace syncsem
