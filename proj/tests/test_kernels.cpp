// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

// Every OpenMP kernel against its serial reference.

#include <doctest.h>

#include <omp.h>

#include "oracle.hpp"
#include "plexil_fixtures.hpp"
#include "syncsem/check.hpp"
#include "syncsem/plexil/eval.hpp"
#include "syncsem/plexil/exec.hpp"
#include "syncsem/random_systems.hpp"

using namespace syncsem;

namespace {

// A flat List with n Assignment children racing on a few variables.
std::string wide_plan(std::size_t n) {
  std::string plan = "List W { int a = 0; int b = 0; int c = 0;";
  for (std::size_t i = 0; i < n; ++i) {
    const char var = "abc"[i % 3];
    plan += " Assignment N" + std::to_string(i) + " { Priority: " + std::to_string(i % 4) + "; Start: " + var +
            " >= 0; Assignment: " + var + " := " + std::to_string(i) + "; }";
  }
  return plan + " }";
}

}  // namespace

TEST_CASE("OpenMP team size") {
  int threads = 0;
#pragma omp parallel
  {
#pragma omp single
    threads = omp_get_num_threads();
  }
  MESSAGE("OpenMP threads: " << threads);
  CHECK(threads >= 1);
}

TEST_CASE("is_deterministic and reduct_counts: serial, omp and the brute-force table agree") {
  std::mt19937_64 rng(41);
  std::size_t deterministic = 0;
  for (int i = 0; i < 150; ++i) {
    const RandomSystem sys = random_system(rng);
    const SetRelation r = relation_of(sys.system);
    const bool serial = kernels::is_deterministic_serial(r, sys.universe);
    CHECK(kernels::is_deterministic_omp(r, sys.universe) == serial);
    deterministic += serial;

    const auto counts = kernels::reduct_counts_serial(r, sys.universe);
    CHECK(kernels::reduct_counts_omp(r, sys.universe) == counts);
    const auto table = oracle::base_table(sys.system, sys.universe);
    bool table_det = true;
    for (std::uint64_t mask = 0; mask < counts.size(); ++mask) {
      const std::size_t expected = oracle::lookup(table, sys.universe.subset(mask)).size();
      CHECK(counts[mask] == expected);
      table_det = table_det && expected <= 1;
    }
    CHECK(table_det == serial);
  }
  // Both outcomes must be exercised.
  CHECK(deterministic > 10);
  CHECK(deterministic < 140);
}

TEST_CASE("collect_firings: serial and omp give the same slots") {
  for (std::size_t n : {1u, 7u, 64u, 257u}) {
    plexil::ExecutionState s = fixtures::compile_text(wide_plan(n));
    for (int step = 0; step < 6; ++step) {
      const auto serial = plexil::kernels::collect_firings_serial(s, plexil::RuleTable::builtin(), {});
      const auto par = plexil::kernels::collect_firings_omp(s, plexil::RuleTable::builtin());
      REQUIRE(serial.size() == par.size());
      for (std::size_t i = 0; i < serial.size(); ++i) {
        REQUIRE(serial[i].has_value() == par[i].has_value());
        if (serial[i]) {
          CHECK(serial[i]->label == par[i]->label);
          CHECK(serial[i]->updates == par[i]->updates);
        }
      }
      s = plexil::micro(s).first;
    }
  }
}

TEST_CASE("collect_firings rejects malformed scan orders") {
  const plexil::ExecutionState s = fixtures::compile_text(wide_plan(3));
  const auto& t = plexil::RuleTable::builtin();
  CHECK_THROWS_AS(plexil::kernels::collect_firings_serial(s, t, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(plexil::kernels::collect_firings_serial(s, t, {0, 1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(plexil::kernels::collect_firings_serial(s, t, {0, 1, 2, 9}), std::invalid_argument);
  CHECK_NOTHROW(plexil::kernels::collect_firings_serial(s, t, {3, 2, 1, 0}));
}

TEST_CASE("collect_firings_omp propagates evaluation errors") {
  plexil::ExecutionState s = fixtures::compile_text(
      "List R { int x = 9223372036854775807; Assignment A { Assignment: x := x + 1; } }");
  for (auto& n : s.internal.nodes) n.status = plexil::Status::Executing;
  CHECK_THROWS_AS(plexil::kernels::collect_firings_omp(s, plexil::RuleTable::builtin()), plexil::EvalError);
  CHECK_THROWS_AS(plexil::kernels::collect_firings_serial(s, plexil::RuleTable::builtin(), {}), plexil::EvalError);
}

TEST_CASE("run_cases: sharded results equal the serial run, case by case") {
  for (Suite suite : {Suite::Soundness, Suite::Completeness, Suite::DeterminismPropagation}) {
    const auto serial = kernels::run_cases_serial(suite, 7, 60);
    const auto par = kernels::run_cases_omp(suite, 7, 60);
    REQUIRE(serial.size() == 60);
    REQUIRE(par.size() == 60);
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].passed == par[i].passed);
      CHECK(serial[i].informational == par[i].informational);
      CHECK(serial[i].detail == par[i].detail);
    }
  }
}
