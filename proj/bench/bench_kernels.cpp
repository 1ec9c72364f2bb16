// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference against the OpenMP version of each kernel.

#include <benchmark/benchmark.h>

#include "syncsem/check.hpp"
#include "syncsem/plexil/ast.hpp"
#include "syncsem/plexil/exec.hpp"
#include "syncsem/rewrite.hpp"

using namespace syncsem;

namespace {

// Universe of 2n ground terms under a relation with unary and binary redexes.
struct Sweep {
  SetRelation relation;
  TermSet universe;
};

Sweep sweep(std::size_t n) {
  std::string set = "{";
  for (std::size_t i = 0; i < n; ++i) set += (i ? "," : "") + std::string("A(") + std::to_string(i) + "),B(" + std::to_string(i) + ")";
  const RewriteSystem sys = parse_rules("ab : A(x) -> B(x)\npair : A(x), B(x) -> C(x)");
  return {relation_of(sys), parse_termset(set + "}")};
}

plexil::ExecutionState wide(std::size_t n) {
  std::string plan = "List W { int a = 0; int b = 0;";
  for (std::size_t i = 0; i < n; ++i) {
    const char var = i % 2 ? 'a' : 'b';
    plan += " Assignment N" + std::to_string(i) + " { Priority: " + std::to_string(i % 3) + "; Start: (" + var +
            " + " + std::to_string(i) + ") * 2 >= " + var + "; Assignment: " + var + " := " + std::to_string(i) +
            "; }";
  }
  plexil::ExecutionState s = plexil::compile(plexil::parse_plan(plan + " }"));
  for (auto& node : s.internal.nodes) node.status = plexil::Status::Waiting;
  return s;
}

void BM_IsDeterministicSerial(benchmark::State& st) {
  const Sweep s = sweep(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::is_deterministic_serial(s.relation, s.universe));
}

void BM_IsDeterministicOmp(benchmark::State& st) {
  const Sweep s = sweep(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::is_deterministic_omp(s.relation, s.universe));
}

void BM_ReductCountsSerial(benchmark::State& st) {
  const Sweep s = sweep(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::reduct_counts_serial(s.relation, s.universe));
}

void BM_ReductCountsOmp(benchmark::State& st) {
  const Sweep s = sweep(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::reduct_counts_omp(s.relation, s.universe));
}

void BM_CollectFiringsSerial(benchmark::State& st) {
  const auto s = wide(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    benchmark::DoNotOptimize(plexil::kernels::collect_firings_serial(s, plexil::RuleTable::builtin(), {}));
  }
}

void BM_CollectFiringsOmp(benchmark::State& st) {
  const auto s = wide(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(plexil::kernels::collect_firings_omp(s, plexil::RuleTable::builtin()));
}

void BM_RunCasesSerial(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        kernels::run_cases_serial(Suite::Soundness, 7, static_cast<std::size_t>(st.range(0))));
  }
}

void BM_RunCasesOmp(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernels::run_cases_omp(Suite::Soundness, 7, static_cast<std::size_t>(st.range(0))));
  }
}

}  // namespace

BENCHMARK(BM_IsDeterministicSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsDeterministicOmp)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ReductCountsSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReductCountsOmp)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CollectFiringsSerial)->Arg(64)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CollectFiringsOmp)->Arg(64)->Arg(1024)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_RunCasesSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunCasesOmp)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
