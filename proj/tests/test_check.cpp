// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "syncsem/check.hpp"

using namespace syncsem;

TEST_CASE("suite names round-trip") {
  for (Suite s : {Suite::Soundness, Suite::Completeness, Suite::DeterminismPropagation, Suite::PlexilDifferential}) {
    CHECK(parse_suite(suite_name(s)) == s);
  }
  CHECK_FALSE(parse_suite("confluence").has_value());
}

TEST_CASE("cases are reproducible from the seed and independent of order") {
  const CaseResult a = run_case(Suite::Completeness, 7, 13);
  const CaseResult b = run_case(Suite::Completeness, 7, 13);
  CHECK(a.passed == b.passed);
  CHECK(a.detail == b.detail);
  CHECK(case_seed(7, 13) != case_seed(7, 14));
  CHECK(case_seed(7, 13) != case_seed(8, 13));
}

TEST_CASE("small suites pass and report counts") {
  CheckOptions opts;
  opts.cases = 30;
  for (Suite s : {Suite::Soundness, Suite::Completeness, Suite::DeterminismPropagation}) {
    const SuiteReport r = run_suite(s, opts);
    CHECK(r.cases == 30);
    CHECK(r.ok());
    CHECK(r.passed + r.failed + r.informational == r.cases);
    CHECK(format_report(r).starts_with(std::string(suite_name(s)) + ": 30 cases, "));
  }
  opts.corpus_dir = SYNCSEM_CORPUS_DIR;
  const SuiteReport d = run_suite(Suite::PlexilDifferential, opts);
  CHECK(d.cases == 5);
  CHECK(d.ok());
}

TEST_CASE("completeness marks nondeterministic systems informational") {
  CheckOptions opts;
  opts.cases = 100;
  const SuiteReport r = run_suite(Suite::Completeness, opts);
  CHECK(r.informational > 0);
  CHECK(r.passed > 0);
  CHECK(format_report(r).find("informational") != std::string::npos);
}

TEST_CASE("a failing case is reported with its counterexample") {
  std::mt19937_64 rng(5);
  RandomSystem sys = random_deterministic_system(rng);
  CHECK(check_soundness(sys).passed);
  CHECK(check_completeness(sys).passed);
  CHECK(check_determinism_propagation(sys).passed);
  SuiteReport bad;
  bad.cases = 1;
  bad.failed = 1;
  bad.first_failure = "rule system:\n...";
  CHECK_FALSE(bad.ok());
  CHECK(format_report(bad).find("first counterexample:\nrule system:") != std::string::npos);
}

TEST_CASE("missing corpus directory is an error") {
  CheckOptions opts;
  opts.corpus_dir = "/nonexistent/corpus";
  CHECK_THROWS(run_suite(Suite::PlexilDifferential, opts));
}
