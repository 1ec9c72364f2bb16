// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include "syncsem/check.hpp"

#include <exception>
#include <mutex>
#include <sstream>

#include <omp.h>

#include "syncsem/plexil/bridge.hpp"

namespace syncsem {

namespace {

constexpr std::size_t kNormalizeBound = 16;

std::vector<TermSet> power_set(const TermSet& u) {
  std::vector<TermSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u.size()); ++mask) out.push_back(u.subset(mask));
  return out;
}

CaseResult failure(const RandomSystem& sys, const TermSet& input, const std::string& what,
                   const std::string& expected, const std::string& got) {
  CaseResult r;
  r.passed = false;
  std::ostringstream os;
  os << "rule system:\n" << sys.describe() << "input: " << input.to_string() << "\n" << what << "\n"
     << "  expected: " << expected << "\n"
     << "  got:      " << got << "\n";
  r.detail = os.str();
  return r;
}

bool reducts_collide(const SetRelation& r, const std::vector<TermSet>& chosen) {
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    for (const TermSet& reduct : r.step(chosen[i]).states) {
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        if (j != i && reduct.intersects(chosen[j])) return true;
      }
    }
  }
  return false;
}

std::string family_of(const std::vector<TermSet>& sets) {
  return to_string(Family(sets.begin(), sets.end()));
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "soundness") return Suite::Soundness;
  if (name == "completeness") return Suite::Completeness;
  if (name == "determinism-propagation") return Suite::DeterminismPropagation;
  if (name == "plexil-differential") return Suite::PlexilDifferential;
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::Soundness:
      return "soundness";
    case Suite::Completeness:
      return "completeness";
    case Suite::DeterminismPropagation:
      return "determinism-propagation";
    case Suite::PlexilDifferential:
      return "plexil-differential";
  }
  return "?";
}

CaseResult check_soundness(const RandomSystem& sys) {
  const SetRelation r = relation_of(sys.system);
  const Strategy s = max_redexes(r, sys.priority_fn());
  const SetRelation sync = sync_ext(r, s);
  const SetRelation async = async_ext(r);
  for (const TermSet& a : power_set(sys.universe)) {
    const std::vector<TermSet> chosen = s(a);
    if (std::string bad = Strategy::check(r, a, chosen); !bad.empty()) {
      return failure(sys, a, "max_redexes produced an ill-formed strategy", "well-formed", bad);
    }
    const Family successors = sync.step(a).states;
    const Family serialized = serialize(r, s, a);
    if (chosen.empty()) {
      if (serialized != Family{a} || !successors.empty()) {
        return failure(sys, a, "empty strategy: serialization returns the input, no synchronous step",
                       to_string(Family{a}) + " / {}", to_string(serialized) + " / " + to_string(successors));
      }
      continue;
    }
    if (serialized.empty()) return failure(sys, a, "serialization returned nothing", "a result", "{}");
    for (const TermSet& b : serialized) {
      if (!successors.contains(b)) {
        return failure(sys, a, "serialization result is not a synchronous successor",
                       "one of " + to_string(successors), b.to_string());
      }
    }
    // Replay by asynchronous steps is only guaranteed when no reduct of one
    // chosen redex meets another: otherwise union can merge a produced term
    // into a redex that is still waiting and the next step consumes it.
    if (reducts_collide(r, chosen)) continue;
    const Family replay = reachable(async, a, chosen.size()).states;
    for (const TermSet& b : successors) {
      if (!replay.contains(b)) {
        return failure(sys, a, "synchronous step not replayable by asynchronous steps",
                       b.to_string() + " within " + std::to_string(chosen.size()) + " steps", to_string(replay));
      }
    }
  }
  return {};
}

CaseResult check_completeness(const RandomSystem& sys) {
  const SetRelation r = relation_of(sys.system);
  const Strategy s = max_redexes(r, sys.priority_fn());
  const SetRelation sync = sync_ext(r, s);
  const bool deterministic = is_deterministic(r, sys.universe);
  CaseResult result;
  for (const TermSet& a : power_set(sys.universe)) {
    const std::vector<TermSet> chosen = s(a);
    const Family serialized = serialize(r, s, a);
    const Family successors = sync.step(a).states;
    const Family expected = chosen.empty() ? Family{a} : successors;
    if (serialized != expected) {
      result = failure(sys, a, "serialization differs from the synchronous successors (strategy " +
                                   family_of(chosen) + ")",
                       to_string(expected), to_string(serialized));
      break;
    }
  }
  result.informational = !deterministic;
  return result;
}

CaseResult check_determinism_propagation(const RandomSystem& sys) {
  const SetRelation r = relation_of(sys.system);
  if (!is_deterministic(r, sys.universe)) {
    return failure(sys, {}, "precondition: base relation deterministic", "deterministic", "not deterministic");
  }
  std::vector<SetRelation> derived;
  for (std::size_t n = 0; n <= 3; ++n) derived.push_back(nfold(r, n));
  derived.push_back(normalized(r, kNormalizeBound));
  derived.push_back(sync_ext(r, max_redexes(r, sys.priority_fn())));
  for (const SetRelation& d : derived) {
    const std::vector<std::size_t> counts = kernels::reduct_counts_serial(d, sys.universe);
    for (std::size_t mask = 0; mask < counts.size(); ++mask) {
      if (counts[mask] > 1) {
        const TermSet a = sys.universe.subset(mask);
        return failure(sys, a, d.name() + " is not deterministic", "at most one successor",
                       to_string(d.step(a).states));
      }
    }
  }
  return {};
}

CaseResult run_case(Suite suite, std::uint64_t seed, std::size_t index) {
  std::mt19937_64 rng(case_seed(seed, index));
  switch (suite) {
    case Suite::Soundness:
      return check_soundness(random_system(rng));
    case Suite::Completeness:
      return check_completeness(random_system(rng));
    case Suite::DeterminismPropagation:
      return check_determinism_propagation(random_deterministic_system(rng));
    case Suite::PlexilDifferential:
      break;
  }
  throw std::invalid_argument("suite has no generated cases");
}

namespace kernels {

std::vector<CaseResult> run_cases_serial(Suite suite, std::uint64_t seed, std::size_t count) {
  std::vector<CaseResult> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(run_case(suite, seed, i));
  return out;
}

std::vector<CaseResult> run_cases_omp(Suite suite, std::uint64_t seed, std::size_t count) {
  std::vector<CaseResult> out(count);
  std::exception_ptr error;
  std::mutex error_mu;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = run_case(suite, seed, static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace kernels

SuiteReport run_suite(Suite suite, const CheckOptions& options) {
  std::vector<CaseResult> results;
  if (suite == Suite::PlexilDifferential) {
    results = plexil::differential_corpus_check(options.corpus_dir, options.micro_bound);
  } else if (options.parallel) {
    results = kernels::run_cases_omp(suite, options.seed, options.cases);
  } else {
    results = kernels::run_cases_serial(suite, options.seed, options.cases);
  }
  SuiteReport report;
  report.suite = suite;
  report.cases = results.size();
  for (const CaseResult& c : results) {
    if (c.informational) {
      ++report.informational;
      if (!c.passed) ++report.informational_failed;
      continue;
    }
    if (c.passed) {
      ++report.passed;
    } else {
      if (report.failed == 0) report.first_failure = c.detail;
      ++report.failed;
    }
  }
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream os;
  os << suite_name(report.suite) << ": " << report.cases << " cases, " << report.passed << " passed, "
     << report.failed << " failed";
  if (report.informational > 0) {
    os << ", " << report.informational << " informational (" << report.informational_failed
       << " differ; not deterministic, completeness not claimed)";
  }
  os << "\n";
  if (!report.ok()) os << "first counterexample:\n" << report.first_failure;
  return os.str();
}

}  // namespace syncsem
