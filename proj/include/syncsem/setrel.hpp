// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "syncsem/term.hpp"

namespace syncsem {

/// A set of term sets, in canonical order.
using Family = std::set<TermSet>;

/// Result of a bounded enumeration. `cutoff` is set when the enumeration
/// stopped at its bound while further steps were still possible, so an
/// absent state means "not found within the bound" rather than "unreachable".
struct Successors {
  Family states;
  bool cutoff = false;
};

/// A redex `lhs` of some enumerated superset, together with all of its reducts.
struct Redex {
  TermSet lhs;
  Family reducts;
};

struct Limits {
  /// Largest set handed to a redex enumerator.
  std::size_t max_set_size = 12;
  /// Largest universe whose power set is swept by the determinism oracle.
  std::size_t max_universe = 16;
};

class SizeCapExceeded : public std::runtime_error {
 public:
  SizeCapExceeded(std::size_t size, std::size_t cap)
      : std::runtime_error("set of size " + std::to_string(size) + " exceeds the configured cap of " +
                           std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// An enumerable relation on finite term sets.
///
/// The step enumerator lists every a' with a -> a'. The redex enumerator,
/// given a superset u, lists every b ⊆ u with at least one reduct (the empty
/// set included when it is a redex). When no redex enumerator is supplied,
/// one is derived by running the step enumerator on every subset of u.
class SetRelation {
 public:
  using StepFn = std::function<Successors(const TermSet&)>;
  using RedexFn = std::function<std::vector<Redex>(const TermSet&)>;

  SetRelation(std::string name, StepFn step, RedexFn redexes = {}, Limits limits = {});

  const std::string& name() const noexcept { return name_; }
  const Limits& limits() const noexcept { return limits_; }

  Successors step(const TermSet& a) const { return step_(a); }

  /// Throws SizeCapExceeded when |u| exceeds `limits().max_set_size`.
  /// Results are ordered by `lhs`.
  std::vector<Redex> redexes(const TermSet& u) const;

  /// Nonempty redexes only.
  std::vector<Redex> proper_redexes(const TermSet& u) const;

  bool related(const TermSet& a, const TermSet& b) const { return step(a).states.contains(b); }
  bool is_redex(const TermSet& a) const { return !step(a).states.empty(); }

  SetRelation with_limits(Limits limits) const;

 private:
  std::string name_;
  StepFn step_;
  RedexFn redexes_;
  Limits limits_;
};

/// Maps a term set to a natural number; larger wins.
using PriorityFn = std::function<std::uint64_t(const TermSet&)>;

PriorityFn uniform_priority();

/// Maps a set to a family of nonempty, pairwise-disjoint redexes of itself.
class Strategy {
 public:
  using Fn = std::function<std::vector<TermSet>(const TermSet&)>;

  explicit Strategy(Fn fn) : fn_(std::move(fn)) {}

  std::vector<TermSet> operator()(const TermSet& a) const { return fn_(a); }

  /// Empty string when `choice` is a well-formed strategy output for `a`
  /// under `r`; otherwise a description of the first violated invariant.
  static std::string check(const SetRelation& r, const TermSet& a, const std::vector<TermSet>& choice);

 private:
  Fn fn_;
};

// Relation combinators.

SetRelation identity_rel(Limits limits = {});
SetRelation nfold(const SetRelation& r, std::size_t n);
/// Reflexive-transitive closure explored to depth `bound`.
SetRelation star(const SetRelation& r, std::size_t bound);
SetRelation async_ext(const SetRelation& r);
SetRelation parallel_ext(const SetRelation& r);
SetRelation sync_ext(const SetRelation& r, Strategy s);
/// Normalized reduction (a →* a' with a' a normal form), depth-bounded.
SetRelation normalized(const SetRelation& r, std::size_t bound);

/// Every state reachable from `a` in at most `bound` steps. `cutoff` is set
/// when some state at depth `bound` still has a successor.
Successors reachable(const SetRelation& r, const TermSet& a, std::size_t bound);

/// Normal forms among `reachable(r, a, bound)`; cutoff as above.
Successors normalize(const SetRelation& r, const TermSet& a, std::size_t bound);

/// The maximal-redexes strategy for priority `p`: redexes b of a such that
/// p(b) > p(c) for every other redex c of a that overlaps b.
Strategy max_redexes(const SetRelation& r, PriorityFn p = uniform_priority());

/// Log book of the serialization procedure: redexes still to reduce, and the
/// reducts accumulated so far.
struct LogBook {
  std::vector<TermSet> pending;
  TermSet done;
};

/// Simulates one synchronous step by reducing the log book
/// ⟨s(a) ; ∅⟩ one redex at a time, then returns (a \ ⋃s(a)) ∪ done.
/// Every result reachable through a different choice of reducts is returned.
/// An empty strategy output yields {a}.
Family serialize(const SetRelation& r, const Strategy& s, const TermSet& a);

/// True iff every subset of `universe` has at most one reduct under `r`.
/// Throws SizeCapExceeded above `r.limits().max_universe`.
bool is_deterministic(const SetRelation& r, const TermSet& universe);

namespace kernels {

/// Serial reference for the power-set sweep behind is_deterministic.
bool is_deterministic_serial(const SetRelation& r, const TermSet& universe);

/// OpenMP sweep over subset masks; same result as the serial reference.
bool is_deterministic_omp(const SetRelation& r, const TermSet& universe);

/// Reduct counts for every subset mask of `universe`, serially.
std::vector<std::size_t> reduct_counts_serial(const SetRelation& r, const TermSet& universe);

/// Reduct counts for every subset mask of `universe`, in parallel.
std::vector<std::size_t> reduct_counts_omp(const SetRelation& r, const TermSet& universe);

}  // namespace kernels

std::string to_string(const Family& family);

}  // namespace syncsem
