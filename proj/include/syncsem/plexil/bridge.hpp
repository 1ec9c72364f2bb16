// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "syncsem/check.hpp"
#include "syncsem/plexil/exec.hpp"
#include "syncsem/setrel.hpp"
#include "syncsem/term.hpp"

namespace syncsem::plexil {

/// π as a term set: `Node(id,status,outcome)` per node and `Var(id,value)`
/// per variable. Γ is context and is not encoded.
TermSet encode(const ExecutionState& state);

/// The atomic relation at `state` as a set relation over encode(state).
///
/// A node N whose group fires contributes the redexes {N} ∪ S for every
/// subset S of the variables its firing writes: N's status and outcome change
/// together with exactly the writes in S. Guards read the fixed pre-state,
/// so the relation is only meaningful on subsets of encode(state).
SetRelation micro_as_setrel(const ExecutionState& state, const MicroOptions& options = {}, Limits limits = {});

/// Race priorities for the redexes of micro_as_setrel: 0 when S holds a
/// variable that another writer with priority at least N's also writes,
/// otherwise 1 + |S|. Under max_redexes this keeps exactly the writes that
/// survive race resolution.
PriorityFn race_priority(const ExecutionState& state, const MicroOptions& options = {});

struct Agreement {
  bool agree = true;
  std::string detail;
};

/// Compares micro(state) with the synchronous extension of micro_as_setrel
/// under max_redexes(race_priority), and checks that serialization lands in
/// the same successor. A quiescent state must have no successor.
Agreement differential_check(const ExecutionState& state, const MicroOptions& options = {}, Limits limits = {});

/// Runs every `<name>.plx` in `dir` against `<name>.events`, checking
/// differential agreement at each visited state. One case per plan; a plan
/// stops at its first divergence, at a repeated state, or after `bound` micro
/// steps in one macro step.
std::vector<CaseResult> differential_corpus_check(const std::string& dir, std::size_t bound);

}  // namespace syncsem::plexil
