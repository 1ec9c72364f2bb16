// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "syncsem/plexil/expr.hpp"
#include "syncsem/plexil/state.hpp"

namespace syncsem::plexil {

/// Two concrete values of incompatible kinds met at run time. Distinct from
/// Unknown, which is an ordinary result.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (Γ,π) ⊢ e ⇝ v with Kleene AND/OR/NOT. Comparisons and arithmetic with an
/// Unknown operand give Unknown. `e` must come from compile().
Value eval(const ExternalState& gamma, const InternalState& pi, const Expr& e);
Value eval(const ExecutionState& s, const Expr& e);

/// False if some proper ancestor's invariant is false, true if all are true,
/// Unknown otherwise.
Value anc_inv(const ExecutionState& s, std::string_view node_id);

/// True if some proper ancestor's end condition is true, false if all are
/// false, Unknown otherwise.
Value anc_end(const ExecutionState& s, std::string_view node_id);

}  // namespace syncsem::plexil
