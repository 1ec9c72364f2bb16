// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace syncsem::cli {

/// Exit statuses shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kFailure = 1,  // parse, compile or usage error; failed check suite
  kSpuriousLoop = 2,
  kBoundExhausted = 3,
  kSizeCap = 4,
};

/// Entry point behind the `syncsem` binary. `in` feeds the `step` REPL.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace syncsem::cli
