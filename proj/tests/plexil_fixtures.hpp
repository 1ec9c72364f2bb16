// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "syncsem/plexil/ast.hpp"
#include "syncsem/plexil/state.hpp"

namespace fixtures {

inline std::string corpus_path(const std::string& name) { return std::string(SYNCSEM_CORPUS_DIR) + "/" + name; }

inline std::string read_corpus(const std::string& name) {
  std::ifstream in(corpus_path(name));
  if (!in) throw std::runtime_error("missing corpus file " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline syncsem::plexil::ExecutionState compile_text(const std::string& text) {
  return syncsem::plexil::compile(syncsem::plexil::parse_plan(text));
}

inline syncsem::plexil::ExecutionState compile_corpus(const std::string& name) {
  return compile_text(read_corpus(name));
}

}  // namespace fixtures
