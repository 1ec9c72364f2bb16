// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "syncsem/cli.hpp"

int main(int argc, char** argv) { return syncsem::cli::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
