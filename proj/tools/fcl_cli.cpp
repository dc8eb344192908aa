// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#include "fcl/harness/cli.hpp"

int main(int argc, char** argv) { return fcl::cli_main(argc, argv); }
