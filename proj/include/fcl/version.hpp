// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace fcl {

inline constexpr const char* version = "0.1.0";

}  // namespace fcl
