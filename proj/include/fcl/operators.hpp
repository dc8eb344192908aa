// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fcl/operators/diagnostics.hpp"
#include "fcl/operators/fredholm.hpp"
#include "fcl/operators/space.hpp"
#include "fcl/operators/splits.hpp"
#include "fcl/operators/trace.hpp"
