// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fcl/constructions/generators.hpp"
#include "fcl/constructions/grid.hpp"
#include "fcl/constructions/random.hpp"
#include "fcl/constructions/series.hpp"
#include "fcl/constructions/shifts.hpp"
