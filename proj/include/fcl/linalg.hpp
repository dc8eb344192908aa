// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fcl/linalg/error.hpp"
#include "fcl/linalg/functions.hpp"
#include "fcl/linalg/lu.hpp"
#include "fcl/linalg/matrix.hpp"
#include "fcl/linalg/schur.hpp"
#include "fcl/linalg/svd.hpp"
#include "fcl/linalg/tolerances.hpp"
