// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace fcl {

/// Default thresholds of the dense kernels. Bounds marked "per dim" are
/// multiplied by the matrix dimension at the call site.
struct Tolerances {
    double lu_pivot = 1e-14;           // relative to ||m||_1
    double schur_deflation = 1e-14;    // relative to ||m||_F
    int schur_iterations_per_dim = 30;
    int svd_iterations_per_dim = 75;
    double expm_scaled_norm = 0.5;
    double expm_term_ratio = 1e-17;
    double normality = 1e-8;           // ||m*m - mm*|| / ||m||^2
    double log_zero = 1e-12;
    double log_branch = 1e-8;
    double polar_singular = 1e-12;     // sigma_min / ||m||
    double spectral_boundary = 1e-8;
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

}  // namespace fcl
