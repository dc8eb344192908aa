// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <vector>

#include "fcl/linalg.hpp"

namespace fcl {

struct DSeries {
    ComplexMatrix d;
    double residual = 0.0;  // ||e^A - I - D A||_F
    int terms = 0;
};

/// D = sum_k A^k / (k+1)!, so that e^A - I = D A.
inline DSeries dseries(const ComplexMatrix& a, double tolerance = 1e-17) {
    require_square(a, "dseries");
    const Index n = a.rows();
    DSeries s{identity(n), 0.0, 1};
    ComplexMatrix term = identity(n);
    for (int k = 1; k < 200; ++k) {
        term = term * a;
        term *= cplx{1.0 / (k + 1)};
        s.d += term;
        ++s.terms;
        const double tn = frobenius_norm(term);
        if (tn == 0.0 || tn < tolerance * frobenius_norm(s.d)) break;
    }
    s.residual = frobenius_norm(add_identity(expm(a), -1.0) - s.d * a);
    return s;
}

/// ||x^n||^{1/n} in the spectral norm for n = 1 .. n_max.
inline std::vector<double> power_root_norms(const ComplexMatrix& x, int n_max) {
    std::vector<double> out;
    ComplexMatrix p = x;
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1) p = p * x;
        out.push_back(std::pow(spectral_norm(p), 1.0 / n));
    }
    return out;
}

}  // namespace fcl
