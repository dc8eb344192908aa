// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference computations used only by the tests. None of these
// go through the library kernels they are compared against.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "fcl/linalg/matrix.hpp"

namespace fcl::oracle {

inline ComplexMatrix naive_multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < b.cols(); ++j) {
            cplx s{0.0};
            for (Index k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

/// Laplace expansion along the first row.
inline cplx cofactor_det(const std::vector<std::vector<cplx>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1.0;
    if (n == 1) return m[0][0];
    cplx det{0.0};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<cplx>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<cplx> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        det += ((j % 2) ? -1.0 : 1.0) * m[0][j] * cofactor_det(minor);
    }
    return det;
}

inline cplx cofactor_det(const ComplexMatrix& m) {
    std::vector<std::vector<cplx>> rows(m.rows(), std::vector<cplx>(m.cols()));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return cofactor_det(rows);
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations (plain loops).
inline std::vector<double> jacobi_hermitian_eigenvalues(ComplexMatrix a) {
    const Index n = a.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (Index p = 0; p < n; ++p)
            for (Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (off < 1e-30) break;
        for (Index p = 0; p < n; ++p)
            for (Index q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;
                const cplx ph = apq / mag;
                const double app = a(p, p).real(), aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
                const double c = std::cos(theta), s = std::sin(theta);
                // columns p, q: [c, s*ph; -s*conj(ph)... ] chosen to zero a(p,q)
                for (Index k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(ph) * akq;
                    a(k, q) = s * ph * akp + c * akq;
                }
                for (Index k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * ph * aqk;
                    a(q, k) = s * std::conj(ph) * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (Index i = 0; i < n; ++i) ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

inline double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    double d = 0.0;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

}  // namespace fcl::oracle
