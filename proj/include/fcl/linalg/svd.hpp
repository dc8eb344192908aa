// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file svd.hpp
 * @brief Complex singular value decomposition.
 *
 * Householder bidiagonalization to a complex bidiagonal, diagonal phase
 * scaling to a real bidiagonal, then Golub-Kahan implicit-shift QR sweeps
 * with the usual splitting and cancellation tests. Singular values come out
 * sorted in descending order.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "fcl/linalg/householder.hpp"
#include "fcl/linalg/matrix.hpp"
#include "fcl/linalg/tolerances.hpp"

namespace fcl {

struct SVD {
    ComplexMatrix u;            // rows x k
    std::vector<double> sigma;  // k = min(rows, cols), descending
    ComplexMatrix v;            // cols x k
};

namespace detail {

// Rotates columns (i, j) of m by the real rotation [c s; -s c].
inline void rotate_columns(ComplexMatrix& m, Index i, Index j, double c, double s) {
    for (Index r = 0; r < m.rows(); ++r) {
        const cplx y = m(r, i), z = m(r, j);
        m(r, i) = y * c + z * s;
        m(r, j) = z * c - y * s;
    }
}

/// Core routine for rows >= cols. When want_vectors is false u/v stay empty.
inline SVD svd_tall(const ComplexMatrix& input, bool want_vectors, const Tolerances& tol) {
    const DenormalGuard guard;
    const Index m = input.rows(), n = input.cols();
    ComplexMatrix a = input;
    std::vector<Reflector> left(n), right(n);
    std::vector<cplx> d(n), e(n, cplx{0.0});

    for (Index k = 0; k < n; ++k) {
        std::vector<cplx> col(m - k);
        for (Index i = k; i < m; ++i) col[i - k] = a(i, k);
        left[k] = make_reflector(col);
        apply_left(left[k], a, k, k, n);
        d[k] = left[k].tau == 0.0 ? a(k, k) : left[k].alpha;
        if (k + 1 < n) {
            std::vector<cplx> rowc(n - k - 1);
            for (Index j = k + 1; j < n; ++j) rowc[j - k - 1] = std::conj(a(k, j));
            right[k] = make_reflector(rowc);
            apply_right(right[k], a, k, m, k + 1);
            e[k] = right[k].tau == 0.0 ? a(k, k + 1) : std::conj(right[k].alpha);
        }
    }

    ComplexMatrix u, v;
    if (want_vectors) {
        u = ComplexMatrix(m, n);
        for (Index i = 0; i < n; ++i) u(i, i) = 1.0;
        for (Index k = n; k-- > 0;) apply_left(left[k], u, k, k, n);
        v = identity(n);
        for (Index k = n; k-- > 0;)
            if (k + 1 < n) apply_left(right[k], v, k + 1, k + 1, n);
    }

    // Phase-normalize the bidiagonal so that it is real and non-negative.
    std::vector<double> w(n), rv1(n, 0.0);
    for (Index k = 0; k < n; ++k) {
        const double dk = std::abs(d[k]);
        const cplx p = dk > 0.0 ? d[k] / dk : cplx{1.0};
        w[k] = dk;
        if (want_vectors)
            for (Index r = 0; r < m; ++r) u(r, k) *= p;
        if (k + 1 < n) {
            const cplx ek = std::conj(p) * e[k];
            const double ak = std::abs(ek);
            const cplx q = ak > 0.0 ? ek / ak : cplx{1.0};
            rv1[k + 1] = ak;
            d[k + 1] *= std::conj(q);
            if (want_vectors)
                for (Index r = 0; r < n; ++r) v(r, k + 1) *= std::conj(q);
        }
    }

    double anorm = 0.0;
    for (Index i = 0; i < n; ++i) anorm = std::max(anorm, w[i] + rv1[i]);
    const double eps = std::numeric_limits<double>::epsilon() * anorm;
    const int max_its = std::max(30, tol.svd_iterations_per_dim);

    for (Index k = n; k-- > 0;) {
        for (int its = 0;; ++its) {
            bool cancel = true;
            Index l = k;
            for (;; --l) {
                if (l == 0 || std::abs(rv1[l]) <= eps) {
                    cancel = false;
                    break;
                }
                if (std::abs(w[l - 1]) <= eps) break;
            }
            if (cancel) {
                const Index nm = l - 1;
                double c = 0.0, s = 1.0;
                for (Index i = l; i <= k; ++i) {
                    const double f = s * rv1[i];
                    rv1[i] *= c;
                    if (std::abs(f) <= eps) break;
                    const double g = w[i];
                    const double h = std::hypot(f, g);
                    w[i] = h;
                    c = g / h;
                    s = -f / h;
                    if (want_vectors) rotate_columns(u, nm, i, c, s);
                }
            }
            double z = w[k];
            if (l == k) {
                if (z < 0.0) {
                    w[k] = -z;
                    if (want_vectors)
                        for (Index r = 0; r < n; ++r) v(r, k) = -v(r, k);
                }
                break;
            }
            if (its >= max_its) {
                double off = 0.0;
                for (Index i = 1; i < n; ++i) off += rv1[i] * rv1[i];
                throw ConvergenceError("svd: QR sweeps hit iteration cap", std::sqrt(off));
            }
            double x = w[l];
            const Index nm = k - 1;
            double y = w[nm];
            double g = rv1[nm];
            double h = rv1[k];
            double f = ((y - z) * (y + z) + (g - h) * (g + h)) / (2.0 * h * y);
            g = std::hypot(f, 1.0);
            f = ((x - z) * (x + z) + h * ((y / (f + std::copysign(g, f))) - h)) / x;
            double c = 1.0, s = 1.0;
            for (Index j = l; j <= nm; ++j) {
                const Index i = j + 1;
                g = rv1[i];
                y = w[i];
                h = s * g;
                g = c * g;
                z = std::hypot(f, h);
                rv1[j] = z;
                c = f / z;
                s = h / z;
                f = x * c + g * s;
                g = g * c - x * s;
                h = y * s;
                y *= c;
                if (want_vectors) rotate_columns(v, j, i, c, s);
                z = std::hypot(f, h);
                w[j] = z;
                if (z != 0.0) {
                    c = f / z;
                    s = h / z;
                }
                f = c * g + s * y;
                x = c * y - s * g;
                if (want_vectors) rotate_columns(u, j, i, c, s);
            }
            rv1[l] = 0.0;
            rv1[k] = f;
            w[k] = x;
        }
    }

    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index p, Index q) { return w[p] > w[q]; });
    SVD out;
    out.sigma.resize(n);
    for (Index j = 0; j < n; ++j) out.sigma[j] = w[order[j]];
    if (want_vectors) {
        out.u = ComplexMatrix(m, n);
        out.v = ComplexMatrix(n, n);
        for (Index j = 0; j < n; ++j) {
            for (Index r = 0; r < m; ++r) out.u(r, j) = u(r, order[j]);
            for (Index r = 0; r < n; ++r) out.v(r, j) = v(r, order[j]);
        }
    }
    return out;
}

}  // namespace detail

/// m = u diag(sigma) v^*. u is rows x k, v is cols x k, k = min(rows, cols).
inline SVD svd(const ComplexMatrix& m, const Tolerances& tol = default_tolerances()) {
    if (m.rows() >= m.cols()) return detail::svd_tall(m, true, tol);
    SVD t = detail::svd_tall(adjoint(m), true, tol);
    return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

/// Singular values only, descending.
inline std::vector<double> singular_values(const ComplexMatrix& m, const Tolerances& tol = default_tolerances()) {
    if (m.rows() >= m.cols()) return detail::svd_tall(m, false, tol).sigma;
    return detail::svd_tall(adjoint(m), false, tol).sigma;
}

/// Sum of singular values.
inline double schatten1(const ComplexMatrix& m) {
    const auto s = singular_values(m);
    return std::accumulate(s.begin(), s.end(), 0.0);
}

inline double spectral_norm(const ComplexMatrix& m) {
    const auto s = singular_values(m);
    return s.empty() ? 0.0 : s.front();
}

/// u diag(sigma) v^*
inline ComplexMatrix reconstruct(const SVD& s) {
    std::vector<cplx> sig(s.sigma.begin(), s.sigma.end());
    return times_adjoint(scale_cols(s.u, sig), s.v);
}

}  // namespace fcl
