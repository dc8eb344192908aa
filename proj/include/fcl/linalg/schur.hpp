// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file schur.hpp
 * @brief Complex Schur form m = q t q^* by Hessenberg reduction and
 *        single-shift QR iteration with Wilkinson shifts.
 *
 * This is the eigenvalue engine behind every spectral projection and normal
 * matrix function in the library.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fcl/linalg/householder.hpp"
#include "fcl/linalg/matrix.hpp"
#include "fcl/linalg/tolerances.hpp"

namespace fcl {

struct Schur {
    ComplexMatrix q;  // unitary
    ComplexMatrix t;  // upper triangular
};

struct EigenDecomposition {
    std::vector<cplx> eigenvalues;
    ComplexMatrix vectors;  // columns
    double residual = 0.0;  // max_j ||m v_j - lambda_j v_j||
};

namespace detail {

// G = [[c, s], [-conj(s), c]] with G [p; q] = [r; 0].
struct Givens {
    double c = 1.0;
    cplx s{0.0};
    cplx r{0.0};
};

inline Givens make_givens(cplx p, cplx q) {
    Givens g;
    const double ap = std::abs(p), aq = std::abs(q);
    if (aq == 0.0) {
        g.r = p;
        return g;
    }
    if (ap == 0.0) {
        g.c = 0.0;
        g.s = std::conj(q) / aq;
        g.r = aq;
        return g;
    }
    const double rr = std::hypot(ap, aq);
    const cplx ph = p / ap;
    g.c = ap / rr;
    g.s = ph * std::conj(q) / rr;
    g.r = ph * rr;
    return g;
}

// rows (i, j), columns [c0, c1): X <- G X
inline void rotate_rows(ComplexMatrix& m, const Givens& g, Index i, Index j, Index c0, Index c1) {
    for (Index k = c0; k < c1; ++k) {
        const cplx x = m(i, k), y = m(j, k);
        m(i, k) = g.c * x + g.s * y;
        m(j, k) = -std::conj(g.s) * x + g.c * y;
    }
}

// columns (i, j), rows [r0, r1): X <- X G^*
inline void rotate_cols(ComplexMatrix& m, const Givens& g, Index i, Index j, Index r0, Index r1) {
    for (Index k = r0; k < r1; ++k) {
        const cplx x = m(k, i), y = m(k, j);
        m(k, i) = g.c * x + std::conj(g.s) * y;
        m(k, j) = -g.s * x + g.c * y;
    }
}

inline double abs1(cplx z) { return std::abs(z.real()) + std::abs(z.imag()); }

inline cplx wilkinson_shift(const ComplexMatrix& t, Index iu, int iter) {
    if ((iter == 10 || iter == 20) && iu >= 2)
        return std::abs(t(iu, iu - 1).real()) + std::abs(t(iu - 1, iu - 2).real());
    cplx a = t(iu - 1, iu - 1), b = t(iu - 1, iu), c = t(iu, iu - 1), d = t(iu, iu);
    const double normt = abs1(a) + abs1(b) + abs1(c) + abs1(d);
    if (normt == 0.0) return 0.0;
    a /= normt;
    b /= normt;
    c /= normt;
    d /= normt;
    const cplx bc = b * c;
    const cplx diff = a - d;
    const cplx disc = std::sqrt(diff * diff + 4.0 * bc);
    const cplx det = a * d - bc;
    const cplx tr = a + d;
    cplx e1 = (tr + disc) / 2.0;
    cplx e2 = (tr - disc) / 2.0;
    if (abs1(e1) > abs1(e2))
        e2 = det / e1;
    else if (abs1(e2) != 0.0)
        e1 = det / e2;
    return normt * (abs1(e1 - d) < abs1(e2 - d) ? e1 : e2);
}

}  // namespace detail

/// Reduces m to upper Hessenberg form h = q^* m q.
inline Schur hessenberg(const ComplexMatrix& m) {
    require_square(m, "hessenberg");
    const DenormalGuard guard;
    const Index n = m.rows();
    Schur out{identity(n), m};
    auto& h = out.t;
    for (Index k = 0; k + 2 < n; ++k) {
        std::vector<cplx> x(n - k - 1);
        for (Index i = k + 1; i < n; ++i) x[i - k - 1] = h(i, k);
        const auto r = detail::make_reflector(x);
        if (r.tau == 0.0) continue;
        detail::apply_left(r, h, k + 1, k, n);
        detail::apply_right(r, h, 0, n, k + 1);
        detail::apply_right(r, out.q, 0, n, k + 1);
        h(k + 1, k) = r.alpha;
        for (Index i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
    return out;
}

/// m = q t q^*, t upper triangular with the eigenvalues on its diagonal.
inline Schur schur(const ComplexMatrix& m, const Tolerances& tol = default_tolerances()) {
    require_square(m, "schur");
    m.require_finite();
    const Index n = m.rows();
    const DenormalGuard guard;
    Schur s = hessenberg(m);
    if (n < 2) return s;
    auto& t = s.t;
    const double floor = tol.schur_deflation * frobenius_norm(m);
    const double eps = std::numeric_limits<double>::epsilon();
    auto negligible = [&](Index i) {
        const double sub = std::abs(t(i, i - 1));
        return sub <= floor || sub <= eps * (detail::abs1(t(i - 1, i - 1)) + detail::abs1(t(i, i)));
    };

    const long max_total = static_cast<long>(tol.schur_iterations_per_dim) * static_cast<long>(n);
    long total = 0;
    int iter = 0;
    Index iu = n - 1;
    for (;;) {
        while (iu > 0 && negligible(iu)) {
            t(iu, iu - 1) = 0.0;
            iter = 0;
            --iu;
        }
        if (iu == 0) break;
        ++iter;
        if (++total > max_total) {
            double off = 0.0;
            for (Index i = 1; i < n; ++i) off = std::max(off, std::abs(t(i, i - 1)));
            throw ConvergenceError("schur: QR iteration cap " + std::to_string(max_total) + " reached", off);
        }
        Index il = iu - 1;
        while (il > 0 && !negligible(il)) --il;

        const cplx shift = detail::wilkinson_shift(t, iu, iter);
        auto g = detail::make_givens(t(il, il) - shift, t(il + 1, il));
        detail::rotate_rows(t, g, il, il + 1, il, n);
        detail::rotate_cols(t, g, il, il + 1, 0, std::min(il + 2, iu) + 1);
        detail::rotate_cols(s.q, g, il, il + 1, 0, n);

        for (Index i = il + 1; i < iu; ++i) {
            g = detail::make_givens(t(i, i - 1), t(i + 1, i - 1));
            detail::rotate_rows(t, g, i, i + 1, i - 1, n);
            t(i + 1, i - 1) = 0.0;
            detail::rotate_cols(t, g, i, i + 1, 0, std::min(i + 2, iu) + 1);
            detail::rotate_cols(s.q, g, i, i + 1, 0, n);
        }
    }
    for (Index i = 1; i < n; ++i)
        for (Index j = 0; j < i; ++j) t(i, j) = 0.0;
    return s;
}

inline std::vector<cplx> eigenvalues(const ComplexMatrix& m, const Tolerances& tol = default_tolerances()) {
    return diagonal_of(schur(m, tol).t);
}

/// Unitary eigendecomposition of a normal matrix via its Schur form. The
/// Schur vectors are eigenvectors exactly when m is normal; the residual
/// field reports how well that holds.
inline EigenDecomposition eigen_normal(const ComplexMatrix& m, const Tolerances& tol = default_tolerances()) {
    Schur s = schur(m, tol);
    EigenDecomposition e{diagonal_of(s.t), std::move(s.q), 0.0};
    const ComplexMatrix mv = m * e.vectors;
    for (Index j = 0; j < m.cols(); ++j) {
        double r = 0.0;
        for (Index i = 0; i < m.rows(); ++i) r += std::norm(mv(i, j) - e.eigenvalues[j] * e.vectors(i, j));
        e.residual = std::max(e.residual, std::sqrt(r));
    }
    return e;
}

}  // namespace fcl
