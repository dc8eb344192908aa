// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "fcl/linalg/matrix.hpp"
#include "fcl/linalg/tolerances.hpp"

namespace fcl {

/// Log-determinant kept as modulus and unit phase so that products of
/// thousands of pivots neither overflow nor lose the sign.
struct LogDet {
    double log_modulus = 0.0;
    cplx phase{1.0};

    cplx log() const { return {log_modulus, std::arg(phase)}; }
    cplx value() const { return std::exp(log_modulus) * phase; }
};

/// Row-pivoted LU factorization P m = L U, packed in one matrix.
class LU {
public:
    explicit LU(ComplexMatrix m, const Tolerances& tol = default_tolerances()) : lu_(std::move(m)) {
        require_square(lu_, "LU");
        const DenormalGuard guard;
        const Index n = lu_.rows();
        perm_.resize(n);
        for (Index i = 0; i < n; ++i) perm_[i] = i;
        const double scale = norm1(lu_);
        const double threshold = tol.lu_pivot * scale;

        for (Index k = 0; k < n; ++k) {
            Index p = k;
            double best = std::abs(lu_(k, k));
            for (Index i = k + 1; i < n; ++i) {
                const double v = std::abs(lu_(i, k));
                if (v > best) {
                    best = v;
                    p = i;
                }
            }
            if (!(best >= threshold) || best == 0.0)
                throw SingularMatrixError("LU: pivot " + std::to_string(best) + " below " +
                                          std::to_string(threshold) + " at column " + std::to_string(k));
            if (p != k) {
                std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
                std::swap(perm_[k], perm_[p]);
                swaps_ ^= 1;
            }
            const cplx pivot = lu_(k, k);
            const auto tail = lu_.row(k).subspan(k + 1);
            for (Index i = k + 1; i < n; ++i) {
                const cplx l = lu_(i, k) / pivot;
                lu_(i, k) = l;
                if (l != cplx{0.0}) axpy(lu_.row(i).subspan(k + 1), -l, tail);
            }
        }
    }

    Index dim() const noexcept { return lu_.rows(); }

    LogDet logdet() const {
        LogDet d;
        if (swaps_) d.phase = -1.0;
        for (Index i = 0; i < dim(); ++i) {
            const cplx u = lu_(i, i);
            const double r = std::abs(u);
            d.log_modulus += std::log(r);
            d.phase *= u / r;
            d.phase /= std::abs(d.phase);
        }
        return d;
    }

    /// Solves m X = B.
    ComplexMatrix solve(const ComplexMatrix& b) const {
        if (b.rows() != dim()) throw DimensionError("LU::solve: row mismatch");
        const DenormalGuard guard;
        const Index n = dim();
        ComplexMatrix x(n, b.cols());
        for (Index i = 0; i < n; ++i) std::copy(b.row(perm_[i]).begin(), b.row(perm_[i]).end(), x.row(i).begin());
        for (Index i = 0; i < n; ++i)
            for (Index k = 0; k < i; ++k)
                if (lu_(i, k) != cplx{0.0}) axpy(x.row(i), -lu_(i, k), x.row(k));
        for (Index ii = n; ii-- > 0;) {
            for (Index k = ii + 1; k < n; ++k)
                if (lu_(ii, k) != cplx{0.0}) axpy(x.row(ii), -lu_(ii, k), x.row(k));
            const cplx inv = cplx{1.0} / lu_(ii, ii);
            for (auto& z : x.row(ii)) z *= inv;
        }
        return x;
    }

    ComplexMatrix inverse() const { return solve(identity(dim())); }

    const ComplexMatrix& packed() const noexcept { return lu_; }

private:
    ComplexMatrix lu_;
    std::vector<Index> perm_;
    int swaps_ = 0;
};

struct InverseAndLogDet {
    ComplexMatrix inverse;
    cplx logdet;
};

/// Inverse and log-determinant in one factorization. exp(logdet) = det(m).
inline InverseAndLogDet lu_solve_and_logdet(const ComplexMatrix& m, const Tolerances& tol = default_tolerances()) {
    LU lu(m, tol);
    return {lu.inverse(), lu.logdet().log()};
}

inline cplx determinant(const ComplexMatrix& m, const Tolerances& tol = default_tolerances()) {
    return LU(m, tol).logdet().value();
}

inline ComplexMatrix inverse(const ComplexMatrix& m, const Tolerances& tol = default_tolerances()) {
    return LU(m, tol).inverse();
}

}  // namespace fcl
