// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file matrix.hpp
 * @brief Dense complex matrix and the elementwise / product kernels.
 *
 * Storage is row-major. Products go through cblas_zgemm; everything else is
 * plain loops. All kernels are pure functions of their arguments.
 */

#pragma once

#include <cblas.h>

#if defined(__SSE__) || defined(__x86_64__)
#include <xmmintrin.h>
#define FCL_HAVE_MXCSR 1
#endif

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fcl/linalg/error.hpp"

namespace fcl {

using cplx = std::complex<double>;
using Index = std::size_t;

inline bool is_finite(cplx z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Sets flush-to-zero and denormals-are-zero for its lifetime and restores the
/// previous mode afterwards. Graded operators push products far below 1e-308,
/// where subnormal arithmetic is two orders of magnitude slower.
class DenormalGuard {
public:
#ifdef FCL_HAVE_MXCSR
    DenormalGuard() noexcept : saved_(_mm_getcsr()) { _mm_setcsr(saved_ | 0x8040u); }
    ~DenormalGuard() { _mm_setcsr(saved_); }

private:
    unsigned saved_;
#else
    DenormalGuard() noexcept {}
#endif
public:
    DenormalGuard(const DenormalGuard&) = delete;
    DenormalGuard& operator=(const DenormalGuard&) = delete;
};

/// y += a * x over contiguous spans. Written on the interleaved doubles so the
/// loop vectorizes without the NaN-recovery path of std::complex multiply.
inline void axpy(std::span<cplx> y, cplx a, std::span<const cplx> x) noexcept {
    const double ar = a.real(), ai = a.imag();
    double* yd = reinterpret_cast<double*>(y.data());
    const double* xd = reinterpret_cast<const double*>(x.data());
    const Index n = std::min(y.size(), x.size());
    for (Index k = 0; k < n; ++k) {
        const double xr = xd[2 * k], xi = xd[2 * k + 1];
        yd[2 * k] += ar * xr - ai * xi;
        yd[2 * k + 1] += ar * xi + ai * xr;
    }
}

/// Conjugated dot product sum conj(x_k) y_k.
inline cplx dotc(std::span<const cplx> x, std::span<const cplx> y) noexcept {
    const double* xd = reinterpret_cast<const double*>(x.data());
    const double* yd = reinterpret_cast<const double*>(y.data());
    double re = 0.0, im = 0.0;
    const Index n = std::min(x.size(), y.size());
    for (Index k = 0; k < n; ++k) {
        re += xd[2 * k] * yd[2 * k] + xd[2 * k + 1] * yd[2 * k + 1];
        im += xd[2 * k] * yd[2 * k + 1] - xd[2 * k + 1] * yd[2 * k];
    }
    return {re, im};
}

/// Unconjugated dot product sum x_k y_k.
inline cplx dotu(std::span<const cplx> x, std::span<const cplx> y) noexcept {
    const double* xd = reinterpret_cast<const double*>(x.data());
    const double* yd = reinterpret_cast<const double*>(y.data());
    double re = 0.0, im = 0.0;
    const Index n = std::min(x.size(), y.size());
    for (Index k = 0; k < n; ++k) {
        re += xd[2 * k] * yd[2 * k] - xd[2 * k + 1] * yd[2 * k + 1];
        im += xd[2 * k] * yd[2 * k + 1] + xd[2 * k + 1] * yd[2 * k];
    }
    return {re, im};
}

class ComplexMatrix {
public:
    ComplexMatrix() = default;

    /// Zero matrix.
    ComplexMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Takes ownership of row-major entries; rejects wrong sizes and NaN/Inf.
    ComplexMatrix(Index rows, Index cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw DimensionError("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                                 " != " + std::to_string(rows_) + "x" + std::to_string(cols_));
        require_finite();
    }

    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
        require_finite();
    }

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }
    Index size() const noexcept { return data_.size(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(Index i, Index j) noexcept { return data_[i * cols_ + j]; }
    const cplx& operator()(Index i, Index j) const noexcept { return data_[i * cols_ + j]; }

    std::span<cplx> data() noexcept { return data_; }
    std::span<const cplx> data() const noexcept { return data_; }
    std::span<cplx> row(Index i) noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<const cplx> row(Index i) const noexcept { return {data_.data() + i * cols_, cols_}; }

    void require_finite() const {
        for (const auto& z : data_)
            if (!is_finite(z)) throw PreconditionError("ComplexMatrix: non-finite entry");
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        check_same(o, "+=");
        for (Index k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        check_same(o, "-=");
        for (Index k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    ComplexMatrix& operator*=(cplx s) noexcept {
        for (auto& z : data_) z *= s;
        return *this;
    }

    bool operator==(const ComplexMatrix&) const = default;

private:
    void check_same(const ComplexMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionError(std::string("ComplexMatrix ") + op + ": shape mismatch");
    }

    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<cplx> data_;
};

inline ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
inline ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
inline ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
inline ComplexMatrix operator-(ComplexMatrix a) { return a *= cplx{-1.0}; }

inline ComplexMatrix identity(Index n) {
    ComplexMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

inline ComplexMatrix diagonal(std::span<const cplx> d) {
    ComplexMatrix m(d.size(), d.size());
    for (Index i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

inline std::vector<cplx> diagonal_of(const ComplexMatrix& m) {
    std::vector<cplx> d(std::min(m.rows(), m.cols()));
    for (Index i = 0; i < d.size(); ++i) d[i] = m(i, i);
    return d;
}

inline void require_square(const ComplexMatrix& m, const char* who) {
    if (!m.is_square())
        throw DimensionError(std::string(who) + ": expected square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

/// Exact double-precision product a*b.
inline ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    ComplexMatrix c(a.rows(), b.cols());
    if (c.size() == 0 || a.cols() == 0) return c;
    const DenormalGuard guard;
    const cplx one{1.0}, zero{0.0};
    cblas_zgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(a.rows()),
                static_cast<int>(b.cols()), static_cast<int>(a.cols()), &one, a.data().data(),
                static_cast<int>(a.cols()), b.data().data(), static_cast<int>(b.cols()), &zero,
                c.data().data(), static_cast<int>(c.cols()));
    return c;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return multiply(a, b); }

/// a^* b without forming the adjoint.
inline ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("adjoint_times: row mismatch");
    ComplexMatrix c(a.cols(), b.cols());
    if (c.size() == 0 || a.rows() == 0) return c;
    const DenormalGuard guard;
    const cplx one{1.0}, zero{0.0};
    cblas_zgemm(CblasRowMajor, CblasConjTrans, CblasNoTrans, static_cast<int>(a.cols()),
                static_cast<int>(b.cols()), static_cast<int>(a.rows()), &one, a.data().data(),
                static_cast<int>(a.cols()), b.data().data(), static_cast<int>(b.cols()), &zero,
                c.data().data(), static_cast<int>(c.cols()));
    return c;
}

/// a b^* without forming the adjoint.
inline ComplexMatrix times_adjoint(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("times_adjoint: column mismatch");
    ComplexMatrix c(a.rows(), b.rows());
    if (c.size() == 0 || a.cols() == 0) return c;
    const DenormalGuard guard;
    const cplx one{1.0}, zero{0.0};
    cblas_zgemm(CblasRowMajor, CblasNoTrans, CblasConjTrans, static_cast<int>(a.rows()),
                static_cast<int>(b.rows()), static_cast<int>(a.cols()), &one, a.data().data(),
                static_cast<int>(a.cols()), b.data().data(), static_cast<int>(b.cols()), &zero,
                c.data().data(), static_cast<int>(c.cols()));
    return c;
}

/// diag(d) * m, O(n^2).
inline ComplexMatrix scale_rows(std::span<const cplx> d, ComplexMatrix m) {
    if (d.size() != m.rows()) throw DimensionError("scale_rows: length mismatch");
    for (Index i = 0; i < m.rows(); ++i)
        for (auto& z : m.row(i)) z *= d[i];
    return m;
}

/// m * diag(d), O(n^2).
inline ComplexMatrix scale_cols(ComplexMatrix m, std::span<const cplx> d) {
    if (d.size() != m.cols()) throw DimensionError("scale_cols: length mismatch");
    for (Index i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        for (Index j = 0; j < r.size(); ++j) r[j] *= d[j];
    }
    return m;
}

inline ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix t(m.cols(), m.rows());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) t(j, i) = std::conj(m(i, j));
    return t;
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "commutator");
    if (a.rows() != b.rows() || !b.is_square()) throw DimensionError("commutator: shape mismatch");
    return a * b - b * a;
}

inline cplx trace(const ComplexMatrix& m) {
    require_square(m, "trace");
    cplx t{0.0};
    for (Index i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

inline double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& z : m.data()) s += std::norm(z);
    return std::sqrt(s);
}

/// Maximum absolute column sum.
inline double norm1(const ComplexMatrix& m) {
    std::vector<double> col(m.cols(), 0.0);
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) col[j] += std::abs(m(i, j));
    return col.empty() ? 0.0 : *std::max_element(col.begin(), col.end());
}

inline double max_abs(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& z : m.data()) s = std::max(s, std::abs(z));
    return s;
}

inline double distance(const ComplexMatrix& a, const ComplexMatrix& b) { return frobenius_norm(a - b); }

/// ||m - I||_F
inline double distance_to_identity(const ComplexMatrix& m) {
    require_square(m, "distance_to_identity");
    double s = 0.0;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) s += std::norm(m(i, j) - (i == j ? cplx{1.0} : cplx{0.0}));
    return std::sqrt(s);
}

/// Leading rows x cols block.
inline ComplexMatrix leading_block(const ComplexMatrix& m, Index rows, Index cols) {
    if (rows > m.rows() || cols > m.cols()) throw DimensionError("leading_block: out of range");
    ComplexMatrix b(rows, cols);
    for (Index i = 0; i < rows; ++i) std::copy_n(m.row(i).begin(), cols, b.row(i).begin());
    return b;
}

/// Principal submatrix on the given index list.
inline ComplexMatrix submatrix(const ComplexMatrix& m, std::span<const Index> idx) {
    ComplexMatrix b(idx.size(), idx.size());
    for (Index i = 0; i < idx.size(); ++i)
        for (Index j = 0; j < idx.size(); ++j) b(i, j) = m(idx[i], idx[j]);
    return b;
}

inline ComplexMatrix add_identity(ComplexMatrix m, cplx s = 1.0) {
    require_square(m, "add_identity");
    for (Index i = 0; i < m.rows(); ++i) m(i, i) += s;
    return m;
}

/// ||m* m - m m*||_F
inline double normality_defect(const ComplexMatrix& m) {
    require_square(m, "normality_defect");
    return frobenius_norm(adjoint_times(m, m) - times_adjoint(m, m));
}

/// ||m - m*||_F
inline double hermiticity_defect(const ComplexMatrix& m) {
    require_square(m, "hermiticity_defect");
    return frobenius_norm(m - adjoint(m));
}

/// ||m* m - I||_F
inline double unitarity_defect(const ComplexMatrix& m) { return distance_to_identity(adjoint_times(m, m)); }

}  // namespace fcl
