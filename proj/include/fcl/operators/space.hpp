// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file space.hpp
 * @brief Finite models of l2(N) and L2(R) and the compressions onto
 *        leading windows used for two-scale evaluation.
 *
 * A sequence truncation keeps e_1..e_N and compresses onto the first m basis
 * vectors. A Fourier grid samples [-L, L) at N points and compresses onto the
 * first m discrete Hermite functions, an m-dimensional window centred on the
 * phase-space origin.
 */

#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "fcl/linalg/matrix.hpp"

namespace fcl {

struct SequenceTruncation {
    Index ambient_dim = 0;
    bool operator==(const SequenceTruncation&) const = default;
};

struct FourierGrid {
    double half_length = 0.0;
    Index points = 0;

    double spacing() const { return 2.0 * half_length / static_cast<double>(points); }
    double position(Index j) const { return -half_length + static_cast<double>(j) * spacing(); }
    bool operator==(const FourierGrid&) const = default;
};

using SpaceModel = std::variant<SequenceTruncation, FourierGrid>;

inline bool is_power_of_two(Index n) { return n != 0 && (n & (n - 1)) == 0; }

inline SpaceModel sequence_space(Index n) {
    if (n < 2) throw PreconditionError("SequenceTruncation: ambient dim must be >= 2");
    return SequenceTruncation{n};
}

inline SpaceModel fourier_grid(double half_length, Index points) {
    if (!(half_length > 0.0) || !std::isfinite(half_length))
        throw PreconditionError("FourierGrid: half length must be positive");
    if (!is_power_of_two(points) || points < 2) throw PreconditionError("FourierGrid: points must be a power of two");
    return FourierGrid{half_length, points};
}

inline Index dimension(const SpaceModel& s) {
    return std::visit([](const auto& v) -> Index {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, SequenceTruncation>)
            return v.ambient_dim;
        else
            return v.points;
    }, s);
}

/// Same model at twice the dimension. Grids keep their spacing and double the length.
inline SpaceModel doubled(const SpaceModel& s) {
    if (const auto* q = std::get_if<SequenceTruncation>(&s)) return SequenceTruncation{2 * q->ambient_dim};
    const auto& g = std::get<FourierGrid>(s);
    return FourierGrid{2.0 * g.half_length, 2 * g.points};
}

inline std::string describe(const SpaceModel& s) {
    if (const auto* q = std::get_if<SequenceTruncation>(&s)) return "sequence(N=" + std::to_string(q->ambient_dim) + ")";
    const auto& g = std::get<FourierGrid>(s);
    return "grid(L=" + std::to_string(g.half_length) + ", N=" + std::to_string(g.points) + ")";
}

struct TruncatedOperator {
    SpaceModel space;
    ComplexMatrix matrix;
    std::string label;

    TruncatedOperator() = default;
    TruncatedOperator(SpaceModel s, ComplexMatrix m, std::string l = {})
        : space(std::move(s)), matrix(std::move(m)), label(std::move(l)) {
        require_square(matrix, "TruncatedOperator");
        if (matrix.rows() != dimension(space))
            throw DimensionError("TruncatedOperator: matrix dim " + std::to_string(matrix.rows()) +
                                 " does not match space dim " + std::to_string(dimension(space)));
    }
    Index dim() const { return matrix.rows(); }
};

inline void require_same_space(const TruncatedOperator& a, const TruncatedOperator& b, const char* who) {
    if (!(a.space == b.space)) throw DimensionError(std::string(who) + ": operators live on different spaces");
}

class CompressionSchedule {
public:
    CompressionSchedule() = default;
    CompressionSchedule(std::vector<Index> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) throw PreconditionError("CompressionSchedule: empty schedule");
        for (Index i = 0; i < dims_.size(); ++i) {
            if (dims_[i] == 0) throw PreconditionError("CompressionSchedule: dims must be positive");
            if (i > 0 && dims_[i] <= dims_[i - 1])
                throw PreconditionError("CompressionSchedule: dims must be strictly increasing");
        }
    }
    CompressionSchedule(std::initializer_list<Index> dims) : CompressionSchedule(std::vector<Index>(dims)) {}

    const std::vector<Index>& dims() const { return dims_; }
    Index max() const { return dims_.back(); }
    Index size() const { return dims_.size(); }
    bool empty() const { return dims_.empty(); }
    auto begin() const { return dims_.begin(); }
    auto end() const { return dims_.end(); }

private:
    std::vector<Index> dims_;
};

inline CompressionSchedule default_sequence_schedule() { return {10, 20, 40, 80, 120}; }
inline CompressionSchedule default_grid_schedule() { return {64, 128, 256, 384}; }

/// First m discrete Hermite functions on the grid, orthonormal in C^N.
/// Columns are the sampled psi_n * sqrt(h), then re-orthonormalized by two
/// passes of modified Gram-Schmidt.
inline ComplexMatrix hermite_window_basis(const FourierGrid& g, Index m) {
    const Index n = g.points;
    if (m > n) throw PreconditionError("hermite_window_basis: window exceeds grid");
    const double h = g.spacing();
    std::vector<std::vector<double>> cols(m, std::vector<double>(n));
    for (Index j = 0; j < n; ++j) {
        const double x = g.position(j);
        double prev = 0.0;
        double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
        for (Index k = 0; k < m; ++k) {
            cols[k][j] = cur * std::sqrt(h);
            const double kk = static_cast<double>(k + 1);
            const double next = std::sqrt(2.0 / kk) * x * cur - std::sqrt((kk - 1.0) / kk) * prev;
            prev = cur;
            cur = next;
        }
    }
    for (int pass = 0; pass < 2; ++pass)
        for (Index k = 0; k < m; ++k) {
            auto& v = cols[k];
            for (Index q = 0; q < k; ++q) {
                double d = 0.0;
                for (Index j = 0; j < n; ++j) d += cols[q][j] * v[j];
                for (Index j = 0; j < n; ++j) v[j] -= d * cols[q][j];
            }
            double nrm = 0.0;
            for (double x : v) nrm += x * x;
            nrm = std::sqrt(nrm);
            if (!(nrm > 0.0)) throw PreconditionError("hermite_window_basis: window too large for the grid");
            for (double& x : v) x /= nrm;
        }
    ComplexMatrix out(n, m);
    for (Index k = 0; k < m; ++k)
        for (Index j = 0; j < n; ++j) out(j, k) = cols[k][j];
    return out;
}

/// Window bases for every m up to max_m on one space. Built once, sliced per m.
class CompressionBasis {
public:
    CompressionBasis(const SpaceModel& space, Index max_m) : space_(space), max_m_(max_m) {
        if (max_m > dimension(space)) throw PreconditionError("compress: window exceeds ambient dimension");
        if (const auto* g = std::get_if<FourierGrid>(&space)) basis_ = hermite_window_basis(*g, max_m);
    }

    Index max_window() const { return max_m_; }

    /// The max_m x max_m compression. Every smaller window is its leading block.
    ComplexMatrix project(const ComplexMatrix& k) const {
        if (k.rows() != dimension(space_) || !k.is_square())
            throw DimensionError("compress: operator does not match the space");
        if (std::holds_alternative<SequenceTruncation>(space_)) return leading_block(k, max_m_, max_m_);
        return adjoint_times(basis_, k * basis_);
    }

    ComplexMatrix compress(const ComplexMatrix& k, Index m) const {
        if (m == 0 || m > max_m_) throw PreconditionError("compress: m = " + std::to_string(m) + " out of range");
        return leading_block(project(k), m, m);
    }

    const ComplexMatrix& basis() const { return basis_; }

private:
    SpaceModel space_;
    Index max_m_;
    ComplexMatrix basis_;
};

inline ComplexMatrix compress(const TruncatedOperator& op, Index m) {
    return CompressionBasis(op.space, m).compress(op.matrix, m);
}

}  // namespace fcl
