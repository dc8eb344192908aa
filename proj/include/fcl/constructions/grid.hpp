// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file grid.hpp
 * @brief Position and momentum on a periodic Fourier grid.
 *
 * p = i d/dx acts on the plane wave e^{i w x} with eigenvalue -w, so
 * p = W diag(-w_k) W^* with W_{jk} = e^{i w_k x_j} / sqrt(N). Functions of p
 * are circulant matrices and are built directly from their symbol.
 */

#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "fcl/linalg.hpp"
#include "fcl/operators/space.hpp"

namespace fcl {

inline const FourierGrid& grid_of(const SpaceModel& s, const char* who) {
    const auto* g = std::get_if<FourierGrid>(&s);
    if (!g) throw PreconditionError(std::string(who) + ": needs a Fourier grid");
    return *g;
}

/// t -> k * 2 pi i t / <t>, <t> = (1 + t^2)^{1/2}
struct GridFunctions {
    int k = 1;
    cplx operator()(double t) const {
        return cplx{0.0, 2.0 * std::numbers::pi * k * t / std::sqrt(1.0 + t * t)};
    }
};

/// Momentum lattice w_k = (pi / L) k, k = -N/2 .. N/2 - 1.
inline std::vector<double> momentum_lattice(const FourierGrid& g) {
    std::vector<double> w(g.points);
    const long half = static_cast<long>(g.points / 2);
    for (Index i = 0; i < g.points; ++i)
        w[i] = std::numbers::pi / g.half_length * static_cast<double>(static_cast<long>(i) - half);
    return w;
}

/// W_{jk} = e^{i w_k x_j} / sqrt(N)
inline ComplexMatrix plane_wave_matrix(const FourierGrid& g) {
    const auto w = momentum_lattice(g);
    const Index n = g.points;
    ComplexMatrix f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) f(j, k) = scale * std::polar(1.0, w[k] * g.position(j));
    return f;
}

/// Sign of the momentum eigenvalue on a plane wave relative to its frequency.
inline constexpr int momentum_sign = -1;

/// g(p): the circulant with entries (1/N) sum_k g(-w_k) e^{i w_k (x_j - x_l)}.
inline ComplexMatrix momentum_function(const FourierGrid& grid, const std::function<cplx(double)>& g) {
    const Index n = grid.points;
    const auto w = momentum_lattice(grid);
    std::vector<cplx> twiddle(n), symbol(n), column(n);
    for (Index r = 0; r < n; ++r) twiddle[r] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
    for (Index k = 0; k < n; ++k) symbol[k] = g(momentum_sign * w[k]);
    const long half = static_cast<long>(n / 2);
    for (Index d = 0; d < n; ++d) {
        cplx s{0.0};
        for (Index k = 0; k < n; ++k) {
            const long kk = static_cast<long>(k) - half;
            const long r = ((kk * static_cast<long>(d)) % static_cast<long>(n) + static_cast<long>(n)) % static_cast<long>(n);
            s += symbol[k] * twiddle[static_cast<Index>(r)];
        }
        column[d] = s / static_cast<double>(n);
    }
    ComplexMatrix m(n, n);
    for (Index j = 0; j < n; ++j)
        for (Index l = 0; l < n; ++l) m(j, l) = column[(j + n - l) % n];
    return m;
}

inline ComplexMatrix position_function(const FourierGrid& grid, const std::function<cplx(double)>& g) {
    std::vector<cplx> d(grid.points);
    for (Index j = 0; j < grid.points; ++j) d[j] = g(grid.position(j));
    return diagonal(d);
}

struct GridOperators {
    TruncatedOperator x_op, p_op, f_of_x, f_of_p;
};

inline GridOperators fourier_grid_ops(const SpaceModel& s, GridFunctions f = {}) {
    const auto& g = grid_of(s, "fourier_grid_ops");
    const auto real = [](double t) { return cplx{t}; };
    return {{s, position_function(g, real), "x"},
            {s, momentum_function(g, real), "p"},
            {s, position_function(g, f), "f(x)"},
            {s, momentum_function(g, f), "f(p)"}};
}

}  // namespace fcl
