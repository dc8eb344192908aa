// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "fcl/linalg.hpp"
#include "fcl/operators/space.hpp"

namespace fcl {

struct TracePoint {
    Index m = 0;
    cplx trace{0.0};
};

/// Partial traces of k over the growing windows of its space.
inline std::vector<TracePoint> trace_window(const TruncatedOperator& k, const CompressionSchedule& windows) {
    if (windows.empty()) throw PreconditionError("trace_window: empty schedule");
    if (2 * windows.max() > k.dim())
        throw TwoScaleViolation("trace_window: window " + std::to_string(windows.max()) +
                                " exceeds half the ambient dimension");
    std::vector<cplx> diag(windows.max());
    if (std::holds_alternative<SequenceTruncation>(k.space)) {
        for (Index i = 0; i < diag.size(); ++i) diag[i] = k.matrix(i, i);
    } else {
        const CompressionBasis basis(k.space, windows.max());
        const ComplexMatrix& v = basis.basis();
        const ComplexMatrix kv = k.matrix * v;
        for (Index c = 0; c < diag.size(); ++c) {
            cplx s{0.0};
            for (Index j = 0; j < v.rows(); ++j) s += std::conj(v(j, c)) * kv(j, c);
            diag[c] = s;
        }
    }
    std::vector<TracePoint> out;
    cplx run{0.0};
    Index next = 0;
    for (Index m : windows) {
        for (; next < m; ++next) run += diag[next];
        out.push_back({m, run});
    }
    return out;
}

struct Winding {
    long k = 0;
    double residual = 0.0;
};

/// Nearest point 2 pi i k of the lattice 2 pi i Z.
inline Winding winding_integer(cplx t) {
    const double period = 2.0 * std::numbers::pi;
    Winding w;
    w.k = std::lround(t.imag() / period);
    w.residual = std::abs(t - cplx{0.0, period * static_cast<double>(w.k)});
    return w;
}

struct Plateau {
    Index first = 0;  // index into the trace table
    Index length = 0;
    cplx value{0.0};
};

/// Longest run of >= min_length consecutive windows whose values lie within
/// width of each other; ties go to the larger windows. The value is the run mean.
inline std::optional<Plateau> find_plateau(const std::vector<TracePoint>& table, double width, Index min_length = 3) {
    std::optional<Plateau> best;
    for (Index i = 0; i < table.size(); ++i) {
        Index j = i + 1;
        for (; j < table.size(); ++j) {
            bool ok = true;
            for (Index q = i; q < j; ++q) ok = ok && std::abs(table[q].trace - table[j].trace) <= width;
            if (!ok) break;
        }
        const Index len = j - i;
        if (len >= min_length && (!best || len >= best->length)) {
            cplx s{0.0};
            for (Index q = i; q < j; ++q) s += table[q].trace;
            best = Plateau{i, len, s / static_cast<double>(len)};
        }
    }
    return best;
}

}  // namespace fcl
