// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <vector>

#include "fcl/linalg.hpp"
#include "fcl/operators/space.hpp"

namespace fcl {

inline Index sequence_dim(const SpaceModel& s, const char* who) {
    const auto* q = std::get_if<SequenceTruncation>(&s);
    if (!q) throw PreconditionError(std::string(who) + ": needs a sequence space");
    return q->ambient_dim;
}

/// R e_n = e_{n+1}; the last basis vector is sent to 0.
inline TruncatedOperator shift_forward(const SpaceModel& s) {
    const Index n = sequence_dim(s, "shift_forward");
    ComplexMatrix r(n, n);
    for (Index i = 0; i + 1 < n; ++i) r(i + 1, i) = 1.0;
    return {s, std::move(r), "R"};
}

/// L e_n = e_{n-1}, L e_1 = 0.
inline TruncatedOperator shift_backward(const SpaceModel& s) {
    const Index n = sequence_dim(s, "shift_backward");
    ComplexMatrix l(n, n);
    for (Index i = 0; i + 1 < n; ++i) l(i, i + 1) = 1.0;
    return {s, std::move(l), "L"};
}

/// e^{zR} (forward) or e^{zL} from the terminating series sum_k z^k S^k / k!.
/// Truncated shifts are nilpotent, so this is the exact exponential.
inline TruncatedOperator shift_exponential(const SpaceModel& s, cplx z, bool forward) {
    const Index n = sequence_dim(s, "shift_exponential");
    std::vector<cplx> coef(n);
    coef[0] = 1.0;
    for (Index k = 1; k < n; ++k) coef[k] = coef[k - 1] * z / static_cast<double>(k);
    ComplexMatrix e(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index k = 0; i + k < n; ++k) {
            if (forward)
                e(i + k, i) = coef[k];
            else
                e(i, i + k) = coef[k];
        }
    return {s, std::move(e), forward ? "e^{zR}" : "e^{zL}"};
}

/// M e_n = n^{-1/2} e_n for even n, 0 for odd n (1-based).
inline TruncatedOperator weighted_multiplier(const SpaceModel& s) {
    const Index n = sequence_dim(s, "weighted_multiplier");
    ComplexMatrix m(n, n);
    for (Index j = 2; j <= n; j += 2) m(j - 1, j - 1) = 1.0 / std::sqrt(static_cast<double>(j));
    return {s, std::move(m), "M"};
}

struct CommutatorSign {
    int sign = 0;              // [R, L] = sign * P_1 + boundary term
    ComplexMatrix commutator;  // [R, L] at N = 4
};

/// Fixes the sign of [R, L] on the first basis vector from a 4 x 4 truncation.
inline CommutatorSign commutator_sign_oracle() {
    const auto s = sequence_space(4);
    CommutatorSign out;
    out.commutator = commutator(shift_forward(s).matrix, shift_backward(s).matrix);
    out.sign = out.commutator(0, 0).real() > 0.0 ? 1 : -1;
    return out;
}

}  // namespace fcl
