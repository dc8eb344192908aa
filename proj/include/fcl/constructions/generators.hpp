// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file generators.hpp
 * @brief Seeded operator pairs for the determinant experiments.
 *
 * Every generator consumes its Rng in a fixed order, so a seed and the
 * parameters determine the matrices bit for bit.
 */

#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "fcl/constructions/random.hpp"
#include "fcl/constructions/shifts.hpp"
#include "fcl/linalg.hpp"
#include "fcl/operators/space.hpp"

namespace fcl {

/// Entries decay^{max(j,k)} * box (1-based j, k), zero beyond the band when
/// band >= 0. Draws go shell by shell in max(j,k), so the leading block does
/// not depend on n.
inline ComplexMatrix decaying_random(Rng& rng, Index n, double decay, long band = -1) {
    ComplexMatrix c(n, n);
    const auto put = [&](Index j, Index k) {
        const cplx z = rng.complex_box();
        if (band >= 0 && std::labs(static_cast<long>(j) - static_cast<long>(k)) > band) return;
        c(j, k) = std::pow(decay, static_cast<double>(std::max(j, k) + 1)) * z;
    };
    for (Index s = 0; s < n; ++s) {
        for (Index t = 0; t < s; ++t) {
            put(t, s);
            put(s, t);
        }
        put(s, s);
    }
    return c;
}

struct OperatorPair {
    TruncatedOperator a, b;
};

/// A = e^C, B = e^D with C, D entries bounded by decay^{max(j,k)}. With
/// unitary = true the exponents are i times Hermitian, so A and B are unitary.
inline OperatorPair random_theorem1_pair(std::uint64_t seed, const SpaceModel& space, double decay,
                                         bool unitary = false) {
    if (!(decay >= 0.0)) throw PreconditionError("random_theorem1_pair: decay must be non-negative");
    const Index n = sequence_dim(space, "random_theorem1_pair");
    const auto exponent = [&](std::uint64_t stream) {
        Rng rng = Rng::stream(seed, stream);
        ComplexMatrix c = decaying_random(rng, n, decay);
        if (unitary) c = cplx{0.0, 0.5} * (c + adjoint(c));
        return c;
    };
    const ComplexMatrix c = exponent(0);
    const ComplexMatrix d = exponent(1);
    return {{space, expm(c), "e^C"}, {space, expm(d), "e^D"}};
}

inline ComplexMatrix random_banded(Rng& rng, Index n, long band, double decay) {
    return decaying_random(rng, n, decay, band);
}

inline double inverse_square_weight(Index n) { return 1.0 / (static_cast<double>(n) * static_cast<double>(n)); }

/// C e_n = w_n e_{n+1}; nilpotent at every truncation.
inline TruncatedOperator quasinilpotent_example(const SpaceModel& space,
                                                const std::function<double(Index)>& weight = inverse_square_weight) {
    const Index n = sequence_dim(space, "quasinilpotent_example");
    ComplexMatrix c(n, n);
    for (Index i = 0; i + 1 < n; ++i) c(i + 1, i) = weight(i + 1);
    return {space, std::move(c), "C"};
}

/// ||C^p|| for the weighted shift: the largest product of p consecutive weights.
inline double weighted_shift_power_norm(Index ambient, int p, const std::function<double(Index)>& weight) {
    if (p <= 0) return 1.0;
    double best = 0.0;
    for (Index j = 1; j + p <= ambient; ++j) {
        double prod = 1.0;
        for (int q = 0; q < p; ++q) prod *= weight(j + q);
        best = std::max(best, prod);
    }
    return best;
}

struct ConjecturePair {
    TruncatedOperator a, b;
    double slow = 0.0, fast = 0.0;
};

namespace detail {

// I + sum_k k^{-1/2} u_k v_k^*: u_k lives on even indices around 2k with profile
// fast^|j| (plus a fast^k leak onto odd indices), v_k on odd indices around
// 2k + 1 with profile slow^|j|.
inline ComplexMatrix paired_rank_sum(Rng& rng, Index n, double slow, double fast) {
    constexpr long reach = 6;
    ComplexMatrix s(n, n);
    std::vector<cplx> u(n), v(n);
    for (Index k = 1; 2 * k + 2 * reach + 1 < n; ++k) {
        std::fill(u.begin(), u.end(), cplx{0.0});
        std::fill(v.begin(), v.end(), cplx{0.0});
        for (long j = -reach; j <= reach; ++j) {
            const long ue = 2 * static_cast<long>(k) + 2 * j;
            const long vo = ue + 1;
            const double fu = std::pow(fast, std::labs(j)), fv = std::pow(slow, std::labs(j));
            const cplx zu = rng.complex_box(), zv = rng.complex_box();
            if (ue >= 0) u[ue] += fu * zu;
            if (vo >= 0) v[vo] += fv * zv;
        }
        u[2 * k + 1] += 0.1 * std::pow(fast, static_cast<double>(k)) * rng.complex_box();
        double nu = 0.0, nv = 0.0;
        for (Index i = 0; i < n; ++i) {
            nu += std::norm(u[i]);
            nv += std::norm(v[i]);
        }
        const double sigma = 1.0 / std::sqrt(static_cast<double>(k)) / std::sqrt(nu * nv);
        for (Index i = 0; i < n; ++i) {
            if (u[i] == cplx{0.0}) continue;
            for (Index j = 0; j < n; ++j)
                if (v[j] != cplx{0.0}) s(i, j) += sigma * u[i] * std::conj(v[j]);
        }
    }
    return add_identity(s);
}

}  // namespace detail

/// A, B built so that the (A-I)(B-I) products are small while A* - I and
/// B - I overlap. Whether condition (iii) actually fails is left to the
/// diagnostics.
inline ConjecturePair random_conjecture_pair(std::uint64_t seed, const SpaceModel& space, double slow_decay,
                                             double fast_decay) {
    if (!(slow_decay >= fast_decay && fast_decay > 0.0 && slow_decay < 1.0))
        throw PreconditionError("random_conjecture_pair: need 1 > slow_decay >= fast_decay > 0");
    const Index n = sequence_dim(space, "random_conjecture_pair");
    Rng ra = Rng::stream(seed, 0), rb = Rng::stream(seed, 1);
    ComplexMatrix a = detail::paired_rank_sum(ra, n, slow_decay, fast_decay);
    ComplexMatrix b = detail::paired_rank_sum(rb, n, slow_decay, fast_decay);
    return {{space, std::move(a), "A"}, {space, std::move(b), "B"}, slow_decay, fast_decay};
}

struct SplitPair {
    TruncatedOperator a;  // normal
    TruncatedOperator b;  // exponent, i times Hermitian
    std::vector<cplx> spectrum;
};

/// Normal A = W diag(lambda) W^* with lambda_n = 2 pi i j_n + eps_n, where
/// eps_n = 0.9 * 0.6^n for the first `offsets` eigenvalues and 0 after them.
/// W mixes the leading `mixing` coordinates. B = iH, H banded Hermitian.
inline SplitPair spectral_split_pair(std::uint64_t seed, const SpaceModel& space, Index offsets = 6,
                                     Index mixing = 8) {
    const Index n = sequence_dim(space, "spectral_split_pair");
    Rng rng(seed);
    std::vector<cplx> lambda(n);
    for (Index i = 0; i < n; ++i) {
        const double j = std::floor(rng.uniform(-2.0, 3.0));
        const double eps = i < offsets ? 0.9 * std::pow(0.6, static_cast<double>(i + 1)) : 0.0;
        lambda[i] = cplx{eps, 2.0 * std::numbers::pi * j};
    }
    const Index w = std::min(mixing, n);
    const ComplexMatrix small = random_unitary(rng, w);
    ComplexMatrix u = identity(n);
    for (Index i = 0; i < w; ++i)
        for (Index j = 0; j < w; ++j) u(i, j) = small(i, j);
    ComplexMatrix a = times_adjoint(scale_cols(u, lambda), u);
    ComplexMatrix h = random_banded(rng, n, 2, 0.8);
    h = 0.5 * (h + adjoint(h));
    return {{space, std::move(a), "A"}, {space, cplx{0.0, 1.0} * h, "B"}, std::move(lambda)};
}

}  // namespace fcl
