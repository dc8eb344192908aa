// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "fcl/linalg/householder.hpp"
#include "fcl/linalg/matrix.hpp"

namespace fcl {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seeded generator with a fully specified output stream: mt19937_64 words
/// mapped to doubles through the top 53 bits. std distributions are not used
/// because their algorithms are implementation-defined. Independent streams
/// for one seed are seeded with splitmix64(seed + index * golden).
class Rng {
public:
    static constexpr std::string_view algorithm = "mt19937_64/u53/splitmix64-streams";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix64(seed + index * 0x9E3779B97F4A7C15ull));
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Real and imaginary parts uniform in [-1, 1).
    cplx complex_box() {
        const double re = uniform(-1.0, 1.0);
        const double im = uniform(-1.0, 1.0);
        return {re, im};
    }

private:
    std::mt19937_64 engine_;
};

inline ComplexMatrix random_matrix(Rng& rng, Index rows, Index cols) {
    ComplexMatrix m(rows, cols);
    for (auto& z : m.data()) z = rng.complex_box();
    return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, Index n) {
    const ComplexMatrix x = random_matrix(rng, n, n);
    return 0.5 * (x + adjoint(x));
}

/// Unitary factor of a Householder QR of a random matrix.
inline ComplexMatrix random_unitary(Rng& rng, Index n) {
    ComplexMatrix a = random_matrix(rng, n, n);
    ComplexMatrix q = identity(n);
    for (Index k = 0; k + 1 < n; ++k) {
        std::vector<cplx> x(n - k);
        for (Index i = k; i < n; ++i) x[i - k] = a(i, k);
        const auto r = detail::make_reflector(x);
        detail::apply_left(r, a, k, k, n);
        detail::apply_right(r, q, 0, n, k);
    }
    return q;
}

}  // namespace fcl
