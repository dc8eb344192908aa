// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "fcl/constructions/random.hpp"
#include "fcl/linalg.hpp"
#include "support/oracles.hpp"

using namespace fcl;

TEST_CASE("diagonal inverse and logdet") {
    const std::vector<cplx> d{2.0, 3.0};
    const auto r = lu_solve_and_logdet(diagonal(d));
    CHECK(std::abs(r.inverse(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(r.inverse(1, 1) - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(r.logdet - std::log(6.0)) < 1e-15);
}

TEST_CASE("unit upper triangular matrix has logdet zero") {
    // The truncated exponential of a shift is unit triangular.
    const Index n = 50;
    ComplexMatrix m = identity(n);
    for (Index k = 1; k < n; ++k) {
        double fact = 1.0;
        for (Index j = 1; j <= k; ++j) fact *= static_cast<double>(j);
        for (Index i = 0; i + k < n; ++i) m(i, i + k) = 1.0 / fact;
    }
    CHECK(std::abs(lu_solve_and_logdet(m).logdet) < 1e-14);
}

TEST_CASE("5x5 determinants match cofactor expansion") {
    Rng rng(11);
    for (int rep = 0; rep < 25; ++rep) {
        auto m = add_identity(random_matrix(rng, 5, 5), 3.0);
        const cplx det = determinant(m);
        const cplx ref = oracle::cofactor_det(m);
        CHECK(std::abs(det - ref) <= 1e-12 * std::abs(ref));
    }
}

TEST_CASE("inverse satisfies its residual bound") {
    Rng rng(12);
    for (Index n : {3u, 16u, 64u}) {
        const auto m = add_identity(random_matrix(rng, n, n), 2.0);
        const auto inv = inverse(m);
        const double kappa = norm1(m) * norm1(inv);
        CHECK(distance_to_identity(m * inv) <= 1e-10 * kappa * static_cast<double>(n));
    }
}

TEST_CASE("logdet survives dimensions where the plain product overflows") {
    const Index n = 400;
    std::vector<cplx> d(n, cplx{0.0, 20.0});
    const LogDet ld = LU(diagonal(d)).logdet();
    CHECK(ld.log_modulus == Catch::Approx(400.0 * std::log(20.0)).epsilon(1e-14));
    // i^400 = 1
    CHECK(std::abs(ld.phase - 1.0) < 1e-10);
}

TEST_CASE("singular matrices raise an explicit error") {
    ComplexMatrix m{{1.0, 2.0}, {2.0, 4.0}};
    CHECK_THROWS_AS(lu_solve_and_logdet(m), SingularMatrixError);
    CHECK_THROWS_AS(lu_solve_and_logdet(ComplexMatrix(3, 3)), SingularMatrixError);
    CHECK_THROWS_AS(lu_solve_and_logdet(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("row swaps flip the determinant sign") {
    ComplexMatrix p{{0.0, 1.0}, {1.0, 0.0}};
    CHECK(std::abs(determinant(p) + 1.0) < 1e-15);
}
