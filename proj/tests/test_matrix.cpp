// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <limits>

#include "fcl/constructions/random.hpp"
#include "fcl/linalg.hpp"
#include "support/oracles.hpp"

using namespace fcl;

TEST_CASE("identity times m is m") {
    Rng rng(1);
    const auto m = random_matrix(rng, 3, 3);
    CHECK(identity(3) * m == m);
}

TEST_CASE("nilpotent 2x2 squares to zero") {
    const ComplexMatrix n{{0.0, 1.0}, {0.0, 0.0}};
    const auto sq = n * n;
    CHECK(max_abs(sq) == 0.0);
}

TEST_CASE("multiply matches the triple-loop oracle") {
    Rng rng(2);
    for (Index n : {2u, 5u, 17u}) {
        const auto a = random_matrix(rng, n, n + 1);
        const auto b = random_matrix(rng, n + 1, n);
        CHECK(oracle::max_entry_distance(a * b, oracle::naive_multiply(a, b)) < 1e-13);
        CHECK(oracle::max_entry_distance(adjoint_times(b, b), oracle::naive_multiply(adjoint(b), b)) < 1e-13);
        CHECK(oracle::max_entry_distance(times_adjoint(a, a), oracle::naive_multiply(a, adjoint(a))) < 1e-13);
    }
}

TEST_CASE("multiply rejects mismatched shapes") {
    CHECK_THROWS_AS(multiply(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), DimensionError);
    CHECK_THROWS_AS(commutator(ComplexMatrix(2, 2), ComplexMatrix(3, 3)), DimensionError);
    CHECK_THROWS_AS(trace(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("construction rejects non-finite entries and bad sizes") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {cplx{nan, 0.0}}), PreconditionError);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, {cplx{1.0}}), DimensionError);
}

TEST_CASE("self-commutator vanishes and finite commutators are traceless") {
    Rng rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        const Index n = 2 + rep;
        const auto a = random_matrix(rng, n, n);
        const auto b = random_matrix(rng, n, n);
        CHECK(max_abs(commutator(a, a)) == 0.0);
        const double scale = frobenius_norm(a) * frobenius_norm(b) * static_cast<double>(n);
        CHECK(std::abs(trace(commutator(a, b))) <= 1e-10 * scale);
    }
}

TEST_CASE("schatten-1 norm of a diagonal is the sum of moduli") {
    const std::vector<cplx> d{1.0, -2.0, cplx{0.0, 3.0}};
    CHECK(schatten1(diagonal(d)) == Catch::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("adjoint reverses products and commutators") {
    Rng rng(4);
    for (int rep = 0; rep < 100; ++rep) {
        const auto a = random_matrix(rng, 8, 8);
        const auto b = random_matrix(rng, 8, 8);
        CHECK(oracle::max_entry_distance(adjoint(a * b), adjoint(b) * adjoint(a)) < 1e-13);
        CHECK(oracle::max_entry_distance(adjoint(commutator(a, b)), commutator(adjoint(b), adjoint(a))) < 1e-13);
    }
}

TEST_CASE("row and column scaling agree with diagonal products") {
    Rng rng(5);
    const auto m = random_matrix(rng, 4, 4);
    const std::vector<cplx> d{1.0, cplx{0.0, 2.0}, -3.0, cplx{1.0, 1.0}};
    CHECK(oracle::max_entry_distance(scale_rows(d, m), diagonal(d) * m) < 1e-14);
    CHECK(oracle::max_entry_distance(scale_cols(m, d), m * diagonal(d)) < 1e-14);
}
