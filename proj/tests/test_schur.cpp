// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numbers>

#include "fcl/constructions/random.hpp"
#include "fcl/linalg.hpp"
#include "support/oracles.hpp"

using namespace fcl;

namespace {

void check_schur(const ComplexMatrix& m, const Schur& s) {
    const double dim = static_cast<double>(m.rows());
    const double scale = std::max(frobenius_norm(m), 1e-300);
    CHECK(frobenius_norm(m - times_adjoint(s.q * s.t, s.q)) <= 1e-10 * scale * dim);
    CHECK(unitarity_defect(s.q) <= 1e-10 * dim);
    for (Index i = 1; i < m.rows(); ++i)
        for (Index j = 0; j < i; ++j) CHECK(s.t(i, j) == cplx{0.0});
}

}  // namespace

TEST_CASE("already triangular input is left alone") {
    const ComplexMatrix m{{1.0, 2.0, 3.0}, {0.0, cplx{0.0, 1.0}, 5.0}, {0.0, 0.0, -2.0}};
    const auto s = schur(m);
    CHECK(oracle::max_entry_distance(s.q, identity(3)) < 1e-15);
    CHECK(oracle::max_entry_distance(s.t, m) < 1e-15);
}

TEST_CASE("normal input gives a diagonal Schur factor") {
    Rng rng(31);
    const auto u = random_unitary(rng, 12);
    std::vector<cplx> d;
    for (int i = 0; i < 12; ++i) d.push_back(rng.complex_box() * 3.0);
    const auto m = times_adjoint(u * diagonal(d), u);
    const auto s = schur(m);
    check_schur(m, s);
    double off = 0.0;
    for (Index i = 0; i < 12; ++i)
        for (Index j = i + 1; j < 12; ++j) off = std::max(off, std::abs(s.t(i, j)));
    CHECK(off < 1e-10);
}

TEST_CASE("companion matrix of z^4 - 1 has the fourth roots of unity") {
    ComplexMatrix c(4, 4);
    for (Index i = 1; i < 4; ++i) c(i, i - 1) = 1.0;
    c(0, 3) = 1.0;
    auto ev = eigenvalues(c);
    const std::vector<cplx> roots{1.0, cplx{0.0, 1.0}, -1.0, cplx{0.0, -1.0}};
    for (const auto& r : roots) {
        const auto it = std::min_element(ev.begin(), ev.end(),
                                         [&](cplx a, cplx b) { return std::abs(a - r) < std::abs(b - r); });
        CHECK(std::abs(*it - r) < 1e-12);
    }
}

TEST_CASE("residuals on seeded random matrices up to dimension 64") {
    Rng rng(32);
    for (int rep = 0; rep < 100; ++rep) {
        const Index n = 1 + (rep * 7) % 64;
        const auto m = random_matrix(rng, n, n);
        check_schur(m, schur(m));
    }
}

TEST_CASE("Hermitian spectra agree with the Jacobi oracle") {
    Rng rng(33);
    const auto h = random_hermitian(rng, 10);
    auto ev = eigenvalues(h);
    std::vector<double> re;
    for (auto z : ev) re.push_back(z.real());
    std::sort(re.begin(), re.end());
    const auto ref = oracle::jacobi_hermitian_eigenvalues(h);
    for (Index i = 0; i < 10; ++i) CHECK(std::abs(re[i] - ref[i]) < 1e-12);
}

TEST_CASE("iteration cap produces an explicit error") {
    Rng rng(34);
    const auto m = random_matrix(rng, 20, 20);
    Tolerances tol;
    tol.schur_iterations_per_dim = 0;
    CHECK_THROWS_AS(schur(m, tol), ConvergenceError);
}

TEST_CASE("eigen_normal residual is small for normal input") {
    Rng rng(35);
    const auto u = random_unitary(rng, 16);
    std::vector<cplx> d;
    for (int i = 0; i < 16; ++i) d.push_back(std::exp(cplx{0.0, 2.0 * std::numbers::pi * i / 16.0}));
    const auto m = times_adjoint(u * diagonal(d), u);
    const auto e = eigen_normal(m);
    CHECK(e.residual < 1e-12);
    CHECK(unitarity_defect(e.vectors) <= 1e-10 * 16);
}
