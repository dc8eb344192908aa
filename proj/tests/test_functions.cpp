// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numbers>

#include "fcl/constructions/random.hpp"
#include "fcl/linalg.hpp"
#include "support/oracles.hpp"

using namespace fcl;
using std::numbers::pi;

TEST_CASE("expm of zero is the identity") {
    CHECK(expm(ComplexMatrix(4, 4)) == identity(4));
}

TEST_CASE("expm of a diagonal") {
    const std::vector<cplx> d{std::log(2.0), 0.0};
    const auto e = expm(diagonal(d));
    CHECK(std::abs(e(0, 0) - 2.0) < 1e-15);
    CHECK(std::abs(e(1, 1) - 1.0) < 1e-15);
    CHECK(std::abs(e(0, 1)) == 0.0);
}

TEST_CASE("expm of a square-zero matrix is I + C exactly") {
    // C = M L with M e_n = n^{-1/2} e_n on even n: C^2 = 0.
    const Index n = 12;
    ComplexMatrix c(n, n);
    for (Index j = 2; j <= n; j += 2)
        if (j + 1 <= n) c(j - 1, j) = 1.0 / std::sqrt(static_cast<double>(j));
    REQUIRE(max_abs(c * c) == 0.0);
    CHECK(expm(c) == add_identity(c));
}

TEST_CASE("expm agrees with the eigen route on a normal matrix") {
    Rng rng(41);
    const auto u = random_unitary(rng, 10);
    std::vector<cplx> d, ed;
    for (int i = 0; i < 10; ++i) {
        d.push_back(2.0 * rng.complex_box());
        ed.push_back(std::exp(d.back()));
    }
    const auto m = times_adjoint(u * diagonal(d), u);
    const auto ref = times_adjoint(u * diagonal(ed), u);
    CHECK(frobenius_norm(expm(m) - ref) < 1e-12 * frobenius_norm(ref));
}

TEST_CASE("logm_normal examples") {
    CHECK(max_abs(logm_normal(identity(3))) < 1e-15);
    const std::vector<cplx> d{std::exp(2.0), std::exp(-1.0)};
    const auto l = logm_normal(diagonal(d));
    CHECK(std::abs(l(0, 0) - 2.0) < 1e-14);
    CHECK(std::abs(l(1, 1) + 1.0) < 1e-14);
    const std::vector<cplx> u{cplx{0.0, 1.0}, cplx{0.0, -1.0}};
    const auto lu = logm_normal(diagonal(u));
    CHECK(std::abs(lu(0, 0) - cplx{0.0, pi / 2}) < 1e-15);
    CHECK(std::abs(lu(1, 1) - cplx{0.0, -pi / 2}) < 1e-15);
}

TEST_CASE("logm_normal errors") {
    const std::vector<cplx> zero{1.0, 0.0};
    CHECK_THROWS_AS(logm_normal(diagonal(zero)), BranchCutError);
    const std::vector<cplx> cut{1.0, -1.0};
    CHECK_THROWS_AS(logm_normal(diagonal(cut)), BranchCutError);
    const ComplexMatrix jordan{{1.0, 1.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(logm_normal(jordan), PreconditionError);
}

TEST_CASE("polar of a positive definite matrix is trivial") {
    Rng rng(42);
    const auto x = random_matrix(rng, 5, 5);
    const auto p = add_identity(adjoint_times(x, x), 0.5);
    const auto pol = polar(p);
    CHECK(distance_to_identity(pol.u) < 1e-12);
    CHECK(frobenius_norm(pol.p - p) < 1e-12 * frobenius_norm(p));
}

TEST_CASE("polar of the permuted diagonal") {
    const ComplexMatrix m{{0.0, 2.0}, {1.0, 0.0}};
    const auto pol = polar(m);
    const ComplexMatrix u{{0.0, 1.0}, {1.0, 0.0}};
    const std::vector<cplx> pd{1.0, 2.0};
    CHECK(oracle::max_entry_distance(pol.u, u) < 1e-15);
    CHECK(oracle::max_entry_distance(pol.p, diagonal(pd)) < 1e-15);
}

TEST_CASE("polar of a random invertible 6x6 reconstructs") {
    Rng rng(43);
    const auto m = add_identity(random_matrix(rng, 6, 6), 1.5);
    const auto pol = polar(m);
    CHECK(unitarity_defect(pol.u) <= 1e-10 * 6);
    CHECK(frobenius_norm(m - pol.u * pol.p) <= 1e-10 * frobenius_norm(m) * 6);
    CHECK(hermiticity_defect(pol.p) == 0.0);
    for (auto ev : eigenvalues(pol.p)) CHECK(ev.real() > 0.0);
}

TEST_CASE("polar refuses singular input") {
    const ComplexMatrix m{{1.0, 1.0}, {1.0, 1.0}};
    CHECK_THROWS_AS(polar(m), SingularMatrixError);
}

TEST_CASE("spectral projection onto the lattice 2 pi i Z") {
    const std::vector<cplx> d{0.0, cplx{0.0, 2.0 * pi}, cplx{1.0, 0.1}};
    const auto p = spectral_projection(diagonal(d), lattice_neighbourhood(1e-6));
    const std::vector<cplx> ref{1.0, 1.0, 0.0};
    CHECK(oracle::max_entry_distance(p, diagonal(ref)) < 1e-15);
}

TEST_CASE("spectral projection onto the whole plane is the identity") {
    Rng rng(44);
    const auto h = random_hermitian(rng, 6);
    CHECK(distance_to_identity(spectral_projection(h, whole_plane())) < 1e-12);
}

TEST_CASE("spectral projection matches the sorted-eigenvalue oracle") {
    Rng rng(45);
    const auto u = random_unitary(rng, 4);
    const std::vector<cplx> d{-2.0, -0.5, 0.7, 3.0};
    const auto h = times_adjoint(u * diagonal(d), u);
    const auto p = spectral_projection(h, right_half_plane(0.0));
    // Projection onto the eigenvectors of the two largest eigenvalues.
    ComplexMatrix v(4, 2);
    for (Index i = 0; i < 4; ++i) {
        v(i, 0) = u(i, 2);
        v(i, 1) = u(i, 3);
    }
    CHECK(frobenius_norm(p - times_adjoint(v, v)) < 1e-12);
}

TEST_CASE("spectral projection refuses boundary eigenvalues") {
    const std::vector<cplx> d{0.5, 1.0};
    CHECK_THROWS_AS(spectral_projection(diagonal(d), away_from_lattice(0.5)), AmbiguousSpectrumError);
}
