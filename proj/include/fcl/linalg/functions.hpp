// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "fcl/linalg/matrix.hpp"
#include "fcl/linalg/schur.hpp"
#include "fcl/linalg/svd.hpp"
#include "fcl/linalg/tolerances.hpp"

namespace fcl {

namespace detail {

// Row-compressed copy of a matrix with few nonzeros per row.
struct SparseRows {
    std::vector<std::vector<std::pair<Index, cplx>>> rows;

    static std::optional<SparseRows> of(const ComplexMatrix& m, Index max_per_row) {
        SparseRows s;
        s.rows.resize(m.rows());
        for (Index i = 0; i < m.rows(); ++i)
            for (Index j = 0; j < m.cols(); ++j)
                if (m(i, j) != cplx{0.0}) {
                    if (s.rows[i].size() == max_per_row) return std::nullopt;
                    s.rows[i].emplace_back(j, m(i, j));
                }
        return s;
    }

    // x * this
    ComplexMatrix left_multiply(const ComplexMatrix& x) const {
        ComplexMatrix out(x.rows(), x.cols());
        for (Index i = 0; i < x.rows(); ++i) {
            auto o = out.row(i);
            for (Index k = 0; k < x.cols(); ++k) {
                const cplx t = x(i, k);
                if (t == cplx{0.0}) continue;
                for (const auto& [j, v] : rows[k]) o[j] += t * v;
            }
        }
        return out;
    }
};

}  // namespace detail

/// Matrix exponential by scaling and squaring with a truncated Taylor sum.
/// The argument is scaled by 2^-s until its 1-norm is <= 0.5, Taylor terms
/// are summed until a term is below 1e-17 of the partial sum, then squared s times.
inline ComplexMatrix expm(const ComplexMatrix& m, const Tolerances& tol = default_tolerances()) {
    require_square(m, "expm");
    m.require_finite();
    const DenormalGuard guard;
    const Index n = m.rows();
    const double nrm = norm1(m);
    int squarings = 0;
    if (nrm > tol.expm_scaled_norm)
        squarings = static_cast<int>(std::ceil(std::log2(nrm / tol.expm_scaled_norm)));
    ComplexMatrix a = m;
    a *= cplx{std::ldexp(1.0, -squarings)};

    const auto sparse = n > 64 ? detail::SparseRows::of(a, 8) : std::nullopt;
    ComplexMatrix sum = identity(n);
    ComplexMatrix term = identity(n);
    for (int k = 1; k < 64; ++k) {
        term = sparse ? sparse->left_multiply(term) : term * a;
        term *= cplx{1.0 / k};
        sum += term;
        const double tn = norm1(term);
        if (tn == 0.0 || tn < tol.expm_term_ratio * norm1(sum)) break;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

/// g(m) = V diag(g(lambda)) V^* from a unitary eigendecomposition.
inline ComplexMatrix apply_function(const EigenDecomposition& e, const std::function<cplx(cplx)>& g) {
    std::vector<cplx> vals(e.eigenvalues.size());
    for (Index i = 0; i < vals.size(); ++i) vals[i] = g(e.eigenvalues[i]);
    return times_adjoint(scale_cols(e.vectors, vals), e.vectors);
}

inline void require_normal(const ComplexMatrix& m, const char* who, const Tolerances& tol) {
    require_square(m, who);
    const double scale = frobenius_norm(m);
    const double defect = normality_defect(m);
    if (defect > tol.normality * std::max(scale * scale, 1e-300))
        throw PreconditionError(std::string(who) + ": matrix is not normal (||m*m - mm*|| = " +
                                std::to_string(defect) + ")");
}

/// Principal logarithm of a normal matrix. Eigenvalues at zero or within
/// tol.log_branch of the negative real axis (relative to their modulus) are rejected.
inline ComplexMatrix logm_normal(const ComplexMatrix& m, const Tolerances& tol = default_tolerances()) {
    require_normal(m, "logm_normal", tol);
    const auto e = eigen_normal(m, tol);
    for (const auto& lam : e.eigenvalues) {
        const double r = std::abs(lam);
        if (r < tol.log_zero) throw BranchCutError("logm_normal: eigenvalue within log_zero of 0");
        if (lam.real() < 0.0 && std::abs(lam.imag()) <= tol.log_branch * r)
            throw BranchCutError("logm_normal: eigenvalue on the branch cut (negative real axis)");
    }
    return apply_function(e, [](cplx z) { return std::log(z); });
}

struct Polar {
    ComplexMatrix u;  // unitary
    ComplexMatrix p;  // Hermitian positive definite
};

/// m = u p through the SVD: u = U V^*, p = V diag(sigma) V^*.
inline Polar polar(const ComplexMatrix& m, const Tolerances& tol = default_tolerances()) {
    require_square(m, "polar");
    const SVD s = svd(m, tol);
    const double top = s.sigma.empty() ? 0.0 : s.sigma.front();
    const double bottom = s.sigma.empty() ? 0.0 : s.sigma.back();
    if (!(bottom > tol.polar_singular * top))
        throw SingularMatrixError("polar: smallest singular value " + std::to_string(bottom) +
                                  " is below polar_singular * ||m||");
    std::vector<cplx> sig(s.sigma.begin(), s.sigma.end());
    Polar out{times_adjoint(s.u, s.v), times_adjoint(scale_cols(s.v, sig), s.v)};
    // Symmetrize p; it is Hermitian up to rounding.
    out.p = 0.5 * (out.p + adjoint(out.p));
    return out;
}

/// Region for a spectral projection: membership plus the distance of a point
/// from the region boundary, used to refuse ambiguous classifications.
struct SpectralRegion {
    std::function<bool(cplx)> contains;
    std::function<double(cplx)> boundary_distance;
};

inline SpectralRegion whole_plane() {
    return {[](cplx) { return true; }, [](cplx) { return std::numeric_limits<double>::infinity(); }};
}

/// Distance of z from the lattice 2 pi i Z.
inline double distance_to_lattice(cplx z) {
    const double period = 2.0 * std::numbers::pi;
    const double k = std::round(z.imag() / period);
    return std::abs(z - cplx{0.0, period * k});
}

/// {z : dist(z, 2 pi i Z) < width}, used for chi_{2 pi i Z} with a small width.
inline SpectralRegion lattice_neighbourhood(double width) {
    return {[width](cplx z) { return distance_to_lattice(z) < width; },
            [width](cplx z) { return std::abs(distance_to_lattice(z) - width); }};
}

/// {z : dist(z, 2 pi i Z) >= delta}
inline SpectralRegion away_from_lattice(double delta) {
    return {[delta](cplx z) { return distance_to_lattice(z) >= delta; },
            [delta](cplx z) { return std::abs(distance_to_lattice(z) - delta); }};
}

inline SpectralRegion right_half_plane(double c) {
    return {[c](cplx z) { return z.real() > c; }, [c](cplx z) { return std::abs(z.real() - c); }};
}

/// chi_region(m) for normal m.
inline ComplexMatrix spectral_projection(const EigenDecomposition& e, const SpectralRegion& region,
                                         const Tolerances& tol = default_tolerances()) {
    for (const auto& lam : e.eigenvalues)
        if (region.boundary_distance(lam) < tol.spectral_boundary)
            throw AmbiguousSpectrumError("spectral_projection: eigenvalue (" + std::to_string(lam.real()) + ", " +
                                         std::to_string(lam.imag()) + ") lies on the region boundary");
    ComplexMatrix p = apply_function(e, [&](cplx z) { return region.contains(z) ? cplx{1.0} : cplx{0.0}; });
    return 0.5 * (p + adjoint(p));
}

inline ComplexMatrix spectral_projection(const ComplexMatrix& m, const SpectralRegion& region,
                                         const Tolerances& tol = default_tolerances()) {
    require_normal(m, "spectral_projection", tol);
    return spectral_projection(eigen_normal(m, tol), region, tol);
}

}  // namespace fcl
