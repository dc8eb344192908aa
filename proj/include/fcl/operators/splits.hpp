// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file splits.hpp
 * @brief Factorizations of a commutator determinant: through the polar
 *        decomposition of A, and through spectral projections of a normal A
 *        near and away from the lattice 2 pi i Z.
 */

#pragma once

#include <string>
#include <vector>

#include "fcl/linalg.hpp"
#include "fcl/operators/diagnostics.hpp"
#include "fcl/operators/fredholm.hpp"

namespace fcl {

struct PolarSplit {
    TruncatedOperator c;  // log |A|
    TruncatedOperator d;  // log U
    FredholmReport total;     // det(A B A^-1 B^-1)
    FredholmReport c_factor;  // det(e^C B e^-C B^-1)
    FredholmReport d_factor;  // det(e^D B e^-D B^-1)
    cplx product{1.0};
    double deviation = 0.0;  // |product - total|
    std::vector<TailDiagnostic> products;
};

inline PolarSplit polar_split(const TruncatedOperator& a, const TruncatedOperator& b,
                              const CompressionSchedule& schedule, double tolerance) {
    require_same_space(a, b, "polar_split");
    const Polar pol = polar(a.matrix);
    PolarSplit s;
    s.c = {a.space, logm_normal(pol.p), "log|A|"};
    s.d = {a.space, logm_normal(pol.u), "log U"};
    const TruncatedOperator abs_a{a.space, pol.p, "|A|"};
    const TruncatedOperator u{a.space, pol.u, "U"};
    s.total = kitaev_det(a, b, schedule, tolerance);
    s.c_factor = kitaev_det(abs_a, b, schedule, tolerance);
    s.d_factor = kitaev_det(u, b, schedule, tolerance);
    s.product = s.c_factor.stabilized_value * s.d_factor.stabilized_value;
    s.deviation = std::abs(s.product - s.total.stabilized_value);

    const ComplexMatrix bm = add_identity(b.matrix, -1.0);
    const ComplexMatrix cm = add_identity(pol.p, -1.0);
    const ComplexMatrix dm = add_identity(pol.u, -1.0);
    const auto diag = [&](const char* name, ComplexMatrix m) {
        s.products.push_back(trace_class_diagnostic({a.space, std::move(m), name}, schedule));
    };
    diag("(e^C-I)(B-I)", cm * bm);
    diag("(B-I)(e^C-I)", bm * cm);
    diag("(e^D-I)(B-I)", dm * bm);
    diag("(B-I)(e^D-I)", bm * dm);
    return s;
}

struct SpectralSplit {
    double delta = 0.0;
    Index q_rank = 0;
    FredholmReport q_part;   // det(e^{AQ} e^B e^{-AQ} e^{-B}), expected 1
    FredholmReport p_part;   // det(e^{AP_delta} e^B e^{-AP_delta} e^{-B})
    FredholmReport unsplit;  // det(e^A e^B e^{-A} e^{-B})
    cplx product{1.0};       // p_part * det(e^B e^{-AQ} e^{-B} e^{AQ})
    double product_deviation = 0.0;
    /// ||[e^{AP_delta}, e^B] - [e^{AP}, e^B]||_1 with P the projection onto 2 pi i Z
    double limit_distance = 0.0;
    /// ||e^{AP} - I||_F
    double exp_ap_defect = 0.0;
};

/// Width of the neighbourhood standing in for the spectral point set 2 pi i Z.
inline constexpr double lattice_width = 1e-6;

inline SpectralSplit spectral_split(const TruncatedOperator& a, const TruncatedOperator& b, double delta,
                                    const CompressionSchedule& schedule, double tolerance,
                                    const Tolerances& tol = default_tolerances()) {
    require_same_space(a, b, "spectral_split");
    if (!(delta > 0.0 && delta <= 0.5)) throw PreconditionError("spectral_split: delta must lie in (0, 1/2]");
    require_normal(a.matrix, "spectral_split", tol);
    const auto eig = eigen_normal(a.matrix, tol);
    const auto q_region = away_from_lattice(delta);
    const auto p_region = lattice_neighbourhood(lattice_width);
    for (const auto& lam : eig.eigenvalues) {
        if (q_region.boundary_distance(lam) < tol.spectral_boundary || p_region.boundary_distance(lam) < tol.spectral_boundary)
            throw AmbiguousSpectrumError("spectral_split: eigenvalue on a projection boundary");
    }

    SpectralSplit s;
    s.delta = delta;
    for (const auto& lam : eig.eigenvalues) s.q_rank += q_region.contains(lam) ? 1 : 0;

    // e^{A chi(A)} through the eigendecomposition.
    const auto exp_part = [&](const SpectralRegion& r, double sign) {
        return apply_function(eig, [&](cplx z) { return r.contains(z) ? std::exp(sign * z) : cplx{1.0}; });
    };
    const ComplexMatrix eb = expm(b.matrix);
    const ComplexMatrix ebm = expm(-b.matrix);
    const ComplexMatrix eaq = exp_part(q_region, 1.0), eaqm = exp_part(q_region, -1.0);
    const SpectralRegion pd_region{[&](cplx z) { return !q_region.contains(z); }, q_region.boundary_distance};
    const ComplexMatrix eap = exp_part(pd_region, 1.0), eapm = exp_part(pd_region, -1.0);
    const ComplexMatrix ea = apply_function(eig, [](cplx z) { return std::exp(z); });
    const ComplexMatrix eam = apply_function(eig, [](cplx z) { return std::exp(-z); });

    const auto report = [&](const ComplexMatrix& x, const ComplexMatrix& xm, const char* label) {
        return fredholm_det({a.space, commutator(x, eb) * (xm * ebm), label}, schedule, tolerance);
    };
    s.q_part = report(eaq, eaqm, "e^{AQ}e^Be^{-AQ}e^{-B} - I");
    s.p_part = report(eap, eapm, "e^{AP}e^Be^{-AP}e^{-B} - I");
    s.unsplit = report(ea, eam, "e^Ae^Be^{-A}e^{-B} - I");
    // Second factor of the split in the order e^B e^{-AQ} e^{-B} e^{AQ}.
    const FredholmReport q_swapped =
        fredholm_det({a.space, commutator(eb, eaqm) * (ebm * eaq), "e^Be^{-AQ}e^{-B}e^{AQ} - I"}, schedule, tolerance);
    s.product = s.p_part.stabilized_value * q_swapped.stabilized_value;
    s.product_deviation = std::abs(s.product - s.unsplit.stabilized_value);

    const ComplexMatrix eap_limit = exp_part(p_region, 1.0);
    s.exp_ap_defect = distance_to_identity(eap_limit);
    s.limit_distance = schatten1(commutator(eap, eb) - commutator(eap_limit, eb));
    return s;
}

}  // namespace fcl
