// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fredholm.hpp
 * @brief Two-scale Fredholm determinants det(I + K) from finite sections.
 *
 * K is built on the full ambient space and only its compressions to windows
 * m <= N/2 enter the determinant. At m = N every commutator determinant is
 * exactly 1, which is why the full dimension is reserved for sanity checks.
 */

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcl/linalg.hpp"
#include "fcl/operators/space.hpp"
#include "fcl/operators/trace.hpp"

namespace fcl {

struct DetPoint {
    Index m = 0;
    cplx det{1.0};
};

struct FredholmReport {
    std::string label;
    std::vector<DetPoint> per_m;
    cplx stabilized_value{1.0};
    double spread = 0.0;
    bool converged = false;
    std::optional<double> ambient_consistency;  // empty when no rebuilder was supplied
    double tolerance = 0.0;
};

/// Rebuilds the perturbation on another model of the same space (used at doubled ambient dim).
using OperatorRebuilder = std::function<TruncatedOperator(const SpaceModel&)>;
using PairRebuilder = std::function<std::pair<TruncatedOperator, TruncatedOperator>(const SpaceModel&)>;

inline void require_two_scale(const SpaceModel& space, const CompressionSchedule& schedule, const char* who) {
    if (schedule.empty()) throw PreconditionError(std::string(who) + ": empty schedule");
    if (2 * schedule.max() > dimension(space))
        throw TwoScaleViolation(std::string(who) + ": schedule max " + std::to_string(schedule.max()) +
                                " exceeds half the ambient dimension " + std::to_string(dimension(space)));
}

inline double last_three_spread(const std::vector<DetPoint>& pts) {
    const Index first = pts.size() > 3 ? pts.size() - 3 : 0;
    double s = 0.0;
    for (Index i = first; i < pts.size(); ++i)
        for (Index j = i + 1; j < pts.size(); ++j) s = std::max(s, std::abs(pts[i].det - pts[j].det));
    return s;
}

inline cplx section_det(const ComplexMatrix& block, Index m) {
    return LU(add_identity(leading_block(block, m, m))).logdet().value();
}

/// det(I_m + compress(k, m)) along the schedule. k excludes the identity.
inline FredholmReport fredholm_det(const TruncatedOperator& k, const CompressionSchedule& schedule, double tolerance,
                                   const OperatorRebuilder& rebuild = {}) {
    require_two_scale(k.space, schedule, "fredholm_det");
    const CompressionBasis basis(k.space, schedule.max());
    const ComplexMatrix block = basis.project(k.matrix);

    FredholmReport r;
    r.label = k.label;
    r.tolerance = tolerance;
    for (Index m : schedule) r.per_m.push_back({m, section_det(block, m)});
    r.stabilized_value = r.per_m.back().det;
    r.spread = last_three_spread(r.per_m);

    if (rebuild) {
        const TruncatedOperator big = rebuild(doubled(k.space));
        const CompressionBasis big_basis(big.space, schedule.max());
        r.ambient_consistency = max_abs(big_basis.project(big.matrix) - block);
    }
    r.converged = r.spread < tolerance && (!r.ambient_consistency || *r.ambient_consistency < tolerance);
    return r;
}

/// det(I + k) on the whole ambient space.
inline cplx full_dimension_det(const ComplexMatrix& k) { return LU(add_identity(k)).logdet().value(); }

/// Inverse by adjoint for unitary input, by LU otherwise.
inline ComplexMatrix operator_inverse(const ComplexMatrix& m) {
    if (unitarity_defect(m) <= 1e-13 * static_cast<double>(m.rows())) return adjoint(m);
    return inverse(m);
}

/// K = [A, B] A^-1 B^-1, so that I + K = A B A^-1 B^-1.
inline ComplexMatrix kitaev_perturbation(const ComplexMatrix& a, const ComplexMatrix& b) {
    return commutator(a, b) * (operator_inverse(a) * operator_inverse(b));
}

inline TruncatedOperator kitaev_perturbation(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_space(a, b, "kitaev_det");
    return {a.space, kitaev_perturbation(a.matrix, b.matrix), "[A,B]A^-1B^-1"};
}

inline FredholmReport kitaev_det(const TruncatedOperator& a, const TruncatedOperator& b,
                                 const CompressionSchedule& schedule, double tolerance,
                                 const PairRebuilder& rebuild = {}) {
    OperatorRebuilder rk;
    if (rebuild)
        rk = [&](const SpaceModel& s) {
            const auto [a2, b2] = rebuild(s);
            return kitaev_perturbation(a2, b2);
        };
    return fredholm_det(kitaev_perturbation(a, b), schedule, tolerance, rk);
}

struct PredictedDet {
    FredholmReport report;
    cplx predicted{1.0};
    cplx windowed_trace{0.0};  // trace of [C, D] over the largest window
    cplx full_dimension{1.0};  // det(I + K) at m = N, which is 1 identically
};

/// e^C e^D e^{-C-D} - I
inline ComplexMatrix hhp_perturbation(const ComplexMatrix& c, const ComplexMatrix& d) {
    return add_identity(expm(c) * expm(d) * expm(-(c + d)), -1.0);
}

/// [e^C, e^D] e^{-C} e^{-D} = e^C e^D e^{-C} e^{-D} - I
inline ComplexMatrix pincus_perturbation(const ComplexMatrix& c, const ComplexMatrix& d) {
    return commutator(expm(c), expm(d)) * (expm(-c) * expm(-d));
}

namespace detail {

inline PredictedDet predicted_det(const TruncatedOperator& c, const TruncatedOperator& d,
                                  const CompressionSchedule& schedule, double tolerance, const PairRebuilder& rebuild,
                                  ComplexMatrix (*perturb)(const ComplexMatrix&, const ComplexMatrix&), double power,
                                  const char* label) {
    require_same_space(c, d, label);
    OperatorRebuilder rk;
    if (rebuild)
        rk = [&](const SpaceModel& s) {
            const auto [c2, d2] = rebuild(s);
            return TruncatedOperator{s, perturb(c2.matrix, d2.matrix), label};
        };
    PredictedDet out;
    const TruncatedOperator k{c.space, perturb(c.matrix, d.matrix), label};
    out.report = fredholm_det(k, schedule, tolerance, rk);
    out.full_dimension = full_dimension_det(k.matrix);
    const TruncatedOperator comm{c.space, commutator(c.matrix, d.matrix), "[C,D]"};
    out.windowed_trace = trace_window(comm, {schedule.max()}).back().trace;
    out.predicted = std::exp(power * out.windowed_trace);
    return out;
}

}  // namespace detail

/// Report for e^C e^D e^{-C-D}; predicted exp(tr[C,D] / 2).
inline PredictedDet hhp_det(const TruncatedOperator& c, const TruncatedOperator& d, const CompressionSchedule& schedule,
                            double tolerance, const PairRebuilder& rebuild = {}) {
    return detail::predicted_det(c, d, schedule, tolerance, rebuild, hhp_perturbation, 0.5, "e^C e^D e^{-C-D} - I");
}

/// Report for e^C e^D e^{-C} e^{-D}; predicted exp(tr[C,D]).
inline PredictedDet pincus_commutator_det(const TruncatedOperator& c, const TruncatedOperator& d,
                                          const CompressionSchedule& schedule, double tolerance,
                                          const PairRebuilder& rebuild = {}) {
    return detail::predicted_det(c, d, schedule, tolerance, rebuild, pincus_perturbation, 1.0,
                                 "[e^C,e^D]e^{-C}e^{-D}");
}

}  // namespace fcl
