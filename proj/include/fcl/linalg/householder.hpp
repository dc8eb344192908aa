// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <vector>

#include "fcl/linalg/matrix.hpp"

namespace fcl::detail {

/// Elementary reflector H = I - tau v v^* with H x = alpha e_1.
struct Reflector {
    std::vector<cplx> v;
    double tau = 0.0;
    cplx alpha{0.0};
};

inline Reflector make_reflector(std::span<const cplx> x) {
    Reflector h;
    h.v.assign(x.begin(), x.end());
    double scale = 0.0;
    for (const auto& z : x) scale = std::max(scale, std::abs(z));
    if (x.empty() || scale == 0.0) return h;
    double ss = 0.0;
    for (const auto& z : x) ss += std::norm(z / scale);
    const double nrm = scale * std::sqrt(ss);
    const double a0 = std::abs(x[0]);
    const cplx ph = a0 > 0.0 ? x[0] / a0 : cplx{1.0};
    h.alpha = -ph * nrm;
    // v = (x - alpha e_1) / (x_0 - alpha), so v_0 = 1 and tau = 2 / ||v||^2 = (|x_0| + ||x||) / ||x||.
    const cplx w0 = ph * (a0 + nrm);
    h.v[0] = 1.0;
    for (Index i = 1; i < h.v.size(); ++i) h.v[i] = x[i] / w0;
    h.tau = (a0 + nrm) / nrm;
    return h;
}

/// M[r0.., c0..c1) <- H M[r0.., c0..c1)
inline void apply_left(const Reflector& h, ComplexMatrix& m, Index r0, Index c0, Index c1) {
    if (h.tau == 0.0 || c1 <= c0) return;
    const Index w = c1 - c0;
    std::vector<cplx> t(w, cplx{0.0});
    for (Index i = 0; i < h.v.size(); ++i)
        if (h.v[i] != cplx{0.0}) axpy(t, std::conj(h.v[i]), m.row(r0 + i).subspan(c0, w));
    for (Index i = 0; i < h.v.size(); ++i)
        if (h.v[i] != cplx{0.0}) axpy(m.row(r0 + i).subspan(c0, w), -h.tau * h.v[i], t);
}

/// M[r0..r1, c0..) <- M[r0..r1, c0..) H
inline void apply_right(const Reflector& h, ComplexMatrix& m, Index r0, Index r1, Index c0) {
    if (h.tau == 0.0) return;
    const Index w = h.v.size();
    std::vector<cplx> vc(w);
    for (Index j = 0; j < w; ++j) vc[j] = std::conj(h.v[j]);
    for (Index i = r0; i < r1; ++i) {
        auto r = m.row(i).subspan(c0, w);
        const cplx s = dotu(r, h.v);
        if (s != cplx{0.0}) axpy(r, -h.tau * s, vc);
    }
}

}  // namespace fcl::detail
