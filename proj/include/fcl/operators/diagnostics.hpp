// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file diagnostics.hpp
 * @brief Numerical trace-class verdicts from leading singular-value sums.
 *
 * These classify, they do not prove. A sum that flattens in log m is called
 * Summable, one that keeps growing at a steady rate per decade is Diverging.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fcl/linalg.hpp"
#include "fcl/operators/fredholm.hpp"
#include "fcl/operators/space.hpp"

namespace fcl {

enum class Verdict { Summable, Diverging, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Summable: return "Summable";
        case Verdict::Diverging: return "Diverging";
        default: return "Inconclusive";
    }
}

struct SumPoint {
    Index m = 0;
    double partial_sum = 0.0;
};

struct TailDiagnostic {
    std::string label;
    std::vector<SumPoint> per_m;
    Verdict verdict = Verdict::Inconclusive;
    double growth_slope = 0.0;
};

/// Least-squares slope and R^2 of y against log x.
struct LogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

inline LogFit fit_log(const std::vector<double>& x, const std::vector<double>& y) {
    const Index n = x.size();
    LogFit f;
    if (n < 2) return f;
    double mx = 0.0, my = 0.0;
    for (Index i = 0; i < n; ++i) {
        mx += std::log(x[i]);
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (Index i = 0; i < n; ++i) {
        const double dx = std::log(x[i]) - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    f.intercept = my - f.slope * mx;
    f.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return f;
}

/// Verdict from the partial sums alone.
inline TailDiagnostic classify_tail(std::vector<SumPoint> pts, std::string label = {}) {
    TailDiagnostic d;
    d.label = std::move(label);
    d.per_m = std::move(pts);
    const Index n = d.per_m.size();
    if (n == 0) return d;

    std::vector<double> xs, ys;
    for (Index i = n / 2; i < n; ++i) {
        xs.push_back(static_cast<double>(d.per_m[i].m));
        ys.push_back(d.per_m[i].partial_sum);
    }
    d.growth_slope = fit_log(xs, ys).slope;

    const double first = d.per_m.front().partial_sum;
    const double last = d.per_m.back().partial_sum;
    if (last <= 1e-12) {
        d.verdict = Verdict::Summable;
        return d;
    }
    if (n < 3) return d;

    // Growth per unit of log m between consecutive schedule points.
    std::vector<double> rate;
    for (Index i = 1; i < n; ++i)
        rate.push_back((d.per_m[i].partial_sum - d.per_m[i - 1].partial_sum) /
                       std::log(static_cast<double>(d.per_m[i].m) / static_cast<double>(d.per_m[i - 1].m)));
    const bool decaying = rate.back() < 0.25 * rate.front() || rate.back() <= 1e-10 * last;

    if (decaying && d.growth_slope < 0.01 * first)
        d.verdict = Verdict::Summable;
    else if (!decaying && d.growth_slope > 0.1 * first)
        d.verdict = Verdict::Diverging;
    return d;
}

/// Sums of the m largest singular values of the full ambient matrix along the schedule.
inline TailDiagnostic trace_class_diagnostic(const TruncatedOperator& k, const CompressionSchedule& schedule) {
    require_two_scale(k.space, schedule, "trace_class_diagnostic");
    const auto sigma = singular_values(k.matrix);
    std::vector<SumPoint> pts;
    double run = 0.0;
    Index next = 0;
    for (Index m : schedule) {
        for (; next < m && next < sigma.size(); ++next) run += sigma[next];
        pts.push_back({m, run});
    }
    return classify_tail(std::move(pts), k.label);
}

struct HypothesisReport {
    std::string label = "hypotheses";
    std::vector<std::pair<std::string, TailDiagnostic>> products;
    double sigma_min_a = 0.0;
    double sigma_min_b = 0.0;

    const TailDiagnostic& product(const std::string& name) const {
        for (const auto& [n, d] : products)
            if (n == name) return d;
        throw PreconditionError("HypothesisReport: no product named " + name);
    }
    /// (A-I)(B-I) and (B-I)(A-I)
    bool condition_ii_summable() const {
        return product("(A-I)(B-I)").verdict == Verdict::Summable && product("(B-I)(A-I)").verdict == Verdict::Summable;
    }
    /// (A*-I)(B-I) and (B-I)(A*-I)
    bool condition_iii_summable() const {
        return product("(A*-I)(B-I)").verdict == Verdict::Summable &&
               product("(B-I)(A*-I)").verdict == Verdict::Summable;
    }
    bool all_summable() const { return condition_ii_summable() && condition_iii_summable(); }
    bool any_diverging() const {
        return std::any_of(products.begin(), products.end(),
                           [](const auto& p) { return p.second.verdict == Verdict::Diverging; });
    }
};

inline HypothesisReport check_hypotheses(const TruncatedOperator& a, const TruncatedOperator& b,
                                         const CompressionSchedule& schedule) {
    require_same_space(a, b, "check_hypotheses");
    const ComplexMatrix am = add_identity(a.matrix, -1.0);
    const ComplexMatrix bm = add_identity(b.matrix, -1.0);
    const ComplexMatrix asm_ = add_identity(adjoint(a.matrix), -1.0);
    HypothesisReport r;
    const auto add = [&](const char* name, ComplexMatrix m) {
        r.products.emplace_back(name, trace_class_diagnostic({a.space, std::move(m), name}, schedule));
    };
    add("(A-I)(B-I)", am * bm);
    add("(B-I)(A-I)", bm * am);
    add("(A*-I)(B-I)", asm_ * bm);
    add("(B-I)(A*-I)", bm * asm_);
    r.sigma_min_a = singular_values(a.matrix).back();
    r.sigma_min_b = singular_values(b.matrix).back();
    return r;
}

}  // namespace fcl
