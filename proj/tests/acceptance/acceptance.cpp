// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance runner. `acceptance N` checks one criterion, no argument checks
// all ten. Exit status is the number of failures outside known_shortfalls.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "fcl/harness/io.hpp"
#include "fcl/scenarios/scenarios.hpp"
#include "support/properties.hpp"

using namespace fcl;

namespace {

// Criteria that cannot be met at the prescribed sizes. They still run and print FAIL.
const std::set<int> known_shortfalls{7};

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
        }
    }
    void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double seconds(const Stopwatch& w) { return static_cast<double>(w.elapsed_ms()) / 1000.0; }

Outcome finite_identity() {
    Outcome v;
    const Stopwatch clock;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Index dim = 1 + (seed * 37 + 11) % 64;
        worst = std::max(worst, run_finite_identity(seed, seed == 100 ? 64 : dim).deviation);
    }
    const double t = seconds(clock);
    v.note("max deviation " + fmt("%.2e", worst) + " over 100 pairs, dim <= 64");
    v.require(worst < 1e-8, "deviation < 1e-8");
    v.note(fmt("%.1f s", t));
    v.require(t < 10.0, "runtime < 10 s");
    return v;
}

Outcome shift_counterexample() {
    Outcome v;
    const Stopwatch clock;
    const int s = commutator_sign_oracle().sign;
    double worst_abs = 0.0, worst = 0.0;
    bool conv = true;
    for (cplx z : {cplx{0.5}, cplx{1.0}, cplx{0.0, 1.0}, cplx{1.0, 1.0}}) {
        const auto r = run_shift_counterexample(z, 400, default_sequence_schedule());
        worst_abs = std::max(worst_abs, std::abs(std::abs(r.computed) - std::exp(s * z.real())));
        worst = std::max(worst, std::abs(r.computed - std::exp(static_cast<double>(s) * z)));
        conv = conv && r.converged && r.sign_convention.commutator_sign == s;
    }
    const double t = seconds(clock);
    v.note("s = " + std::to_string(s) + ", max ||det| - e^{Re sz}| " + fmt("%.2e", worst_abs) +
           ", max |det - e^{sz}| " + fmt("%.2e", worst));
    v.require(worst_abs < 1e-6 && worst < 1e-6, "within 1e-6");
    v.require(conv, "converged with one sign");
    v.note(fmt("%.1f s", t));
    v.require(t < 30.0, "runtime < 30 s");
    return v;
}

Outcome hhp_chain() {
    Outcome v;
    const int s = commutator_sign_oracle().sign;
    const auto h = run_hhp(1.0, 400, default_sequence_schedule());
    const auto p = run_pincus(1.0, 400, default_sequence_schedule());
    const double chain = std::abs(p.computed - h.computed * h.computed);
    const double dp = std::abs(p.computed - std::exp(double(s))), dh = std::abs(h.computed - std::exp(0.5 * s));
    v.note("|pincus - hhp^2| " + fmt("%.2e", chain) + ", |pincus - e^{s}| " + fmt("%.2e", dp) +
           ", |hhp - e^{s/2}| " + fmt("%.2e", dh));
    v.require(chain < 1e-5, "pincus = hhp^2");
    v.require(dp < 1e-5 && dh < 1e-5, "match e^{s z}, e^{s z / 2}");
    return v;
}

Outcome theorem1_unitary() {
    Outcome v;
    double worst = 0.0, worst_polar = 0.0;
    bool summable = true, conv = true;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto r = run_theorem1(seed, 0.5, 400, default_sequence_schedule(), sequence_tolerance, true);
        worst = std::max(worst, r.deviation);
        worst_polar = std::max(worst_polar, r.metrics().get("polar_split_deviation"));
        summable = summable && r.metrics().get("all_summable") == 1.0;
        conv = conv && r.converged;
    }
    v.note("max |det - 1| " + fmt("%.2e", worst) + ", max polar split deviation " + fmt("%.2e", worst_polar));
    v.require(worst < 1e-6, "|det - 1| < 1e-6");
    v.require(summable, "all four diagnostics Summable");
    v.require(worst_polar < 1e-6, "polar product within 1e-6");
    v.require(conv, "converged");
    return v;
}

Outcome proposition1() {
    Outcome v;
    const auto r = run_prop1_quasinilpotent(1);
    const auto& m = r.metrics();
    v.note("deviation " + fmt("%.2e", r.deviation) + ", dseries residual " + fmt("%.2e", m.get("dseries_residual")) +
           ", ||(I-D)^20||^{1/20} " + fmt("%.4f", m.get("i_minus_d_root_norm_20")));
    v.require(r.deviation < 1e-6, "deviation < 1e-6");
    v.require(m.get("dseries_residual") < 1e-12, "residual < 1e-12");
    v.require(m.get("root_norms_decreasing") == 1.0 && m.get("i_minus_d_root_norm_20") < 0.05,
              "root norms decreasing to < 0.05");
    return v;
}

Outcome nilpotent() {
    Outcome v;
    const auto r = run_nilpotent_example();
    const auto& m = r.metrics();
    v.note("|det - 1| " + fmt("%.2e", r.deviation) + ", c = " + fmt("%.4f", m.get("fit_slope")) +
           ", R^2 = " + fmt("%.6f", m.get("fit_r_squared")));
    v.require(r.deviation < 1e-12, "det within 1e-12");
    v.require(m.get("fit_slope") >= 0.4 && m.get("fit_slope") <= 0.6, "c in [0.4, 0.6]");
    v.require(m.get("fit_r_squared") > 0.99, "R^2 > 0.99");
    return v;
}

Outcome position_momentum() {
    Outcome v;
    const Stopwatch clock;
    const auto one = run_position_momentum(1, 40.0, 1024);
    const auto two = run_position_momentum(2, 40.0, 1024);
    const double t = seconds(clock);
    const auto& m1 = one.metrics();
    const auto& m2 = two.metrics();
    const double k1 = m1.get("winding_integer"), k2 = m2.get("winding_integer");
    v.note("full trace " + fmt("%.2e", m1.get("full_grid_trace_abs")) + ", k_int " + fmt("%.0f", k1) +
           " (residual " + fmt("%.3f", m1.get("winding_residual")) + "), k=2 gives " + fmt("%.0f", k2) +
           ", |det - 1| " + fmt("%.3e", m1.get("det_deviation")));
    v.require(m1.get("full_grid_trace_abs") < 1e-8, "full-grid trace < 1e-8");
    v.require(m1.get("plateau_found") == 1.0, "plateau exists");
    v.require(std::abs(k1) == 2.0, "|k_int| = 2");
    v.require(m1.get("winding_residual") < 0.05 * 2.0 * std::numbers::pi, "residual < 0.05 * 2 pi");
    v.require(k2 == 2.0 * k1, "k = 2 doubles the integer");
    v.require(m1.get("det_deviation") < 1e-4, "det within 1e-4");
    v.note(fmt("%.1f s", t));
    v.require(t < 60.0, "runtime < 60 s");
    return v;
}

Outcome spectral_split() {
    Outcome v;
    const auto r = run_spectral_split(1);
    const auto* table = r.reports_of<ValueTable>().front();
    const auto col = [&](const std::string& name) {
        for (std::size_t i = 0; i < table->columns.size(); ++i)
            if (table->columns[i] == name) return i;
        return table->columns.size();
    };
    double worst_q = 0.0;
    std::string dist;
    for (const auto& row : table->rows) {
        worst_q = std::max(worst_q, std::abs(cplx{row[col("q_det_re")], row[col("q_det_im")]} - 1.0));
        dist += (dist.empty() ? "" : " > ") + fmt("%.3g", row[col("limit_distance")]);
    }
    v.note("max |Q det - 1| " + fmt("%.2e", worst_q) + ", split-to-limit distance " + dist);
    v.require(worst_q < 1e-6, "Q-part det within 1e-6");
    v.require(r.metrics().get("limit_distance_decreasing") == 1.0, "deviation decreasing along the sweep");
    return v;
}

Outcome kernel_properties() {
    Outcome v;
    const Stopwatch clock;
    const auto outcomes = props::all_kernel_properties(20261014, 100);
    int failed = 0;
    double worst = 0.0;
    for (const auto& o : outcomes) {
        if (!o.passed()) {
            ++failed;
            v.require(false, o.name);
        }
        worst = std::max(worst, o.worst_ratio);
    }
    const double t = seconds(clock);
    v.note(std::to_string(outcomes.size()) + " suites x 100 matrices, worst error/bound " + fmt("%.2e", worst));
    v.note(fmt("%.1f s", t));
    v.require(t < 60.0, "runtime < 60 s");
    return v;
}

Outcome reproducibility() {
    Outcome v;
    const std::vector<std::pair<std::string, std::function<ScenarioResult()>>> runs{
        {"finite-identity", [] { return run_finite_identity(17, 64); }},
        {"shift-counterexample", [] { return run_shift_counterexample(cplx{1.0, 1.0}); }},
        {"hhp", [] { return run_hhp(1.0); }},
        {"pincus", [] { return run_pincus(1.0); }},
        {"theorem1-unitary", [] { return run_theorem1(3, 0.5, 400, default_sequence_schedule(), 1e-6, true); }},
        {"prop1-quasinilpotent", [] { return run_prop1_quasinilpotent(1); }},
        {"nilpotent-example", [] { return run_nilpotent_example(); }},
        {"position-momentum", [] { return run_position_momentum(1); }},
        {"spectral-split", [] { return run_spectral_split(1); }},
    };
    int same = 0;
    for (const auto& [name, run] : runs) {
        const bool equal = canonical_json(run()) == canonical_json(run());
        v.require(equal, name + " JSON differs between runs");
        same += equal;
    }
    const auto p1 = props::all_kernel_properties(7, 10), p2 = props::all_kernel_properties(7, 10);
    bool props_equal = p1.size() == p2.size();
    for (std::size_t i = 0; props_equal && i < p1.size(); ++i)
        props_equal = p1[i].failures == p2[i].failures && p1[i].worst_ratio == p2[i].worst_ratio;
    v.require(props_equal, "kernel property outcomes differ between runs");
    v.note(std::to_string(same) + "/" + std::to_string(runs.size()) + " scenario runs bitwise identical" +
           (props_equal ? ", property outcomes identical" : ""));
    return v;
}

struct Criterion {
    int id;
    const char* title;
    Outcome (*check)();
};

const Criterion criteria[] = {
    {1, "finite identity", finite_identity},
    {2, "shift counterexample", shift_counterexample},
    {3, "hhp / pincus chain", hhp_chain},
    {4, "unitary theorem1 pairs", theorem1_unitary},
    {5, "quasinilpotent proposition", proposition1},
    {6, "nilpotent example", nilpotent},
    {7, "position-momentum quantization", position_momentum},
    {8, "spectral split", spectral_split},
    {9, "kernel property suites", kernel_properties},
    {10, "reproducibility", reproducibility},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    int unexpected = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        Outcome v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("error: ") + e.what();
        }
        const bool known = known_shortfalls.count(c.id) > 0;
        std::printf("%s criterion %d (%s): %s%s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, v.detail.c_str(),
                    !v.pass && known ? " [known shortfall, see README]" : "");
        std::fflush(stdout);
        if (!v.pass && !known) ++unexpected;
    }
    return unexpected;
}
