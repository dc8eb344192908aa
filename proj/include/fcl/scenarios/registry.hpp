// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcl/scenarios/scenarios.hpp"

namespace fcl {

/// Overrides from the command line; anything unset keeps the scenario default.
struct ScenarioConfig {
    std::optional<Index> ambient;
    std::optional<CompressionSchedule> schedule;
    std::optional<cplx> z;
    std::optional<int> k;
    std::optional<double> grid_length;
    std::optional<Index> grid_points;
    std::optional<double> decay;
    std::optional<std::vector<double>> delta_sweep;
    std::optional<std::uint64_t> seed;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> seeds;
    std::optional<double> tolerance;
    std::optional<Index> dim;
};

struct ScenarioEntry {
    std::string name;
    std::string summary;
    std::function<std::vector<ScenarioResult>(const ScenarioConfig&)> run;
};

namespace detail {

inline std::vector<ScenarioResult> one(ScenarioResult r) {
    std::vector<ScenarioResult> v;
    v.push_back(std::move(r));
    return v;
}

inline CompressionSchedule seq_schedule(const ScenarioConfig& c) {
    return c.schedule.value_or(default_sequence_schedule());
}

}  // namespace detail

inline const std::vector<ScenarioEntry>& scenario_registry() {
    using C = ScenarioConfig;
    static const std::vector<ScenarioEntry> entries = {
        {"finite-identity", "det(ABA^-1B^-1) = 1 at full finite dimension",
         [](const C& c) {
             return detail::one(run_finite_identity(c.seed.value_or(1), c.dim.value_or(32),
                                                    c.tolerance.value_or(finite_tolerance)));
         }},
        {"shift-counterexample", "A = e^{zR}, B = e^L: det = e^{s z}",
         [](const C& c) {
             return detail::one(run_shift_counterexample(c.z.value_or(1.0), c.ambient.value_or(400),
                                                         detail::seq_schedule(c),
                                                         c.tolerance.value_or(sequence_tolerance)));
         }},
        {"hhp", "det(e^C e^D e^{-C-D}) for C = zR, D = L",
         [](const C& c) {
             return detail::one(run_hhp(c.z.value_or(1.0), c.ambient.value_or(400), detail::seq_schedule(c),
                                        c.tolerance.value_or(sequence_tolerance)));
         }},
        {"pincus", "det(e^C e^D e^-C e^-D) for C = zR, D = L",
         [](const C& c) {
             return detail::one(run_pincus(c.z.value_or(1.0), c.ambient.value_or(400), detail::seq_schedule(c),
                                           c.tolerance.value_or(sequence_tolerance)));
         }},
        {"theorem1", "random decaying pair satisfying the trace-class hypotheses",
         [](const C& c) {
             return detail::one(run_theorem1(c.seed.value_or(1), c.decay.value_or(0.5), c.ambient.value_or(400),
                                             detail::seq_schedule(c), c.tolerance.value_or(sequence_tolerance)));
         }},
        {"theorem1-unitary", "unitary pair with Hermitian decaying exponents",
         [](const C& c) {
             return detail::one(run_theorem1(c.seed.value_or(1), c.decay.value_or(0.5), c.ambient.value_or(400),
                                             detail::seq_schedule(c), c.tolerance.value_or(sequence_tolerance),
                                             true));
         }},
        {"prop1-quasinilpotent", "weighted shift exponent against a banded exponent",
         [](const C& c) {
             return detail::one(run_prop1_quasinilpotent(c.seed.value_or(1), c.ambient.value_or(400),
                                                         detail::seq_schedule(c),
                                                         c.tolerance.value_or(sequence_tolerance)));
         }},
        {"nilpotent-example", "C = D = ML: det 1 with a non trace-class M^2",
         [](const C& c) {
             return detail::one(
                 run_nilpotent_example(c.ambient.value_or(400), detail::seq_schedule(c), c.tolerance.value_or(1e-12)));
         }},
        {"position-momentum", "windowed tr[k f(x), f(p)] on a Fourier grid",
         [](const C& c) {
             return detail::one(run_position_momentum(c.k.value_or(1), c.grid_length.value_or(40.0),
                                                      c.grid_points.value_or(1024),
                                                      c.schedule.value_or(default_grid_schedule()),
                                                      c.tolerance.value_or(grid_tolerance)));
         }},
        {"spectral-split", "Q/P split of a normal exponent near 2 pi i Z",
         [](const C& c) {
             return detail::one(run_spectral_split(c.seed.value_or(1), c.delta_sweep.value_or(default_delta_sweep()),
                                                   c.ambient.value_or(400), detail::seq_schedule(c),
                                                   c.tolerance.value_or(sequence_tolerance)));
         }},
        {"lemma2", "decaying D against a bounded skew-adjoint exponent",
         [](const C& c) {
             return detail::one(run_lemma2(c.seed.value_or(1), c.ambient.value_or(400), detail::seq_schedule(c),
                                           c.tolerance.value_or(sequence_tolerance)));
         }},
        {"conjecture-search", "exploratory sweep over pairs meeting (ii) but not (iii)",
         [](const C& c) {
             const std::uint64_t first = c.seeds ? c.seeds->first : c.seed.value_or(1);
             const std::uint64_t last = c.seeds ? c.seeds->second : (c.seed ? *c.seed : 5);
             return run_conjecture_search(first, last, c.ambient.value_or(400), detail::seq_schedule(c),
                                          c.tolerance.value_or(sequence_tolerance));
         }},
    };
    return entries;
}

inline const ScenarioEntry* find_scenario(const std::string& name) {
    for (const auto& e : scenario_registry())
        if (e.name == name) return &e;
    return nullptr;
}

inline std::vector<std::string> scenario_names() {
    std::vector<std::string> out;
    for (const auto& e : scenario_registry()) out.push_back(e.name);
    return out;
}

}  // namespace fcl
