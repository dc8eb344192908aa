// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli.hpp
 * @brief fcl_cli: run registered scenarios and persist their reports.
 *
 * Exit codes: 0 every scenario with an expected value passed, 2 at least one
 * missed its tolerance, 1 bad flags or a runtime error.
 */

#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "fcl/harness/io.hpp"
#include "fcl/scenarios/registry.hpp"

namespace fcl {

inline constexpr int exit_pass = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_tolerance = 2;

class FlagError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <class T>
T parse_number(std::string_view s, const char* flag) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    T v{};
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
        throw FlagError(std::string(flag) + ": cannot parse '" + std::string(s) + "'");
    return v;
}

template <class T>
std::vector<T> parse_list(const std::string& s, const char* flag) {
    std::vector<T> out;
    for (auto part : split(s, ',')) out.push_back(parse_number<T>(part, flag));
    return out;
}

inline cplx parse_complex(const std::string& s) {
    const auto parts = parse_list<double>(s, "--z");
    if (parts.size() > 2) throw FlagError("--z: expected re[,im]");
    return {parts[0], parts.size() == 2 ? parts[1] : 0.0};
}

/// "a-b", "a..b", "a:b" or a single seed.
inline std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
    for (const std::string_view sep : {"..", "-", ":"}) {
        const auto pos = s.find(sep);
        if (pos == std::string::npos) continue;
        const auto a = parse_number<std::uint64_t>(std::string_view(s).substr(0, pos), "--seeds");
        const auto b = parse_number<std::uint64_t>(std::string_view(s).substr(pos + sep.size()), "--seeds");
        if (b < a) throw FlagError("--seeds: range end precedes start");
        return {a, b};
    }
    const auto a = parse_number<std::uint64_t>(s, "--seeds");
    return {a, a};
}

inline std::string format_cplx(cplx z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.10g, %.10g)", z.real(), z.imag());
    return buf;
}

inline std::string summary_line(const ScenarioResult& r) {
    char buf[160];
    std::string s = r.exploratory() ? "EXPLORE " : (r.passed ? "PASS    " : "FAIL    ");
    s += r.name;
    if (r.seed) s += " seed=" + std::to_string(*r.seed);
    s += " computed=" + format_cplx(r.computed);
    if (r.expected) {
        std::snprintf(buf, sizeof buf, " expected=%s deviation=%.3e tol=%.1e", format_cplx(*r.expected).c_str(),
                      r.deviation, r.tolerance);
        s += buf;
    }
    s += r.converged ? " converged" : " not-converged";
    s += " " + std::to_string(r.runtime_ms) + "ms";
    return s;
}

inline std::filesystem::path result_dir(const std::filesystem::path& out, const ScenarioResult& r) {
    std::string leaf = r.name;
    if (r.seed) leaf += "-seed" + std::to_string(*r.seed);
    return out / leaf;
}

}  // namespace detail

inline int cli_main(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Fredholm commutator determinants: scenario runner"};
    std::string scenario;
    std::string schedule, z, delta_sweep, seeds;
    std::optional<Index> ambient, grid_points, dim;
    std::optional<int> k;
    std::optional<double> grid_length, decay, tolerance;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    bool list = false;

    app.add_option("--scenario", scenario, "scenario name or 'all'");
    app.add_flag("--list", list, "print the registered scenarios");
    app.add_option("--ambient", ambient, "ambient truncation dimension N");
    app.add_option("--schedule", schedule, "comma-separated compression dims");
    app.add_option("--z", z, "complex parameter re[,im]");
    app.add_option("--k", k, "position-momentum multiplier");
    app.add_option("--grid-length", grid_length, "grid half-length L");
    app.add_option("--grid-points", grid_points, "grid points N (power of two)");
    app.add_option("--decay", decay, "entry decay rate");
    app.add_option("--delta-sweep", delta_sweep, "comma-separated deltas");
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--seeds", seeds, "seed range a-b");
    app.add_option("--tolerance", tolerance, "acceptance tolerance");
    app.add_option("--dim", dim, "finite-identity dimension");
    app.add_option("--out", out_dir, "output directory (default $FCL_DEFAULT_OUT or runs)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return exit_error;
    }

    if (list) {
        for (const auto& e : scenario_registry()) out << e.name << "  " << e.summary << "\n";
        return exit_pass;
    }

    ScenarioConfig cfg;
    std::vector<const ScenarioEntry*> selected;
    try {
        if (scenario.empty()) throw FlagError("--scenario is required");
        if (scenario == "all") {
            for (const auto& e : scenario_registry()) selected.push_back(&e);
        } else if (const auto* e = find_scenario(scenario)) {
            selected.push_back(e);
        } else {
            throw FlagError("unknown scenario '" + scenario + "'");
        }
        if (!schedule.empty()) {
            std::vector<Index> dims;
            for (long v : detail::parse_list<long>(schedule, "--schedule")) {
                if (v <= 0) throw FlagError("--schedule: dims must be positive");
                dims.push_back(static_cast<Index>(v));
            }
            cfg.schedule = CompressionSchedule(std::move(dims));
        }
        if (!z.empty()) cfg.z = detail::parse_complex(z);
        if (!delta_sweep.empty()) cfg.delta_sweep = detail::parse_list<double>(delta_sweep, "--delta-sweep");
        if (!seeds.empty()) cfg.seeds = detail::parse_range(seeds);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_error;
    }
    cfg.ambient = ambient;
    cfg.k = k;
    cfg.grid_length = grid_length;
    cfg.grid_points = grid_points;
    cfg.decay = decay;
    cfg.seed = seed;
    cfg.tolerance = tolerance;
    cfg.dim = dim;

    if (out_dir.empty()) {
        const char* env = std::getenv("FCL_DEFAULT_OUT");
        out_dir = env && *env ? env : "runs";
    }
    const std::filesystem::path root(out_dir);

    RunManifest manifest;
    manifest.scenario = scenario;
    manifest.started_at = utc_now();
    if (seed) manifest.seed = static_cast<std::int64_t>(*seed);
    Json& p = manifest.parameters;
    if (ambient) p["ambient"] = *ambient;
    if (cfg.schedule) p["schedule"] = schedule_json(*cfg.schedule);
    if (cfg.z) p["z"] = complex_json(*cfg.z);
    if (k) p["k"] = *k;
    if (grid_length) p["grid_length"] = *grid_length;
    if (grid_points) p["grid_points"] = *grid_points;
    if (decay) p["decay"] = *decay;
    if (cfg.delta_sweep) p["delta_sweep"] = *cfg.delta_sweep;
    if (seed) p["seed"] = *seed;
    if (cfg.seeds) p["seeds"] = {cfg.seeds->first, cfg.seeds->second};
    if (tolerance) p["tolerance"] = *tolerance;
    if (dim) p["dim"] = *dim;

    int code = exit_pass;
    for (const auto* entry : selected) {
        try {
            for (const auto& r : entry->run(cfg)) {
                const auto paths = persist_result(r, detail::result_dir(root, r));
                manifest.artifacts.insert(manifest.artifacts.end(), paths.begin(), paths.end());
                out << detail::summary_line(r) << "\n";
                if (!r.exploratory() && !r.passed && code == exit_pass) code = exit_tolerance;
            }
        } catch (const std::exception& e) {
            err << "ERROR   " << entry->name << ": " << e.what() << "\n";
            code = exit_error;
        }
    }
    try {
        const auto mpath = root / "manifest.json";
        emit_manifest(manifest, mpath);
    } catch (const std::exception& e) {
        err << "ERROR   manifest: " << e.what() << "\n";
        return exit_error;
    }
    return code;
}

}  // namespace fcl
