// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief JSON and CSV serialization of scenario results, plus run manifests.
 *
 * JSON numbers are written with 17 significant digits by nlohmann::json, so
 * parse(emit(r)) reproduces every double exactly. Non-finite values become
 * null and read back as NaN.
 */

#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcl/scenarios/result.hpp"
#include "fcl/version.hpp"

namespace fcl {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }
inline double number_of(const Json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}
inline Json cplx_to(cplx z) { return Json{{"re", number(z.real())}, {"im", number(z.imag())}}; }
inline cplx cplx_of(const Json& j) { return {number_of(j.at("re")), number_of(j.at("im"))}; }

inline Verdict verdict_of(const std::string& s) {
    if (s == "Summable") return Verdict::Summable;
    if (s == "Diverging") return Verdict::Diverging;
    if (s == "Inconclusive") return Verdict::Inconclusive;
    throw IoError("unknown verdict " + s);
}

}  // namespace detail

inline Json to_json(const FredholmReport& r) {
    Json rows = Json::array();
    for (const auto& p : r.per_m) rows.push_back({{"m", p.m}, {"det", detail::cplx_to(p.det)}});
    return {{"kind", "fredholm"},
            {"label", r.label},
            {"per_m", rows},
            {"stabilized_value", detail::cplx_to(r.stabilized_value)},
            {"spread", detail::number(r.spread)},
            {"converged", r.converged},
            {"ambient_consistency", r.ambient_consistency ? detail::number(*r.ambient_consistency) : Json(nullptr)},
            {"tolerance", detail::number(r.tolerance)}};
}

inline Json to_json(const TailDiagnostic& t) {
    Json rows = Json::array();
    for (const auto& p : t.per_m) rows.push_back({{"m", p.m}, {"partial_sum", detail::number(p.partial_sum)}});
    return {{"kind", "tail"},
            {"label", t.label},
            {"per_m", rows},
            {"verdict", to_string(t.verdict)},
            {"growth_slope", detail::number(t.growth_slope)}};
}

inline Json to_json(const HypothesisReport& h) {
    Json products = Json::array();
    for (const auto& [name, t] : h.products) products.push_back({{"name", name}, {"diagnostic", to_json(t)}});
    return {{"kind", "hypotheses"},
            {"label", h.label},
            {"products", products},
            {"sigma_min_a", detail::number(h.sigma_min_a)},
            {"sigma_min_b", detail::number(h.sigma_min_b)}};
}

inline Json to_json(const TraceTable& t) {
    Json rows = Json::array();
    for (const auto& p : t.rows) rows.push_back({{"window_dim", p.m}, {"trace", detail::cplx_to(p.trace)}});
    return {{"kind", "trace_table"}, {"label", t.label}, {"rows", rows}};
}

inline Json to_json(const ValueTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json r = Json::array();
        for (double v : row) r.push_back(detail::number(v));
        rows.push_back(r);
    }
    return {{"kind", "value_table"}, {"label", t.label}, {"columns", t.columns}, {"rows", rows}};
}

inline Json to_json(const Metrics& m) {
    Json values = Json::object();
    for (const auto& [k, v] : m.values) values[k] = detail::number(v);
    return {{"kind", "metrics"}, {"label", m.label}, {"values", values}};
}

inline Json to_json(const Report& r) {
    return std::visit([](const auto& x) { return to_json(x); }, r);
}

inline Json to_json(const ScenarioResult& r) {
    Json reports = Json::array();
    for (const auto& rep : r.reports) reports.push_back(to_json(rep));
    return {{"name", r.name},
            {"parameters", r.parameters},
            {"seed", r.seed ? Json(*r.seed) : Json(nullptr)},
            {"expected", r.expected ? detail::cplx_to(*r.expected) : Json("exploratory")},
            {"computed", detail::cplx_to(r.computed)},
            {"deviation", detail::number(r.deviation)},
            {"tolerance", detail::number(r.tolerance)},
            {"converged", r.converged},
            {"passed", r.passed},
            {"sign_convention",
             {{"commutator_sign", r.sign_convention.commutator_sign},
              {"momentum_sign", r.sign_convention.momentum_sign}}},
            {"reports", reports},
            {"runtime_ms", r.runtime_ms}};
}

inline TailDiagnostic tail_from_json(const Json& j) {
    TailDiagnostic t;
    t.label = j.at("label").get<std::string>();
    for (const auto& p : j.at("per_m")) t.per_m.push_back({p.at("m").get<Index>(), detail::number_of(p.at("partial_sum"))});
    t.verdict = detail::verdict_of(j.at("verdict").get<std::string>());
    t.growth_slope = detail::number_of(j.at("growth_slope"));
    return t;
}

inline Report report_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const std::string label = j.at("label").get<std::string>();
    if (kind == "fredholm") {
        FredholmReport r;
        r.label = label;
        for (const auto& p : j.at("per_m")) r.per_m.push_back({p.at("m").get<Index>(), detail::cplx_of(p.at("det"))});
        r.stabilized_value = detail::cplx_of(j.at("stabilized_value"));
        r.spread = detail::number_of(j.at("spread"));
        r.converged = j.at("converged").get<bool>();
        if (!j.at("ambient_consistency").is_null()) r.ambient_consistency = detail::number_of(j.at("ambient_consistency"));
        r.tolerance = detail::number_of(j.at("tolerance"));
        return r;
    }
    if (kind == "tail") return tail_from_json(j);
    if (kind == "hypotheses") {
        HypothesisReport h;
        h.label = label;
        for (const auto& p : j.at("products"))
            h.products.emplace_back(p.at("name").get<std::string>(), tail_from_json(p.at("diagnostic")));
        h.sigma_min_a = detail::number_of(j.at("sigma_min_a"));
        h.sigma_min_b = detail::number_of(j.at("sigma_min_b"));
        return h;
    }
    if (kind == "trace_table") {
        TraceTable t{label, {}};
        for (const auto& p : j.at("rows")) t.rows.push_back({p.at("window_dim").get<Index>(), detail::cplx_of(p.at("trace"))});
        return t;
    }
    if (kind == "value_table") {
        ValueTable t{label, j.at("columns").get<std::vector<std::string>>(), {}};
        for (const auto& row : j.at("rows")) {
            std::vector<double> r;
            for (const auto& v : row) r.push_back(detail::number_of(v));
            t.rows.push_back(std::move(r));
        }
        return t;
    }
    if (kind == "metrics") {
        Metrics m{label, {}};
        for (const auto& [k, v] : j.at("values").items()) m.add(k, detail::number_of(v));
        return m;
    }
    throw IoError("unknown report kind " + kind);
}

inline ScenarioResult result_from_json(const Json& j) {
    ScenarioResult r;
    r.name = j.at("name").get<std::string>();
    r.parameters = j.at("parameters");
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::int64_t>();
    if (!j.at("expected").is_string()) r.expected = detail::cplx_of(j.at("expected"));
    r.computed = detail::cplx_of(j.at("computed"));
    r.deviation = detail::number_of(j.at("deviation"));
    r.tolerance = detail::number_of(j.at("tolerance"));
    r.converged = j.at("converged").get<bool>();
    r.passed = j.at("passed").get<bool>();
    r.sign_convention = {j.at("sign_convention").at("commutator_sign").get<int>(),
                         j.at("sign_convention").at("momentum_sign").get<int>()};
    for (const auto& rep : j.at("reports")) r.reports.push_back(report_from_json(rep));
    r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    return r;
}

/// The JSON text used for reproducibility comparisons: runtime_ms zeroed.
inline std::string canonical_json(const ScenarioResult& r) {
    Json j = to_json(r);
    j["runtime_ms"] = 0;
    return j.dump();
}

namespace detail {

inline std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

inline void close_checked(std::ofstream& out, const std::filesystem::path& path) {
    out.close();
    if (!out) throw IoError("write failed for " + path.string());
}

inline std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

inline void emit_json(const ScenarioResult& r, const std::filesystem::path& path) {
    auto out = detail::open_out(path);
    out << to_json(r).dump(2) << '\n';
    detail::close_checked(out, path);
}

inline ScenarioResult read_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return result_from_json(Json::parse(in));
}

/// CSV text for a report, one row per table entry.
inline std::string csv_text(const Report& rep) {
    using detail::g17;
    std::string s;
    auto line = [&s](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) s += ',';
            s += cells[i];
        }
        s += '\n';
    };
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, FredholmReport>) {
                line({"m", "det_re", "det_im", "abs_det"});
                for (const auto& p : r.per_m)
                    line({std::to_string(p.m), g17(p.det.real()), g17(p.det.imag()), g17(std::abs(p.det))});
            } else if constexpr (std::is_same_v<T, TraceTable>) {
                line({"window_dim", "trace_re", "trace_im"});
                for (const auto& p : r.rows) line({std::to_string(p.m), g17(p.trace.real()), g17(p.trace.imag())});
            } else if constexpr (std::is_same_v<T, TailDiagnostic>) {
                line({"m", "partial_sum"});
                for (const auto& p : r.per_m) line({std::to_string(p.m), g17(p.partial_sum)});
            } else if constexpr (std::is_same_v<T, ValueTable>) {
                line(r.columns);
                for (const auto& row : r.rows) {
                    std::vector<std::string> cells;
                    for (double v : row) cells.push_back(g17(v));
                    line(cells);
                }
            } else if constexpr (std::is_same_v<T, HypothesisReport>) {
                line({"product", "m", "partial_sum"});
                for (const auto& [name, t] : r.products)
                    for (const auto& p : t.per_m) line({name, std::to_string(p.m), g17(p.partial_sum)});
            } else {
                line({"key", "value"});
                for (const auto& [k, v] : r.values) line({k, g17(v)});
            }
        },
        rep);
    return s;
}

inline void emit_csv(const Report& rep, const std::filesystem::path& path) {
    auto out = detail::open_out(path);
    out << csv_text(rep);
    detail::close_checked(out, path);
}

struct RunManifest {
    std::string tool_version = version;
    std::string scenario;
    Json parameters = Json::object();
    std::optional<std::int64_t> seed;
    std::string started_at;
    std::vector<std::string> artifacts;
};

inline std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline Json to_json(const RunManifest& m) {
    return {{"tool_version", m.tool_version},
            {"scenario", m.scenario},
            {"parameters", m.parameters},
            {"seed", m.seed ? Json(*m.seed) : Json(nullptr)},
            {"started_at", m.started_at},
            {"artifacts", m.artifacts}};
}

inline void emit_manifest(const RunManifest& m, const std::filesystem::path& path) {
    auto out = detail::open_out(path);
    out << to_json(m).dump(2) << '\n';
    detail::close_checked(out, path);
}

/// Lowercase alphanumerics, everything else collapsed to '-'.
inline std::string slug(const std::string& label) {
    std::string s;
    for (char c : label) {
        if (std::isalnum(static_cast<unsigned char>(c)))
            s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        else if (!s.empty() && s.back() != '-')
            s += '-';
    }
    while (!s.empty() && s.back() == '-') s.pop_back();
    return s.empty() ? "report" : s;
}

/// Writes result.json and one CSV per table-like report under dir.
/// Returns the written paths, result.json first.
inline std::vector<std::string> persist_result(const ScenarioResult& r, const std::filesystem::path& dir) {
    std::vector<std::string> paths;
    const auto json_path = dir / "result.json";
    emit_json(r, json_path);
    paths.push_back(json_path.string());
    for (std::size_t i = 0; i < r.reports.size(); ++i) {
        const std::string label = std::visit([](const auto& x) { return x.label; }, r.reports[i]);
        char prefix[8];
        std::snprintf(prefix, sizeof prefix, "%02zu-", i);
        const auto p = dir / (prefix + slug(label) + ".csv");
        emit_csv(r.reports[i], p);
        paths.push_back(p.string());
    }
    return paths;
}

}  // namespace fcl
