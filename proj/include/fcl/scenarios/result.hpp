// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fcl/operators.hpp"

namespace fcl {

struct TraceTable {
    std::string label;
    std::vector<TracePoint> rows;
};

/// Named numeric columns, one row per entry of a sweep.
struct ValueTable {
    std::string label;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Scalar findings in insertion order.
struct Metrics {
    std::string label;
    std::vector<std::pair<std::string, double>> values;

    Metrics& add(std::string key, double v) {
        values.emplace_back(std::move(key), v);
        return *this;
    }
    double get(const std::string& key) const {
        for (const auto& [k, v] : values)
            if (k == key) return v;
        throw PreconditionError("Metrics: no entry " + key);
    }
};

using Report = std::variant<FredholmReport, TailDiagnostic, HypothesisReport, TraceTable, ValueTable, Metrics>;

struct SignConvention {
    int commutator_sign = 0;  // [R, L] = sign * P_1 on the first basis vector
    int momentum_sign = 0;    // p e^{iwx} = sign * w e^{iwx}
};

struct ScenarioResult {
    std::string name;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::optional<std::int64_t> seed;
    std::optional<cplx> expected;  // empty: exploratory
    cplx computed{0.0};
    double deviation = 0.0;
    double tolerance = 0.0;
    bool converged = false;
    bool passed = false;  // all numeric checks of the scenario met
    SignConvention sign_convention;
    std::vector<Report> reports;
    std::int64_t runtime_ms = 0;

    bool exploratory() const { return !expected.has_value(); }

    const Metrics& metrics(const std::string& label = "metrics") const {
        for (const auto& r : reports)
            if (const auto* m = std::get_if<Metrics>(&r); m && m->label == label) return *m;
        throw PreconditionError("ScenarioResult: no metrics block " + label);
    }
    template <class T>
    std::vector<const T*> reports_of() const {
        std::vector<const T*> out;
        for (const auto& r : reports)
            if (const auto* p = std::get_if<T>(&r)) out.push_back(p);
        return out;
    }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline nlohmann::ordered_json schedule_json(const CompressionSchedule& s) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (Index m : s) j.push_back(m);
    return j;
}

inline nlohmann::ordered_json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace fcl
