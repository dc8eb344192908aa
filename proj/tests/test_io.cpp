// Copyright 2026 The FCL Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "fcl/harness/io.hpp"
#include "fcl/scenarios/scenarios.hpp"

using namespace fcl;

namespace {

std::filesystem::path scratch(const std::string& name) {
    const auto p = std::filesystem::temp_directory_path() / ("fcl-io-" + name);
    std::filesystem::remove_all(p);
    return p;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("scenario results survive a JSON round trip") {
    const auto r = run_hhp(cplx{0.5, 0.25}, 200, {10, 20, 40, 80});
    const ScenarioResult back = result_from_json(to_json(r));
    CHECK(back.name == r.name);
    CHECK(back.parameters == r.parameters);
    CHECK(back.expected == r.expected);
    CHECK(back.computed == r.computed);
    CHECK(back.deviation == r.deviation);
    CHECK(back.converged == r.converged);
    CHECK(back.sign_convention.commutator_sign == r.sign_convention.commutator_sign);
    CHECK(back.reports.size() == r.reports.size());
    CHECK(to_json(back).dump() == to_json(r).dump());

    const auto text = to_json(r).dump();
    CHECK(result_from_json(Json::parse(text)).computed == r.computed);
}

TEST_CASE("every report kind round trips") {
    ScenarioResult r;
    r.name = "synthetic";
    r.seed = 12;
    FredholmReport f;
    f.label = "f";
    f.per_m = {{2, {0.1, 0.2}}, {4, {0.3, -0.4}}};
    f.ambient_consistency = 1e-17;
    r.reports.emplace_back(f);
    r.reports.emplace_back(TailDiagnostic{"t", {{1, 0.5}, {2, 0.75}}, Verdict::Diverging, 0.3});
    HypothesisReport h;
    h.products.emplace_back("(A-I)(B-I)", TailDiagnostic{"p", {{1, 1.0}}, Verdict::Summable, 0.0});
    r.reports.emplace_back(h);
    r.reports.emplace_back(TraceTable{"tr", {{3, {0.0, 12.5}}}});
    r.reports.emplace_back(ValueTable{"v", {"a", "b"}, {{1.0, 2.0}, {3.0, 1.0 / 3.0}}});
    Metrics m{"metrics", {}};
    m.add("x", 0.1).add("nan", std::numeric_limits<double>::quiet_NaN());
    r.reports.emplace_back(m);

    const Json j = to_json(r);
    CHECK(j["expected"] == "exploratory");
    CHECK(j["reports"][5]["values"]["nan"].is_null());
    const auto back = result_from_json(j);
    CHECK_FALSE(back.expected.has_value());
    CHECK(back.seed == 12);
    CHECK(std::isnan(back.metrics().get("nan")));
    CHECK(std::get<ValueTable>(back.reports[4]).rows[1][1] == 1.0 / 3.0);
    CHECK(std::get<HypothesisReport>(back.reports[2]).products[0].second.verdict == Verdict::Summable);
    CHECK(to_json(back).dump() == j.dump());
    CHECK_THROWS_AS(report_from_json(Json{{"kind", "mystery"}, {"label", "x"}}), IoError);
}

TEST_CASE("CSV tables") {
    FredholmReport f;
    f.label = "det";
    f.per_m = {{10, {1.0 / 3.0, 0.0}}, {20, {0.5, -0.5}}, {40, {0.25, 0.0}}};
    const std::string text = csv_text(f);
    CHECK(text.rfind("m,det_re,det_im,abs_det\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.find("0.33333333333333331") != std::string::npos);

    const std::string tr = csv_text(TraceTable{"t", {{64, {0.0, 1.0}}, {128, {0.0, 2.0}}}});
    CHECK(tr == "window_dim,trace_re,trace_im\n64,0,1\n128,0,2\n");

    const auto dir = scratch("csv");
    emit_csv(f, dir / "det.csv");
    CHECK(slurp(dir / "det.csv") == text);
}

TEST_CASE("CSV row count equals the schedule length") {
    const CompressionSchedule sched{10, 20, 40, 80, 120};
    const auto r = run_shift_counterexample(1.0, 400, sched);
    const std::string text = csv_text(*r.reports_of<FredholmReport>().front());
    CHECK(std::count(text.begin(), text.end(), '\n') == std::ptrdiff_t(sched.size()) + 1);
}

TEST_CASE("persisted results and manifests") {
    const auto r = run_finite_identity(3, 6);
    const auto dir = scratch("persist");
    const auto paths = persist_result(r, dir / "finite");
    REQUIRE(paths.size() == 1 + r.reports.size());
    for (const auto& p : paths) CHECK(std::filesystem::exists(p));
    CHECK(read_json(paths.front()).computed == r.computed);

    RunManifest m;
    m.scenario = "finite-identity";
    m.started_at = utc_now();
    m.artifacts = paths;
    emit_manifest(m, dir / "manifest.json");
    const auto j = Json::parse(slurp(dir / "manifest.json"));
    CHECK(j["tool_version"] == version);
    CHECK(j["artifacts"].size() == paths.size());
    CHECK(j["started_at"].get<std::string>().back() == 'Z');
    CHECK_THROWS_AS(read_json(dir / "missing.json"), IoError);
}

TEST_CASE("slugs") {
    CHECK(slug("[A,B]A^-1B^-1") == "a-b-a-1b-1");
    CHECK(slug("!!") == "report");
}
