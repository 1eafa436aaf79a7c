#include "curvkit/report.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace curvkit {

using nlohmann::json;

namespace {

json to_json(const SweepReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) {
        failures.push_back(json{{"sample_index", f.sample_index},
                                {"geometry", f.geometry},
                                {"inputs", f.inputs},
                                {"expected", f.expected},
                                {"actual", f.actual},
                                {"residual", f.residual}});
    }
    json samples = json::array();
    for (const auto& s : r.samples) {
        samples.push_back(json{{"geometry", s.geometry},
                               {"index", s.index},
                               {"residual", s.residual},
                               {"pass", s.pass}});
    }
    return json{{"suite", r.suite},
                {"geometries", r.geometries},
                {"n", r.n},
                {"seed", r.seed},
                {"tol", r.tol},
                {"samples_run", r.samples_run},
                {"max_residual", r.max_residual},
                {"mean_residual", r.mean_residual},
                {"verdict", r.pass() ? "pass" : "fail"},
                {"failures", failures},
                {"samples", samples}};
}

}  // namespace

std::string emit(const SweepReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        return to_json(report).dump(2) + "\n";
    }
    std::string out = "suite,geometry,n,sample_index,residual,pass\n";
    for (const auto& s : report.samples) {
        out += report.suite;
        out += ',';
        out += s.geometry;
        out += ',';
        out += std::to_string(report.n);
        out += ',';
        out += std::to_string(s.index);
        out += ',';
        out += json(s.residual).dump();  // shortest round-trip float text
        out += ',';
        out += s.pass ? "true" : "false";
        out += '\n';
    }
    return out;
}

SweepReport parse_report_json(const std::string& text) {
    const json j = json::parse(text);
    SweepReport r;
    r.suite = j.at("suite").get<std::string>();
    r.geometries = j.at("geometries").get<std::vector<std::string>>();
    r.n = j.at("n").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tol = j.at("tol").get<double>();
    r.samples_run = j.at("samples_run").get<std::uint64_t>();
    r.max_residual = j.at("max_residual").get<double>();
    r.mean_residual = j.at("mean_residual").get<double>();
    for (const auto& f : j.at("failures")) {
        FailureRecord rec;
        rec.sample_index = f.at("sample_index").get<std::uint64_t>();
        rec.geometry = f.at("geometry").get<std::string>();
        rec.inputs = f.at("inputs").get<std::string>();
        rec.expected = f.at("expected").get<double>();
        rec.actual = f.at("actual").get<double>();
        rec.residual = f.at("residual").get<double>();
        r.failures.push_back(std::move(rec));
    }
    for (const auto& s : j.at("samples")) {
        SampleRecord rec;
        rec.geometry = s.at("geometry").get<std::string>();
        rec.index = s.at("index").get<std::uint64_t>();
        rec.residual = s.at("residual").get<double>();
        rec.pass = s.at("pass").get<bool>();
        r.samples.push_back(std::move(rec));
    }
    return r;
}

void finalize_report(SweepReport& report) {
    report.samples_run = report.samples.size();
    double max = 0.0;
    double sum = 0.0;
    for (const auto& s : report.samples) {  // sequential: thread-count independent
        max = std::max(max, s.residual);
        sum += s.residual;
    }
    report.max_residual = max;
    report.mean_residual = report.samples.empty() ? 0.0 : sum / static_cast<double>(report.samples.size());
    std::sort(report.failures.begin(), report.failures.end(),
              [](const FailureRecord& a, const FailureRecord& b) {
                  return a.sample_index < b.sample_index;
              });
}

}  // namespace curvkit
