#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace curvkit {

/// One verified configuration inside a sweep.
struct SampleRecord {
    std::string geometry;
    std::uint64_t index = 0;
    double residual = 0.0;
    bool pass = true;

    friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

/// A sample that violated its tolerance (or threw), with enough context to
/// replay it: the substream index, the sampled inputs, and both values.
struct FailureRecord {
    std::uint64_t sample_index = 0;
    std::string geometry;
    std::string inputs;  // compact JSON of the sampled configuration
    double expected = 0.0;
    double actual = 0.0;
    double residual = 0.0;

    friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

/// Residual statistics of one property sweep. The verdict is pass exactly
/// when the failure list is empty.
struct SweepReport {
    std::string suite;
    std::vector<std::string> geometries;
    int n = 2;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::uint64_t samples_run = 0;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    std::vector<SampleRecord> samples;
    std::vector<FailureRecord> failures;

    bool pass() const noexcept { return failures.empty(); }

    friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

enum class ReportFormat { Json, Csv };

/// Serialized report. JSON carries the full object (round-trips through
/// parse_report_json); CSV has a header and one row per sample with columns
/// suite,geometry,n,sample_index,residual,pass. Both are byte-deterministic
/// for identical reports.
std::string emit(const SweepReport& report, ReportFormat format);

SweepReport parse_report_json(const std::string& text);

/// Aggregate max/mean over the per-sample residuals and sort failures by
/// sample index. Call once after all samples are filled in.
void finalize_report(SweepReport& report);

}  // namespace curvkit
