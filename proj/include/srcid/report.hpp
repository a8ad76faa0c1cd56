#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srcid/engine.hpp"

namespace srcid {

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_report_format(const std::string& name);

struct RunReport {
    SamplingConfig config;
    Selection selection;
    std::vector<VerificationReport> cases;

    bool all_pass() const;
};

// Runs the selected cases in registry order.
RunReport run_verification(const Selection& sel, const SamplingConfig& config);

std::string field_name(FieldKind f);
FieldKind parse_field(const std::string& name);

// Timings are omitted when timings = false, making the output a pure function
// of (selection, config).
std::string to_json(const RunReport& report, bool timings);
std::string to_csv(const RunReport& report, bool timings);
std::string to_text(const RunReport& report, bool timings);
std::string render(const RunReport& report, ReportFormat format, bool timings);

}  // namespace srcid
