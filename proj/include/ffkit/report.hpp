#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ffkit/errors.hpp"

namespace ffkit {

inline constexpr const char* kToolName = "ffkit";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class ReportFormat { Json, Csv };

ReportFormat report_format_from_name(const std::string& name);

// One report per CLI invocation: a canonical JSON envelope plus a row stream
// (JSON lines or CSV with a frozen column order) and any standalone verdict
// documents. Identical configs produce identical bytes; the timestamp is the
// only varying field and is dropped entirely in diff mode.
struct ReportEnvelope {
    std::string command;                 // e.g. "fermat survey"
    std::string slug;                    // file-name stem, e.g. "fermat_survey"
    nlohmann::json config;               // echoed configuration
    nlohmann::json summary;              // subcommand digest
    std::vector<std::string> csv_columns;
    std::vector<nlohmann::json> rows;
    std::vector<std::pair<std::string, nlohmann::json>> documents; // (file stem, doc)
    bool include_timestamp = true;
};

// Writes <slug>.report.json, <slug>.rows.jsonl or .csv, and one
// <stem>.json per document; returns the paths written.
std::vector<std::filesystem::path> emit_report(const ReportEnvelope& envelope,
                                               const std::filesystem::path& out_dir,
                                               ReportFormat format);

} // namespace ffkit
