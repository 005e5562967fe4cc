#include "ffkit/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

namespace ffkit {

namespace {

std::string iso_timestamp_utc() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string csv_cell(const nlohmann::json& v) {
    std::string s;
    if (v.is_null()) {
        return "";
    } else if (v.is_string()) {
        s = v.get<std::string>();
    } else if (v.is_boolean()) {
        s = v.get<bool>() ? "true" : "false";
    } else {
        s = v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : s) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        quoted += '"';
        return quoted;
    }
    return s;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    if (!out.good()) {
        throw DomainError("IoFailure", "cannot open " + path.string() + " for writing");
    }
    out << contents;
    if (!out.good()) {
        throw DomainError("IoFailure", "write failed for " + path.string());
    }
}

} // namespace

ReportFormat report_format_from_name(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw DomainError("UnknownFormat", "format must be json or csv, got " + name);
}

std::vector<std::filesystem::path> emit_report(const ReportEnvelope& envelope,
                                               const std::filesystem::path& out_dir,
                                               ReportFormat format) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw DomainError("IoFailure", "cannot create output directory " + out_dir.string());
    }

    std::vector<std::filesystem::path> written;

    nlohmann::json doc;
    doc["schema"] = kSchemaVersion;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["command"] = envelope.command;
    doc["config"] = envelope.config;
    if (envelope.include_timestamp) doc["timestamp"] = iso_timestamp_utc();
    doc["summary"] = envelope.summary;
    doc["row_count"] = envelope.rows.size();
    doc["rows"] = envelope.rows;

    std::filesystem::path report_path = out_dir / (envelope.slug + ".report.json");
    write_file(report_path, doc.dump(2) + "\n");
    written.push_back(report_path);

    if (format == ReportFormat::Json) {
        std::string lines;
        for (const auto& row : envelope.rows) lines += row.dump() + "\n";
        std::filesystem::path rows_path = out_dir / (envelope.slug + ".rows.jsonl");
        write_file(rows_path, lines);
        written.push_back(rows_path);
    } else {
        std::string csv;
        for (std::size_t i = 0; i < envelope.csv_columns.size(); ++i) {
            if (i > 0) csv += ',';
            csv += envelope.csv_columns[i];
        }
        csv += '\n';
        for (const auto& row : envelope.rows) {
            for (std::size_t i = 0; i < envelope.csv_columns.size(); ++i) {
                if (i > 0) csv += ',';
                auto it = row.find(envelope.csv_columns[i]);
                csv += csv_cell(it == row.end() ? nlohmann::json() : *it);
            }
            csv += '\n';
        }
        std::filesystem::path rows_path = out_dir / (envelope.slug + ".rows.csv");
        write_file(rows_path, csv);
        written.push_back(rows_path);
    }

    for (const auto& [stem, document] : envelope.documents) {
        std::filesystem::path path = out_dir / (stem + ".json");
        write_file(path, document.dump(2) + "\n");
        written.push_back(path);
    }
    return written;
}

} // namespace ffkit
