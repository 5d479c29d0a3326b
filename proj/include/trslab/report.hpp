#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace trslab {

enum class Verdict { kPass, kFail, kSkipped, kOutsideProvedRange };

/// "PASS", "FAIL", "SKIPPED", "OUTSIDE-PROVED-RANGE".
std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

struct Counts {
    std::uint64_t classes = 0;
    std::uint64_t deep_hole_classes = 0;
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;
    bool operator==(const Counts&) const = default;
};

struct FamilyCount {
    std::string label;
    std::uint64_t expected = 0;
    std::uint64_t found = 0;
    bool operator==(const FamilyCount&) const = default;
};

struct VerificationReport {
    static constexpr int kSchemaVersion = 1;

    int schema_version = kSchemaVersion;
    std::string check;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    Verdict verdict = Verdict::kPass;
    Counts counts;
    std::vector<FamilyCount> families;
    /// Element indices (and small integers) that re-derive each finding.
    std::vector<std::vector<std::int64_t>> witnesses;
    std::string note;

    /// Excluded from deterministic output.
    struct Metadata {
        double wall_ms = 0;
        std::string tool_version;
        bool operator==(const Metadata&) const = default;
    } metadata;

    bool operator==(const VerificationReport&) const = default;
};

enum class Format { kJson, kCsv, kText };

/// Throws std::invalid_argument for anything but json, csv, text.
Format parse_format(std::string_view s);

nlohmann::ordered_json to_json(const VerificationReport& r, bool with_metadata = true);
VerificationReport report_from_json(const nlohmann::ordered_json& j);
VerificationReport parse_report(std::string_view json_text);

/// One report. csv includes the header line.
std::string emit(const VerificationReport& r, Format format);
/// A JSON array, one CSV header plus a row per report, or text lines.
std::string emit_all(const std::vector<VerificationReport>& reports, Format format);

std::string csv_header();
std::string csv_row(const VerificationReport& r);

}  // namespace trslab
