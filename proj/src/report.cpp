#include "trslab/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace trslab {

using nlohmann::ordered_json;

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join_witnesses(const std::vector<std::vector<std::int64_t>>& ws) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += '|';
        for (std::size_t j = 0; j < ws[i].size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(ws[i][j]);
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::kPass:
            return "PASS";
        case Verdict::kFail:
            return "FAIL";
        case Verdict::kSkipped:
            return "SKIPPED";
        case Verdict::kOutsideProvedRange:
            return "OUTSIDE-PROVED-RANGE";
    }
    return "FAIL";
}

Verdict verdict_from_string(std::string_view s) {
    if (s == "PASS") return Verdict::kPass;
    if (s == "FAIL") return Verdict::kFail;
    if (s == "SKIPPED") return Verdict::kSkipped;
    if (s == "OUTSIDE-PROVED-RANGE") return Verdict::kOutsideProvedRange;
    throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

Format parse_format(std::string_view s) {
    if (s == "json") return Format::kJson;
    if (s == "csv") return Format::kCsv;
    if (s == "text") return Format::kText;
    throw std::invalid_argument("unknown format '" + std::string(s) + "' (json, csv, text)");
}

ordered_json to_json(const VerificationReport& r, bool with_metadata) {
    ordered_json j;
    j["schema_version"] = r.schema_version;
    j["check"] = r.check;
    j["params"] = r.params;
    j["verdict"] = std::string(to_string(r.verdict));
    j["counts"] = {{"classes", r.counts.classes},
                   {"deep_hole_classes", r.counts.deep_hole_classes},
                   {"cases", r.counts.cases},
                   {"mismatches", r.counts.mismatches}};
    j["families"] = ordered_json::array();
    for (const auto& f : r.families) {
        j["families"].push_back({{"label", f.label}, {"expected", f.expected}, {"found", f.found}});
    }
    j["witnesses"] = r.witnesses;
    j["note"] = r.note;
    if (with_metadata) {
        j["metadata"] = {{"wall_ms", r.metadata.wall_ms}, {"tool_version", r.metadata.tool_version}};
    }
    return j;
}

VerificationReport report_from_json(const ordered_json& j) {
    VerificationReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != VerificationReport::kSchemaVersion) {
        throw std::invalid_argument("unsupported report schema version " + std::to_string(r.schema_version));
    }
    r.check = j.at("check").get<std::string>();
    r.params = j.at("params");
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    const auto& c = j.at("counts");
    r.counts.classes = c.at("classes").get<std::uint64_t>();
    r.counts.deep_hole_classes = c.at("deep_hole_classes").get<std::uint64_t>();
    r.counts.cases = c.value("cases", std::uint64_t{0});
    r.counts.mismatches = c.value("mismatches", std::uint64_t{0});
    for (const auto& f : j.at("families")) {
        r.families.push_back(
            {f.at("label").get<std::string>(), f.at("expected").get<std::uint64_t>(), f.at("found").get<std::uint64_t>()});
    }
    r.witnesses = j.at("witnesses").get<std::vector<std::vector<std::int64_t>>>();
    r.note = j.value("note", std::string{});
    if (j.contains("metadata")) {
        const auto& m = j.at("metadata");
        r.metadata.wall_ms = m.value("wall_ms", 0.0);
        r.metadata.tool_version = m.value("tool_version", std::string{});
    }
    return r;
}

VerificationReport parse_report(std::string_view json_text) {
    return report_from_json(ordered_json::parse(json_text));
}

std::string csv_header() {
    return "check,verdict,params,classes,deep_hole_classes,cases,mismatches,families,witnesses,note,wall_ms";
}

std::string csv_row(const VerificationReport& r) {
    std::string families;
    for (std::size_t i = 0; i < r.families.size(); ++i) {
        if (i) families += ';';
        families += r.families[i].label + ":" + std::to_string(r.families[i].expected) + "/" +
                    std::to_string(r.families[i].found);
    }
    std::ostringstream wall;
    wall << std::fixed << std::setprecision(3) << r.metadata.wall_ms;
    std::ostringstream os;
    os << csv_escape(r.check) << ',' << to_string(r.verdict) << ',' << csv_escape(r.params.dump()) << ','
       << r.counts.classes << ',' << r.counts.deep_hole_classes << ',' << r.counts.cases << ',' << r.counts.mismatches
       << ',' << csv_escape(families) << ',' << csv_escape(join_witnesses(r.witnesses)) << ',' << csv_escape(r.note)
       << ',' << wall.str();
    return os.str();
}

std::string emit(const VerificationReport& r, Format format) {
    switch (format) {
        case Format::kJson:
            return to_json(r).dump(2) + "\n";
        case Format::kCsv:
            return csv_header() + "\n" + csv_row(r) + "\n";
        case Format::kText: {
            std::ostringstream os;
            os << std::left << std::setw(22) << to_string(r.verdict) << r.check << ' ' << r.params.dump();
            if (r.counts.classes) os << " classes=" << r.counts.classes << " deep=" << r.counts.deep_hole_classes;
            if (r.counts.cases) os << " cases=" << r.counts.cases;
            if (r.counts.mismatches) os << " mismatches=" << r.counts.mismatches;
            for (const auto& f : r.families) os << ' ' << f.label << '=' << f.found << '/' << f.expected;
            if (!r.note.empty()) os << "  (" << r.note << ')';
            os << std::fixed << std::setprecision(1) << "  [" << r.metadata.wall_ms << " ms]\n";
            return os.str();
        }
    }
    return {};
}

std::string emit_all(const std::vector<VerificationReport>& reports, Format format) {
    switch (format) {
        case Format::kJson: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            return arr.dump(2) + "\n";
        }
        case Format::kCsv: {
            std::string out = csv_header() + "\n";
            for (const auto& r : reports) out += csv_row(r) + "\n";
            return out;
        }
        case Format::kText: {
            std::string out;
            for (const auto& r : reports) out += emit(r, Format::kText);
            return out;
        }
    }
    return {};
}

}  // namespace trslab
