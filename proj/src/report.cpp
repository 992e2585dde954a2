#include "kernatom/report.hpp"

#include <sstream>

#include <json.hpp>

namespace kernatom {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string counts(const Summary& s) {
    return std::to_string(s.total) + (s.total == 1 ? " check, " : " checks, ") + std::to_string(s.passed) +
           " passed, " + std::to_string(s.failed) + " failed, " + std::to_string(s.skipped) + " skipped";
}

ordered_json summary_json(const Summary& s) {
    return ordered_json{{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}};
}

Summary summary_from(const ordered_json& j) {
    return Summary{j.at("total").get<std::size_t>(), j.at("passed").get<std::size_t>(),
                   j.at("failed").get<std::size_t>(), j.at("skipped").get<std::size_t>()};
}

CheckStatus status_from(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "skipped") return CheckStatus::skipped;
    throw SpecError("unknown check status '" + s + "'");
}

void add(Summary& s, CheckStatus status) {
    ++s.total;
    switch (status) {
        case CheckStatus::pass: ++s.passed; break;
        case CheckStatus::fail: ++s.failed; break;
        case CheckStatus::skipped: ++s.skipped; break;
    }
}

std::string emit_text(const ReportDocument& doc) {
    std::ostringstream out;
    out << "kernatom report (report_version " << doc.report_version << ", tool " << doc.tool_version << ")\n";
    for (const auto& r : doc.reports) {
        out << "\n[" << r.subject_kind << "] " << r.subject_path << "\n";
        for (const auto& c : r.checks) {
            const char* tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "SKIP";
            out << "  " << tag << "  " << c.name << ": " << c.statement << "\n";
            if (!c.detail.empty()) out << "        detail: " << c.detail << "\n";
            if (!c.witness.empty()) {
                out << "        witness:";
                for (const auto& [k, v] : c.witness) out << " " << k << "=" << v;
                out << "\n";
            }
            if (!c.reason.empty()) out << "        reason: " << c.reason << "\n";
        }
        out << "  summary: " << counts(r.summary()) << "\n";
    }
    const auto total = doc.summary();
    out << "\ntotal: " << doc.reports.size() << (doc.reports.size() == 1 ? " report, " : " reports, ")
        << counts(total) << "\n";
    return out.str();
}

std::string emit_structured(const ReportDocument& doc) {
    ordered_json root;
    root["report_version"] = doc.report_version;
    root["tool_version"] = doc.tool_version;
    ordered_json reports = ordered_json::array();
    for (const auto& r : doc.reports) {
        ordered_json checks = ordered_json::array();
        for (const auto& c : r.checks) {
            ordered_json witness = ordered_json::array();
            for (const auto& [k, v] : c.witness) witness.push_back(ordered_json{{"key", k}, {"value", v}});
            checks.push_back(ordered_json{{"name", c.name},
                                          {"statement", c.statement},
                                          {"status", to_string(c.status)},
                                          {"detail", c.detail},
                                          {"witness", witness},
                                          {"reason", c.reason}});
        }
        reports.push_back(ordered_json{{"subject", ordered_json{{"path", r.subject_path}, {"kind", r.subject_kind}}},
                                       {"checks", checks},
                                       {"summary", summary_json(r.summary())}});
    }
    root["reports"] = reports;
    root["summary"] = summary_json(doc.summary());
    return root.dump(2) + "\n";
}

}  // namespace

const char* to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

void VerificationReport::pass(std::string name, std::string statement, std::string detail) {
    checks.push_back({std::move(name), std::move(statement), CheckStatus::pass, std::move(detail), {}, {}});
}

void VerificationReport::fail(std::string name, std::string statement, Witness witness, std::string detail) {
    if (witness.empty()) witness.emplace_back("check", name);
    checks.push_back({std::move(name), std::move(statement), CheckStatus::fail, std::move(detail),
                      std::move(witness), {}});
}

void VerificationReport::skip(std::string name, std::string statement, std::string reason) {
    checks.push_back({std::move(name), std::move(statement), CheckStatus::skipped, {}, {}, std::move(reason)});
}

void VerificationReport::record(std::string name, std::string statement, bool ok, std::string detail,
                                Witness witness_on_fail) {
    if (ok)
        pass(std::move(name), std::move(statement), std::move(detail));
    else
        fail(std::move(name), std::move(statement), std::move(witness_on_fail), std::move(detail));
}

Summary VerificationReport::summary() const {
    Summary s;
    for (const auto& c : checks) add(s, c.status);
    return s;
}

bool VerificationReport::all_passed() const { return summary().failed == 0; }

Summary ReportDocument::summary() const {
    Summary s;
    for (const auto& r : reports)
        for (const auto& c : r.checks) add(s, c.status);
    return s;
}

bool ReportDocument::all_passed() const { return summary().failed == 0; }

std::string emit(const ReportDocument& document, ReportFormat format) {
    return format == ReportFormat::text ? emit_text(document) : emit_structured(document);
}

ReportDocument parse_structured_report(const std::string& text) {
    try {
        const auto root = ordered_json::parse(text);
        ReportDocument doc;
        doc.report_version = root.at("report_version").get<int>();
        if (doc.report_version != kReportVersion) throw SpecError("unsupported report_version");
        doc.tool_version = root.at("tool_version").get<std::string>();
        for (const auto& r : root.at("reports")) {
            VerificationReport report;
            report.subject_path = r.at("subject").at("path").get<std::string>();
            report.subject_kind = r.at("subject").at("kind").get<std::string>();
            for (const auto& c : r.at("checks")) {
                CheckResult check;
                check.name = c.at("name").get<std::string>();
                check.statement = c.at("statement").get<std::string>();
                check.status = status_from(c.at("status").get<std::string>());
                check.detail = c.at("detail").get<std::string>();
                for (const auto& w : c.at("witness"))
                    check.witness.emplace_back(w.at("key").get<std::string>(), w.at("value").get<std::string>());
                check.reason = c.at("reason").get<std::string>();
                report.checks.push_back(std::move(check));
            }
            if (summary_from(r.at("summary")) != report.summary())
                throw SpecError("report summary disagrees with its checks", {{"subject", report.subject_path}});
            doc.reports.push_back(std::move(report));
        }
        if (summary_from(root.at("summary")) != doc.summary())
            throw SpecError("document summary disagrees with its checks");
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw SpecError(std::string("malformed structured report: ") + e.what());
    }
}

}  // namespace kernatom
