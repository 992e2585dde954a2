#pragma once

// Verification reports: an ordered list of named checks per spec file, with
// deterministic text and structured (JSON, "report_version": 1) renderings.

#include <cstddef>
#include <string>
#include <vector>

#include "kernatom/errors.hpp"

namespace kernatom {

inline constexpr int kReportVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus status);

struct CheckResult {
    // "<section>.<property>", e.g. atomicity.fiber-size.
    std::string name;
    std::string statement;
    CheckStatus status = CheckStatus::pass;
    // Computed facts backing the outcome (counts, dimensions, vectors).
    std::string detail;
    // Non-empty for every failure.
    Witness witness;
    // Set for skipped checks.
    std::string reason;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct Summary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;

    friend bool operator==(const Summary&, const Summary&) = default;
};

struct VerificationReport {
    std::string subject_path;
    std::string subject_kind;
    std::vector<CheckResult> checks;

    void pass(std::string name, std::string statement, std::string detail = {});
    // An empty witness is replaced by one naming the failed check, so every
    // failure carries something concrete.
    void fail(std::string name, std::string statement, Witness witness, std::string detail = {});
    void skip(std::string name, std::string statement, std::string reason);
    void record(std::string name, std::string statement, bool ok, std::string detail, Witness witness_on_fail);

    Summary summary() const;
    bool all_passed() const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct ReportDocument {
    int report_version = kReportVersion;
    std::string tool_version = kToolVersion;
    std::vector<VerificationReport> reports;

    Summary summary() const;
    bool all_passed() const;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

enum class ReportFormat { text, structured };

std::string emit(const ReportDocument& document, ReportFormat format);

// Inverse of emit(..., structured). Throws SpecError on malformed input or
// when the stored summary counts disagree with the checks.
ReportDocument parse_structured_report(const std::string& text);

}  // namespace kernatom
