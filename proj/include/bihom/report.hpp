#pragma once

#include <cstdint>

#include "bihom/eval.hpp"

namespace bihom {

inline const char* kToolName = "bihom";
inline const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

/// FNV-1a 64-bit digest of the input bytes, printed as 16 hex digits.
std::string content_digest(const std::string& bytes);

/// One titled group of reports (a check target) in a document.
struct ReportSection {
    std::string title;
    std::vector<CheckReport> reports;
};

struct ReportDocument {
    std::string input_name;
    std::string input_digest;
    std::string variant;  // "as_printed" or "corrected"
    std::vector<ReportSection> sections;

    bool all_pass() const;
};

/// Human-readable rendering: one line per identity, exact rationals.
std::string render_text(const ReportDocument& doc);

/// Deterministic JSON rendering (stable field and element order).
std::string render_json(const ReportDocument& doc);

}  // namespace bihom
