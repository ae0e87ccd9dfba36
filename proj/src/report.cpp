#include "bihom/report.hpp"

#include <sstream>

#include <json.hpp>

namespace bihom {

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xF);
    return os.str();
}

bool ReportDocument::all_pass() const {
    for (const auto& s : sections)
        for (const auto& r : s.reports)
            if (!r.pass) return false;
    return true;
}

namespace {

std::string tuple_text(const std::vector<int>& tuple) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < tuple.size(); ++i) os << (i ? ", e" : "e") << tuple[i];
    os << "]";
    return os.str();
}

std::string residual_text(const Vec& r) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < r.size(); ++i) os << (i ? ", " : "") << r[i].str();
    os << ")";
    return os.str();
}

}  // namespace

std::string render_text(const ReportDocument& doc) {
    std::ostringstream os;
    os << kToolName << " " << kToolVersion << "  input=" << doc.input_name
       << "  digest=" << doc.input_digest << "  transcription=" << doc.variant << "\n";
    for (const auto& s : doc.sections) {
        os << "== " << s.title << "\n";
        for (const auto& r : s.reports) {
            os << (r.pass ? "PASS " : "FAIL ") << r.identity << "  tuples=" << r.tuples_checked;
            if (r.mode == CheckMode::Random) os << " mode=random seed=" << r.seed;
            if (!r.pass) {
                os << "  failures=" << r.failure_count;
                for (const auto& f : r.failures)
                    os << "\n    witness " << tuple_text(f.tuple) << " residual "
                       << residual_text(f.residual);
            }
            os << "\n";
        }
    }
    os << (doc.all_pass() ? "RESULT pass" : "RESULT fail") << "\n";
    return os.str();
}

std::string render_json(const ReportDocument& doc) {
    nlohmann::ordered_json j;
    j["schemaVersion"] = kReportSchemaVersion;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["input"] = doc.input_name;
    j["inputDigest"] = doc.input_digest;
    j["transcription"] = doc.variant;
    j["allPass"] = doc.all_pass();
    auto& sections = j["sections"] = nlohmann::ordered_json::array();
    for (const auto& s : doc.sections) {
        nlohmann::ordered_json js;
        js["title"] = s.title;
        auto& checks = js["checks"] = nlohmann::ordered_json::array();
        for (const auto& r : s.reports) {
            nlohmann::ordered_json jr;
            jr["identity"] = r.identity;
            jr["status"] = r.pass ? "pass" : "fail";
            jr["tuplesChecked"] = r.tuples_checked;
            jr["mode"] = r.mode == CheckMode::Exhaustive ? "exhaustive" : "random";
            if (r.mode == CheckMode::Random) jr["seed"] = r.seed;
            jr["failureCount"] = r.failure_count;
            auto& fails = jr["failures"] = nlohmann::ordered_json::array();
            for (const auto& f : r.failures) {
                nlohmann::ordered_json jf;
                jf["tuple"] = f.tuple;
                auto& res = jf["residual"] = nlohmann::ordered_json::array();
                for (const auto& c : f.residual) res.push_back(c.str());
                fails.push_back(std::move(jf));
            }
            checks.push_back(std::move(jr));
        }
        sections.push_back(std::move(js));
    }
    return j.dump(2) + "\n";
}

}  // namespace bihom
