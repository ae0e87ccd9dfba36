#include "bihom/builtins.hpp"

#include <map>
#include <mutex>

#include "bihom/idnparse.hpp"

namespace bihom {

namespace detail {
extern const char* const kBihomAssociative;
extern const char* const kBihomLeftSymmetric;
extern const char* const kLsDialgebra;
extern const char* const kAssocDialgebra;
extern const char* const kBihomDendriform;
extern const char* const kBihomTridendriform;
extern const char* const kBihomTridendriformCorrected;
extern const char* const kRotaBaxter;
extern const char* const kCentroid;
extern const char* const kAveraging;
extern const char* const kMorphism;
extern const char* const kBimoduleAssociative;
extern const char* const kBimoduleLeftSymmetric;
extern const char* const kBimoduleLsDialgebra;
extern const char* const kBimoduleLsDialgebraCorrected;
extern const char* const kBimoduleAssocDialgebra;
extern const char* const kBimoduleAssocDialgebraCorrected;
extern const char* const kBimoduleDendriform;
extern const char* const kBimoduleTridendriform;
extern const char* const kDualPrecondLsDialgebra;
extern const char* const kDualPrecondTridendriform;
extern const char* const kMatchedAssociative;
extern const char* const kMatchedLeftSymmetric;
extern const char* const kMatchedLsDialgebra;
extern const char* const kMatchedAssocDialgebra;
extern const char* const kMatchedAssocDialgebraCorrected;
extern const char* const kMatchedDendriform;
extern const char* const kMatchedTridendriform;
}  // namespace detail

namespace {

struct Entry {
    const char* tag;
    const char* as_printed;
    const char* corrected;  // nullptr when identical to as_printed
};

const Entry kEntries[] = {
    {"bihom-associative", detail::kBihomAssociative, nullptr},
    {"bihom-left-symmetric", detail::kBihomLeftSymmetric, nullptr},
    {"ls-dialgebra", detail::kLsDialgebra, nullptr},
    {"assoc-dialgebra", detail::kAssocDialgebra, nullptr},
    {"bihom-dendriform", detail::kBihomDendriform, nullptr},
    {"bihom-tridendriform", detail::kBihomTridendriform, detail::kBihomTridendriformCorrected},
    {"rota-baxter", detail::kRotaBaxter, nullptr},
    {"centroid", detail::kCentroid, nullptr},
    {"averaging", detail::kAveraging, nullptr},
    {"morphism", detail::kMorphism, nullptr},
    {"bimodule-of-bihom-associative", detail::kBimoduleAssociative, nullptr},
    {"bimodule-of-bihom-left-symmetric", detail::kBimoduleLeftSymmetric, nullptr},
    {"bimodule-of-ls-dialgebra", detail::kBimoduleLsDialgebra,
     detail::kBimoduleLsDialgebraCorrected},
    {"bimodule-of-assoc-dialgebra", detail::kBimoduleAssocDialgebra,
     detail::kBimoduleAssocDialgebraCorrected},
    {"bimodule-of-bihom-dendriform", detail::kBimoduleDendriform, nullptr},
    {"bimodule-of-bihom-tridendriform", detail::kBimoduleTridendriform, nullptr},
    {"dual-precondition-of-ls-dialgebra", detail::kDualPrecondLsDialgebra, nullptr},
    {"dual-precondition-of-bihom-tridendriform", detail::kDualPrecondTridendriform, nullptr},
    {"matched-pair-of-bihom-associative", detail::kMatchedAssociative, nullptr},
    {"matched-pair-of-bihom-left-symmetric", detail::kMatchedLeftSymmetric, nullptr},
    {"matched-pair-of-ls-dialgebra", detail::kMatchedLsDialgebra, nullptr},
    {"matched-pair-of-assoc-dialgebra", detail::kMatchedAssocDialgebra,
     detail::kMatchedAssocDialgebraCorrected},
    {"matched-pair-of-bihom-dendriform", detail::kMatchedDendriform, nullptr},
    {"matched-pair-of-bihom-tridendriform", detail::kMatchedTridendriform, nullptr},
};

std::map<std::string, IdentitySet>& cache() {
    static std::map<std::string, IdentitySet> c;
    return c;
}
std::mutex cache_mutex;

}  // namespace

std::string variety_name(Variety v) {
    switch (v) {
        case Variety::BihomAssociative: return "bihom-associative";
        case Variety::BihomLeftSymmetric: return "bihom-left-symmetric";
        case Variety::LsDialgebra: return "ls-dialgebra";
        case Variety::AssocDialgebra: return "assoc-dialgebra";
        case Variety::BihomDendriform: return "bihom-dendriform";
        case Variety::BihomTridendriform: return "bihom-tridendriform";
    }
    throw Error("unknown variety");
}

std::optional<Variety> parse_variety(const std::string& name) {
    for (Variety v : {Variety::BihomAssociative, Variety::BihomLeftSymmetric, Variety::LsDialgebra,
                      Variety::AssocDialgebra, Variety::BihomDendriform,
                      Variety::BihomTridendriform})
        if (variety_name(v) == name) return v;
    return std::nullopt;
}

int product_count(Variety v) {
    switch (v) {
        case Variety::BihomAssociative:
        case Variety::BihomLeftSymmetric: return 1;
        case Variety::LsDialgebra:
        case Variety::AssocDialgebra:
        case Variety::BihomDendriform: return 2;
        case Variety::BihomTridendriform: return 3;
    }
    throw Error("unknown variety");
}

std::vector<std::string> product_names(Variety v) {
    switch (product_count(v)) {
        case 1: return {"mul"};
        case 2: return {"dl", "dr"};
        default: return {"dl", "dr", "dot"};
    }
}

std::vector<std::string> action_names(Variety v) {
    switch (product_count(v)) {
        case 1: return {"l", "r"};
        case 2: return {"ldl", "rdl", "ldr", "rdr"};
        default: return {"ldl", "rdl", "ldr", "rdr", "ldot", "rdot"};
    }
}

const IdentitySet& builtin_identity_set(const std::string& tag, Transcription variant) {
    for (const auto& e : kEntries) {
        if (tag != e.tag) continue;
        const char* text = (variant == Transcription::Corrected && e.corrected) ? e.corrected
                                                                                : e.as_printed;
        std::string key = tag + std::string(variant == Transcription::Corrected && e.corrected
                                                ? "#corrected"
                                                : "#as_printed");
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache().find(key);
        if (it == cache().end()) it = cache().emplace(key, parse_identity_file(text)).first;
        return it->second;
    }
    throw Error("unknown identity-set tag '" + tag + "'");
}

bool has_corrected_variant(const std::string& tag) {
    for (const auto& e : kEntries)
        if (tag == e.tag) return e.corrected != nullptr;
    return false;
}

std::vector<std::string> builtin_tags() {
    std::vector<std::string> out;
    for (const auto& e : kEntries) out.push_back(e.tag);
    return out;
}

const std::vector<CoverageEntry>& coverage_ledger() {
    static const std::vector<CoverageEntry> ledger = {
        {"bihom-associative", 4},
        {"bihom-left-symmetric", 4},
        {"ls-dialgebra", 9},
        {"assoc-dialgebra", 10},
        {"bihom-dendriform", 8},
        {"bihom-tridendriform", 13},
        {"rota-baxter", 3},
        {"centroid", 4},
        {"averaging", 4},
        {"morphism", 3},
        {"bimodule-of-bihom-associative", 7},
        {"bimodule-of-bihom-left-symmetric", 6},
        {"bimodule-of-ls-dialgebra", 18},
        {"bimodule-of-assoc-dialgebra", 23},
        {"bimodule-of-bihom-dendriform", 17},
        {"bimodule-of-bihom-tridendriform", 29},
        {"dual-precondition-of-ls-dialgebra", 10},
        {"dual-precondition-of-bihom-tridendriform", 21},
        {"matched-pair-of-bihom-associative", 6},
        {"matched-pair-of-bihom-left-symmetric", 4},
        {"matched-pair-of-ls-dialgebra", 24},
        {"matched-pair-of-assoc-dialgebra", 30},
        {"matched-pair-of-bihom-dendriform", 18},
        {"matched-pair-of-bihom-tridendriform", 42},
    };
    return ledger;
}

}  // namespace bihom
