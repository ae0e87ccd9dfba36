#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bihom/ir.hpp"

namespace bihom {

/// Structure varieties handled by the engine. Single-product varieties use
/// the product symbol `mul`; two-product ones `dl`, `dr`; tridendriform adds
/// `dot`. Twisting maps are `alpha`, `beta` (`alpha1/alpha2` and
/// `beta1/beta2` in two-sorted sets).
enum class Variety {
    BihomAssociative,
    BihomLeftSymmetric,
    LsDialgebra,
    AssocDialgebra,
    BihomDendriform,
    BihomTridendriform,
};

std::string variety_name(Variety v);
std::optional<Variety> parse_variety(const std::string& name);
int product_count(Variety v);
std::vector<std::string> product_names(Variety v);
std::vector<std::string> action_names(Variety v);  // bimodule action symbols

enum class Transcription { AsPrinted, Corrected };

/// Returns the named built-in identity set. Sets with a known misprint have
/// a corrected sibling; for the others both transcriptions coincide and the
/// as-printed text is returned. Throws Error for unknown tags.
///
/// Tags: the six variety names; "rota-baxter", "centroid", "averaging",
/// "morphism"; "bimodule-of-<variety>"; "matched-pair-of-<variety>";
/// "dual-precondition-of-ls-dialgebra",
/// "dual-precondition-of-bihom-tridendriform".
const IdentitySet& builtin_identity_set(const std::string& tag,
                                        Transcription variant = Transcription::AsPrinted);

/// True when the tag has a corrected transcription distinct from the
/// as-printed one.
bool has_corrected_variant(const std::string& tag);

std::vector<std::string> builtin_tags();

/// Expected identity counts per tag, asserted by the conformance suite.
struct CoverageEntry {
    const char* tag;
    int count;
};
const std::vector<CoverageEntry>& coverage_ledger();

}  // namespace bihom
