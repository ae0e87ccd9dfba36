#pragma once

#include "bihom/construct.hpp"

namespace bihom {

/// Runs the bimodule identity set of the base variety over (base, module)
/// basis tuples. The base algebra itself is not re-checked here.
std::vector<CheckReport> check_bimodule(const BimodulePresentation& m,
                                        Transcription variant = Transcription::AsPrinted,
                                        const CheckOptions& opts = {});

struct SemidirectResult {
    AlgebraPresentation algebra;  // dim = base.dim + dim_v, base block first
    int base_dim = 0;
    int module_dim = 0;
};

/// Split null extension: block product tables with V.V = 0, block-diagonal
/// maps. Requires the bimodule check to pass; the failing identity is
/// forwarded in the error.
SemidirectResult semidirect(const BimodulePresentation& m,
                            Transcription variant = Transcription::AsPrinted,
                            const CheckOptions& opts = {});

/// Transposes all action matrices and both module maps. Requires the
/// variety's dual-precondition set (when it has one) to pass on m.
BimodulePresentation dual_bimodule(const BimodulePresentation& m,
                                   Transcription variant = Transcription::AsPrinted,
                                   const CheckOptions& opts = {});

/// Twisted bimodule over the Yau-twisted base: base products are composed
/// with (alpha1p (x) alpha2p), actions become (act . alpha_p) followed by
/// the complementary module twist, module maps compose. The commutation and
/// intertwining hypotheses are checked exactly.
struct TwistedBimodule {
    AlgebraPresentation base;
    BimodulePresentation module;
};
TwistedBimodule twist_bimodule(const BimodulePresentation& m, const Matrix& alpha1p,
                               const Matrix& alpha2p, const Matrix& beta1p, const Matrix& beta2p);

struct MatchedPairReport {
    std::vector<CheckReport> constituent_a;
    std::vector<CheckReport> constituent_b;
    std::vector<CheckReport> bimodule_a_on_b;
    std::vector<CheckReport> bimodule_b_on_a;
    std::vector<CheckReport> cross;  // the matched-pair equation block
    bool pass() const;
};

/// Layered verification mirroring the hypotheses: both constituents against
/// their variety set, both action bundles as bimodules, then the
/// cross-equation block over mixed tuples.
MatchedPairReport check_matched_pair(const MatchedPairPresentation& p,
                                     Transcription variant = Transcription::AsPrinted,
                                     const CheckOptions& opts = {});

struct MatchedSumResult {
    AlgebraPresentation algebra;  // dim = dimA + dimB, A block first
    int dim_a = 0;
    int dim_b = 0;
};

/// The sum algebra on A + B: block tables plus the cross-action terms.
/// Requires check_matched_pair to pass.
MatchedSumResult matched_sum(const MatchedPairPresentation& p,
                             Transcription variant = Transcription::AsPrinted,
                             const CheckOptions& opts = {});

/// Builds the sum algebra without any precondition checks (used by tests
/// and by the degenerate-pair comparisons).
AlgebraPresentation matched_sum_table(const MatchedPairPresentation& p);

/// Collapses a tridendriform matched pair to the associated associative
/// one: constituents summed, action families summed per side.
MatchedPairPresentation matched_to_associative(const MatchedPairPresentation& p,
                                               Transcription variant = Transcription::AsPrinted,
                                               const CheckOptions& opts = {});

/// Degenerate matched pair induced by a bimodule: B is the module space
/// with zero products and the module maps as its twisting maps; A acts on B
/// through the bimodule actions and B acts on A by zero.
MatchedPairPresentation pair_from_bimodule(const BimodulePresentation& m);

/// Bimodule with all action matrices zero and identity module maps.
BimodulePresentation zero_bimodule(const AlgebraPresentation& a, int dim_v);

/// Sums a tridendriform bimodule's actions into an associative bimodule of
/// the summed product.
BimodulePresentation sum_bimodule(const BimodulePresentation& m);

}  // namespace bihom
