#pragma once

#include "bihom/presentation.hpp"

namespace bihom {

/// Checks an algebra against its variety's identity set (or an explicit set).
std::vector<CheckReport> check_variety(const AlgebraPresentation& a,
                                       Transcription variant = Transcription::AsPrinted,
                                       const CheckOptions& opts = {});

/// Runs the operator's condition set (selected by kind) against every
/// product of the base algebra. Report names carry the product symbol when
/// the base has several products. Endomorphism kind checks multiplicativity
/// of the operator over every product.
std::vector<CheckReport> check_operator(const OperatorPresentation& op,
                                        const CheckOptions& opts = {});

/// Morphism conditions for f : A -> B, instantiated per product pair.
std::vector<CheckReport> check_morphism(const Matrix& f, const AlgebraPresentation& a,
                                        const AlgebraPresentation& b,
                                        const CheckOptions& opts = {});

// Constructions. Outputs are presentations and are never self-certified;
// callers re-run the evaluator to validate them.

AlgebraPresentation direct_sum(const AlgebraPresentation& a, const AlgebraPresentation& b);

/// Basis of the product is ordered row-major: (i, j) -> i * dimB + j.
AlgebraPresentation tensor_product(const AlgebraPresentation& a, const AlgebraPresentation& b);

/// Products composed with (alphaP^p (x) betaP^p); maps become
/// alphaP^p . alpha and betaP^p . beta. Preconditions (both twists are
/// endomorphisms of every product; all four maps pairwise commute) are
/// checked exactly and failures name the witness.
AlgebraPresentation yau_twist(const AlgebraPresentation& a, const Matrix& alpha_p,
                              const Matrix& beta_p, unsigned long p);

AlgebraPresentation derived_algebra(const AlgebraPresentation& a, unsigned long k, int type);

/// Products x, y -> mu(gamma2 gamma1 x, y); maps gamma1 alpha, gamma2 beta.
/// gamma1, gamma2 must pass the centroid check, commute with each other and
/// with the Rota-Baxter operator, which is carried over unchanged.
std::pair<AlgebraPresentation, OperatorPresentation> centroid_twist(
    const OperatorPresentation& rb, const Matrix& gamma1, const Matrix& gamma2);

/// Splits a Rota-Baxter structure on a BiHom-associative algebra into the
/// three tridendriform products x.R(y), R(x).y, lambda x.y.
AlgebraPresentation rb_tridendriform(const OperatorPresentation& rb);

/// dl(x,y) = mu(beta x, alpha y), dr(x,y) = mu(alpha x, beta y); requires
/// alpha and beta to pass the averaging check on the product.
AlgebraPresentation averaging_dialgebra(const AlgebraPresentation& a,
                                        const CheckOptions& opts = {});

/// Tridendriform to dendriform: keeps dl, replaces dr by dr + dot.
AlgebraPresentation tridend_to_dend(const AlgebraPresentation& t);

/// Sums all products into one associative product.
AlgebraPresentation sum_to_associative(const AlgebraPresentation& x);

struct DialgebraViews {
    std::vector<CheckReport> ls_dialgebra;                 // the weaker axiom set
    std::vector<std::vector<CheckReport>> per_product;     // each product as associative
    std::vector<CheckReport> single_product;               // set when dl == dr
};
DialgebraViews dialgebra_views(const AlgebraPresentation& d, const CheckOptions& opts = {});

/// Swaps the two twisting maps; requires alpha^2 = beta^2 = alpha beta =
/// beta alpha = id, checked exactly.
AlgebraPresentation involution_swap(const AlgebraPresentation& d);

struct GraphCheck {
    bool closed = false;
    std::string witness;  // description of the first failing closure, if any
};
/// Closure of the graph of f inside direct_sum(a, b) under all products and
/// both maps, via exact row reduction. The verdict coincides with
/// check_morphism by the graph criterion.
GraphCheck graph_check(const Matrix& f, const AlgebraPresentation& a,
                       const AlgebraPresentation& b);

struct IdealCheck {
    bool ideal = false;
    int rank = 0;          // rank of the normalized generating set
    std::string witness;
};
/// Two-sided ideal test of the span of the given vectors, by exact
/// membership of images under both maps and all left/right products.
IdealCheck ideal_check(const AlgebraPresentation& a, const std::vector<Vec>& span);

/// Convenience: true when every report passes; throws if reports disagree
/// with shapes (never silently).
bool passes(const std::vector<CheckReport>& reports);

}  // namespace bihom
