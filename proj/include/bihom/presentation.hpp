#pragma once

#include <array>
#include <optional>

#include "bihom/builtins.hpp"
#include "bihom/eval.hpp"
#include "bihom/linalg.hpp"

namespace bihom {

/// A finite-dimensional algebra given by structure constants. Validity
/// (the variety's identities holding) is never assumed; it is checked
/// explicitly through the evaluator.
struct AlgebraPresentation {
    std::string name;
    int dim = 0;
    Variety variety = Variety::BihomAssociative;
    std::vector<Tensor3> products;  // one per product_names(variety)
    Matrix alpha, beta;

    void validate_shapes() const;
    bool same_tables(const AlgebraPresentation& o) const;
};

enum class OperatorKind { RotaBaxter, Centroid, Averaging, Endomorphism };

std::string operator_kind_name(OperatorKind k);
std::optional<OperatorKind> parse_operator_kind(const std::string& name);

/// A linear operator attached to an algebra: a Rota-Baxter operator (with
/// its weight), a centroid element, an averaging operator, or a plain
/// endomorphism used for twisting.
struct OperatorPresentation {
    std::string name;
    AlgebraPresentation base;
    Matrix op;
    OperatorKind kind = OperatorKind::Endomorphism;
    Scalar weight;  // Rota-Baxter weight

    void validate_shapes() const;
};

/// Module space with its two maps and one action family per action symbol
/// of the base variety: actions[s][i] is the matrix of the s-th action of
/// the i-th base basis element on V.
struct BimodulePresentation {
    std::string name;
    AlgebraPresentation base;
    int dim_v = 0;
    Matrix beta1_v, beta2_v;
    std::vector<std::vector<Matrix>> actions;

    void validate_shapes() const;
};

/// Two algebras of one variety acting on each other. Cross actions follow
/// the same family layout as bimodules: actions_a_on_b[s][i] acts on B and
/// is indexed by the basis of A.
struct MatchedPairPresentation {
    std::string name;
    AlgebraPresentation a, b;
    std::vector<std::vector<Matrix>> actions_a_on_b;
    std::vector<std::vector<Matrix>> actions_b_on_a;

    void validate_shapes() const;
};

// Binding builders: attach presentations to the built-in signatures by
// symbol name.
ModelBinding bind_algebra(const IdentitySet& set, const AlgebraPresentation& a);
ModelBinding bind_operator(const IdentitySet& set, const AlgebraPresentation& a,
                           const Matrix& op, int product_index,
                           const std::optional<Scalar>& weight);
ModelBinding bind_morphism(const IdentitySet& set, const Matrix& f, const AlgebraPresentation& a,
                           const AlgebraPresentation& b, int product_index);
ModelBinding bind_bimodule(const IdentitySet& set, const BimodulePresentation& m);
ModelBinding bind_matched(const IdentitySet& set, const MatchedPairPresentation& p);

/// Exact endomorphism test of `m` against every product of `a`; returns the
/// witness (product index, i, j) of the first failing basis pair.
std::optional<std::array<int, 3>> endomorphism_witness(const AlgebraPresentation& a,
                                                       const Matrix& m);
/// First basis index where m1(m2(e_i)) differs from m2(m1(e_i)), if any.
std::optional<int> commute_witness(const Matrix& m1, const Matrix& m2);

// The shipped fixture library (shared ground truth for tests and docs).
namespace fixtures {

/// Zero products on d basis vectors, identity maps.
AlgebraPresentation Z(int d, Variety v = Variety::BihomAssociative);
/// One-dimensional unital algebra, identity maps.
AlgebraPresentation K1();
/// Dual numbers: e1 unit, e2 nilpotent, identity maps.
AlgebraPresentation N2();
/// N2 with both maps the scaling endomorphism e1 -> e1, e2 -> c e2.
AlgebraPresentation N2_sigma(const Scalar& c);
/// Two-dimensional diagnostic model from the worked example family; its
/// axioms fail for most parameter values, which is the point.
AlgebraPresentation E(const Scalar& a);
/// Noncommutative associative: e1e1=e1, e1e2=e2, e2e1=e2e2=0, id maps.
AlgebraPresentation P2();
/// P2 twisted by the scaling endomorphisms diag(1,2) and diag(1,3).
AlgebraPresentation P2ab();
/// Dialgebra on the dual numbers induced by the projection averaging
/// operator: dl(x,y) = x p(y), dr(x,y) = p(x) y, identity maps.
AlgebraPresentation D2();
/// D2 twisted by diag(1,2) and diag(1,3).
AlgebraPresentation D2ab();
/// Proper left-symmetric (non-associative): e1*e2 = e2, all else zero.
AlgebraPresentation LS2();
/// LS2 twisted by diag(1,2) and diag(1,3).
AlgebraPresentation LS2ab();
/// Scaling matrix diag(1, c) on a 2-dim space.
Matrix sigma(const Scalar& c);
/// Rota-Baxter operator -lambda id on K1.
OperatorPresentation RB1(const Scalar& lambda);
/// Rota-Baxter operator diag(0, -lambda) of weight lambda on P2 or P2ab.
OperatorPresentation RB_P2(const AlgebraPresentation& base, const Scalar& lambda);
/// Regular bimodule of any algebra: V = A, left/right multiplications.
BimodulePresentation regular_bimodule(const AlgebraPresentation& a);

}  // namespace fixtures

}  // namespace bihom
