#pragma once

#include "bihom/presentation.hpp"

namespace bihom {

/// Operator block as written in a model file. The base algebra is either
/// referenced by name (`on NAME;`, resolved within the same file) or left
/// open for the command line to supply.
struct OperatorBlock {
    std::string name;
    int dim = 0;
    OperatorKind kind = OperatorKind::Endomorphism;
    Scalar weight;
    bool has_weight = false;
    std::string on;  // empty when unattached
    Matrix op;
};

struct ParsedModel {
    std::vector<AlgebraPresentation> algebras;
    std::vector<OperatorBlock> operators;
    std::vector<BimodulePresentation> bimodules;
    std::vector<MatchedPairPresentation> matched;

    const AlgebraPresentation* find_algebra(const std::string& name) const;
    const OperatorBlock* find_operator(const std::string& name) const;
    /// Pairs an operator block with a base algebra (its `on` reference, or
    /// the given fallback), validating dimensions.
    OperatorPresentation make_operator(const OperatorBlock& block,
                                       const AlgebraPresentation* fallback) const;
};

/// Parses a model file. Grammar (see README):
///
///   file     := { block }
///   block    := "algebra" NAME "{" algitem* "}"
///             | "operator" NAME "{" opitem* "}"
///             | "bimodule" NAME "{" bimitem* "}"
///             | "matched" NAME "{" mpitem* "}"
///   algitem  := "dim" NAT ";" | "variety" TAG ";"
///             | "map" NAME "=" matrix ";" | "prod" NAME "{" entry* "}"
///   entry    := "(" NAT "," NAT ")" "->" lincomb ";"
///   lincomb  := "0" | sterm { "+" sterm } ; sterm := [RAT] "e" NAT
///   matrix   := "[" row { "," row } "]" ; row := "[" RAT { "," RAT } "]"
///
/// Rows of a matrix are output coordinates: entry (i, j) is the coefficient
/// of e_i in the image of e_j. Unspecified product entries are zero.
/// Dimensions are capped at 64. Comments run from '#' to end of line.
ParsedModel parse_model_file(const std::string& text);

std::string print_algebra(const AlgebraPresentation& a);
std::string print_operator(const OperatorBlock& block);
std::string print_bimodule(const BimodulePresentation& m);  // base block + bimodule block
std::string print_matched(const MatchedPairPresentation& p);
OperatorBlock to_block(const OperatorPresentation& op, bool with_on);

}  // namespace bihom
