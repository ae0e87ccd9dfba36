#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bihom/scalar.hpp"

namespace bihom {

enum class SortRole { Algebra, Module, DualModule };
enum class Side { Left, Right };

/// Symbol alphabet of an identity set: sorts, unary map symbols, binary
/// product symbols, and action symbols (algebra element acting on a module
/// element). Scalar parameters (the Rota-Baxter weight) are declared here
/// and bound when a model is attached.
struct Signature {
    struct Sort {
        std::string name;
        SortRole role;
    };
    struct MapSym {
        std::string name;
        int from, to;  // sort indices
    };
    struct ProdSym {
        std::string name;
        int left, right, out;
    };
    struct ActSym {
        std::string name;
        int alg, mod;  // sort indices: acting sort, acted-on sort
        Side side;
    };

    std::vector<Sort> sorts;
    std::vector<MapSym> maps;
    std::vector<ProdSym> prods;
    std::vector<ActSym> acts;
    std::vector<std::string> params;

    int sort_index(const std::string& name) const;
    int map_index(const std::string& name) const;
    int prod_index(const std::string& name) const;
    int act_index(const std::string& name) const;
    bool has_param(const std::string& name) const;

    int add_sort(std::string name, SortRole role);
    int add_map(std::string name, int from, int to);
    int add_prod(std::string name, int left, int right, int out);
    int add_act(std::string name, int alg, int mod, Side side);
    void add_param(std::string name);

    bool operator==(const Signature& o) const;
};

/// One expression node. Var leaves carry (sort, 1-based index); the other
/// kinds reference a signature symbol by table index and hold their
/// arguments inline.
struct Expr {
    enum class Kind { Var, Map, Prod, Act };
    Kind kind = Kind::Var;
    int symbol = -1;    // map/prod/act table index
    int sort = -1;      // Var: sort index
    int var_index = 0;  // Var: 1-based per-sort index
    std::vector<Expr> args;

    static Expr var(int sort, int index) {
        Expr e;
        e.kind = Kind::Var;
        e.sort = sort;
        e.var_index = index;
        return e;
    }
    static Expr map(int symbol, Expr arg) {
        Expr e;
        e.kind = Kind::Map;
        e.symbol = symbol;
        e.args.push_back(std::move(arg));
        return e;
    }
    static Expr prod(int symbol, Expr l, Expr r) {
        Expr e;
        e.kind = Kind::Prod;
        e.symbol = symbol;
        e.args.push_back(std::move(l));
        e.args.push_back(std::move(r));
        return e;
    }
    static Expr act(int symbol, Expr alg, Expr mod) {
        Expr e;
        e.kind = Kind::Act;
        e.symbol = symbol;
        e.args.push_back(std::move(alg));
        e.args.push_back(std::move(mod));
        return e;
    }

    bool operator==(const Expr& o) const;
};

/// Variable of an identity: a sort plus 1-based index and its surface name.
struct VarDecl {
    int sort;
    int index;
    std::string name;
    bool operator==(const VarDecl& o) const {
        return sort == o.sort && index == o.index && name == o.name;
    }
};

/// coeff * (param?) * expr. The optional parameter name multiplies the
/// rational coefficient and is resolved against the model's bound scalars.
struct Term {
    Scalar coeff;
    std::string param;  // empty when the coefficient is a plain rational
    Expr expr;
    bool operator==(const Term& o) const {
        return coeff == o.coeff && param == o.param && expr == o.expr;
    }
};

/// Linear combination of sort-correct terms required to vanish identically.
struct Identity {
    std::string name;
    std::vector<VarDecl> vars;  // quantification order = tuple order in reports
    std::vector<Term> terms;
    int out_sort = -1;

    bool operator==(const Identity& o) const {
        return name == o.name && vars == o.vars && terms == o.terms && out_sort == o.out_sort;
    }
};

struct IdentitySet {
    std::string name;
    Signature sig;
    std::vector<Identity> identities;

    const Identity* find(const std::string& id_name) const;
    bool operator==(const IdentitySet& o) const {
        return name == o.name && sig == o.sig && identities == o.identities;
    }
};

/// Returns the expression's output sort, rejecting mis-sorted trees and
/// unknown symbols. Variables must appear in `vars` (checked by name-free
/// structural lookup on (sort, index)).
int sort_check(const Expr& e, const Signature& sig, const std::vector<VarDecl>& vars);

/// Multiset of Var leaves as sorted (sort, index) pairs.
std::vector<std::pair<int, int>> free_vars(const Expr& e);

/// Validates one identity: nonempty, every term sort-checks, all terms share
/// one output sort and one free-variable multiset, every declared variable
/// is used. Throws Error with the offending detail.
void wellform_identity(const Identity& id, const Signature& sig);

/// Validates every identity in the set.
void wellform_set(const IdentitySet& set);

}  // namespace bihom
