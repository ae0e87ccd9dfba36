#include "bihom/ir.hpp"

#include <algorithm>

namespace bihom {

namespace {
int find_name(const std::vector<std::string>& names, const std::string& n) {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return int(i);
    return -1;
}
}  // namespace

int Signature::sort_index(const std::string& name) const {
    for (size_t i = 0; i < sorts.size(); ++i)
        if (sorts[i].name == name) return int(i);
    return -1;
}
int Signature::map_index(const std::string& name) const {
    for (size_t i = 0; i < maps.size(); ++i)
        if (maps[i].name == name) return int(i);
    return -1;
}
int Signature::prod_index(const std::string& name) const {
    for (size_t i = 0; i < prods.size(); ++i)
        if (prods[i].name == name) return int(i);
    return -1;
}
int Signature::act_index(const std::string& name) const {
    for (size_t i = 0; i < acts.size(); ++i)
        if (acts[i].name == name) return int(i);
    return -1;
}
bool Signature::has_param(const std::string& name) const {
    return find_name(params, name) >= 0;
}

// Name uniqueness is global across symbol kinds so that expressions stay
// unambiguous without arity-based lookup.
static void check_fresh(const Signature& sig, const std::string& name) {
    if (sig.sort_index(name) >= 0 || sig.map_index(name) >= 0 || sig.prod_index(name) >= 0 ||
        sig.act_index(name) >= 0 || sig.has_param(name))
        throw Error("signature: duplicate name '" + name + "'");
}

int Signature::add_sort(std::string name, SortRole role) {
    check_fresh(*this, name);
    sorts.push_back({std::move(name), role});
    return int(sorts.size()) - 1;
}
int Signature::add_map(std::string name, int from, int to) {
    check_fresh(*this, name);
    if (from < 0 || from >= int(sorts.size()) || to < 0 || to >= int(sorts.size()))
        throw Error("signature: map '" + name + "' references undeclared sort");
    maps.push_back({std::move(name), from, to});
    return int(maps.size()) - 1;
}
int Signature::add_prod(std::string name, int left, int right, int out) {
    check_fresh(*this, name);
    for (int s : {left, right, out})
        if (s < 0 || s >= int(sorts.size()))
            throw Error("signature: prod '" + name + "' references undeclared sort");
    prods.push_back({std::move(name), left, right, out});
    return int(prods.size()) - 1;
}
int Signature::add_act(std::string name, int alg, int mod, Side side) {
    check_fresh(*this, name);
    for (int s : {alg, mod})
        if (s < 0 || s >= int(sorts.size()))
            throw Error("signature: act '" + name + "' references undeclared sort");
    acts.push_back({std::move(name), alg, mod, side});
    return int(acts.size()) - 1;
}
void Signature::add_param(std::string name) {
    check_fresh(*this, name);
    params.push_back(std::move(name));
}

bool Signature::operator==(const Signature& o) const {
    auto sort_eq = [](const Sort& a, const Sort& b) { return a.name == b.name && a.role == b.role; };
    auto map_eq = [](const MapSym& a, const MapSym& b) {
        return a.name == b.name && a.from == b.from && a.to == b.to;
    };
    auto prod_eq = [](const ProdSym& a, const ProdSym& b) {
        return a.name == b.name && a.left == b.left && a.right == b.right && a.out == b.out;
    };
    auto act_eq = [](const ActSym& a, const ActSym& b) {
        return a.name == b.name && a.alg == b.alg && a.mod == b.mod && a.side == b.side;
    };
    return std::equal(sorts.begin(), sorts.end(), o.sorts.begin(), o.sorts.end(), sort_eq) &&
           std::equal(maps.begin(), maps.end(), o.maps.begin(), o.maps.end(), map_eq) &&
           std::equal(prods.begin(), prods.end(), o.prods.begin(), o.prods.end(), prod_eq) &&
           std::equal(acts.begin(), acts.end(), o.acts.begin(), o.acts.end(), act_eq) &&
           params == o.params;
}

bool Expr::operator==(const Expr& o) const {
    return kind == o.kind && symbol == o.symbol && sort == o.sort && var_index == o.var_index &&
           args == o.args;
}

const Identity* IdentitySet::find(const std::string& id_name) const {
    for (const auto& id : identities)
        if (id.name == id_name) return &id;
    return nullptr;
}

int sort_check(const Expr& e, const Signature& sig, const std::vector<VarDecl>& vars) {
    switch (e.kind) {
        case Expr::Kind::Var: {
            for (const auto& v : vars)
                if (v.sort == e.sort && v.index == e.var_index) return e.sort;
            throw Error("sort check: undeclared variable");
        }
        case Expr::Kind::Map: {
            if (e.symbol < 0 || e.symbol >= int(sig.maps.size()))
                throw Error("sort check: unknown map symbol");
            int got = sort_check(e.args[0], sig, vars);
            const auto& m = sig.maps[e.symbol];
            if (got != m.from)
                throw Error("sort check: map '" + m.name + "' expects sort '" +
                            sig.sorts[m.from].name + "', got '" + sig.sorts[got].name + "'");
            return m.to;
        }
        case Expr::Kind::Prod: {
            if (e.symbol < 0 || e.symbol >= int(sig.prods.size()))
                throw Error("sort check: unknown product symbol");
            const auto& p = sig.prods[e.symbol];
            int gl = sort_check(e.args[0], sig, vars);
            int gr = sort_check(e.args[1], sig, vars);
            if (gl != p.left || gr != p.right)
                throw Error("sort check: product '" + p.name + "' expects (" +
                            sig.sorts[p.left].name + ", " + sig.sorts[p.right].name + "), got (" +
                            sig.sorts[gl].name + ", " + sig.sorts[gr].name + ")");
            return p.out;
        }
        case Expr::Kind::Act: {
            if (e.symbol < 0 || e.symbol >= int(sig.acts.size()))
                throw Error("sort check: unknown action symbol");
            const auto& a = sig.acts[e.symbol];
            int gl = sort_check(e.args[0], sig, vars);
            int gr = sort_check(e.args[1], sig, vars);
            if (gl != a.alg || gr != a.mod)
                throw Error("sort check: action '" + a.name + "' expects (" +
                            sig.sorts[a.alg].name + ", " + sig.sorts[a.mod].name + "), got (" +
                            sig.sorts[gl].name + ", " + sig.sorts[gr].name + ")");
            return a.mod;
        }
    }
    throw Error("sort check: corrupt expression");
}

static void collect_vars(const Expr& e, std::vector<std::pair<int, int>>& out) {
    if (e.kind == Expr::Kind::Var) {
        out.emplace_back(e.sort, e.var_index);
        return;
    }
    for (const auto& a : e.args) collect_vars(a, out);
}

std::vector<std::pair<int, int>> free_vars(const Expr& e) {
    std::vector<std::pair<int, int>> out;
    collect_vars(e, out);
    std::sort(out.begin(), out.end());
    return out;
}

void wellform_identity(const Identity& id, const Signature& sig) {
    if (id.terms.empty()) throw Error("identity '" + id.name + "': empty term list");
    for (const auto& v : id.vars) {
        if (v.sort < 0 || v.sort >= int(sig.sorts.size()))
            throw Error("identity '" + id.name + "': variable of undeclared sort");
    }
    int out = -1;
    std::vector<std::pair<int, int>> mset;
    for (size_t t = 0; t < id.terms.size(); ++t) {
        const Term& term = id.terms[t];
        if (!term.param.empty() && !sig.has_param(term.param))
            throw Error("identity '" + id.name + "': undeclared parameter '" + term.param + "'");
        int s = sort_check(term.expr, sig, id.vars);
        // exhaustive basis checking is complete only for multilinear terms
        auto fv = free_vars(term.expr);
        for (size_t i = 1; i < fv.size(); ++i)
            if (fv[i] == fv[i - 1])
                throw Error("identity '" + id.name + "': variable repeated within one term");
        if (t == 0) {
            out = s;
            mset = std::move(fv);
        } else {
            if (s != out)
                throw Error("identity '" + id.name + "': terms of mixed output sort ('" +
                            sig.sorts[out].name + "' vs '" + sig.sorts[s].name + "')");
            if (fv != mset)
                throw Error("identity '" + id.name + "': free-variable multiset differs between terms");
        }
    }
    if (out != id.out_sort)
        throw Error("identity '" + id.name + "': recorded output sort disagrees with terms");
    // every declared variable must occur, exactly matching the multiset support
    for (const auto& v : id.vars) {
        bool used = false;
        for (const auto& p : mset)
            if (p.first == v.sort && p.second == v.index) { used = true; break; }
        if (!used)
            throw Error("identity '" + id.name + "': unused variable '" + v.name + "'");
    }
}

void wellform_set(const IdentitySet& set) {
    for (const auto& id : set.identities) wellform_identity(id, set.sig);
}

}  // namespace bihom
