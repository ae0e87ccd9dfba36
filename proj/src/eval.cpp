#include "bihom/eval.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace bihom {

void ModelBinding::validate() const {
    if (!sig) throw Error("binding: no signature");
    if (sort_dims.size() != sig->sorts.size()) throw Error("binding: sort dimension list incomplete");
    for (size_t i = 0; i < sort_dims.size(); ++i)
        if (sort_dims[i] < 1) throw Error("binding: sort '" + sig->sorts[i].name + "' has dimension < 1");
    if (map_bindings.size() != sig->maps.size()) throw Error("binding: map symbol unbound");
    for (size_t i = 0; i < sig->maps.size(); ++i) {
        const auto& m = sig->maps[i];
        if (map_bindings[i].rows() != sort_dims[m.to] || map_bindings[i].cols() != sort_dims[m.from])
            throw Error("binding: map '" + m.name + "' has wrong shape");
    }
    if (prod_bindings.size() != sig->prods.size()) throw Error("binding: product symbol unbound");
    for (size_t i = 0; i < sig->prods.size(); ++i) {
        const auto& p = sig->prods[i];
        if (prod_bindings[i].dim_out() != sort_dims[p.out] ||
            prod_bindings[i].dim_l() != sort_dims[p.left] ||
            prod_bindings[i].dim_r() != sort_dims[p.right])
            throw Error("binding: product '" + p.name + "' has wrong shape");
    }
    if (act_bindings.size() != sig->acts.size()) throw Error("binding: action symbol unbound");
    for (size_t i = 0; i < sig->acts.size(); ++i) {
        const auto& a = sig->acts[i];
        if (int(act_bindings[i].size()) != sort_dims[a.alg])
            throw Error("binding: action '" + a.name + "' family length differs from acting dimension");
        for (const auto& m : act_bindings[i])
            if (m.rows() != sort_dims[a.mod] || m.cols() != sort_dims[a.mod])
                throw Error("binding: action '" + a.name + "' matrix has wrong shape");
    }
    for (const auto& p : sig->params)
        if (!scalar_params.count(p)) throw Error("binding: unbound scalar parameter '" + p + "'");
}

Vec eval_expr(const Expr& e, const ModelBinding& b, const Assignment& asg,
              const std::vector<VarDecl>& vars) {
    switch (e.kind) {
        case Expr::Kind::Var: {
            for (size_t i = 0; i < vars.size(); ++i)
                if (vars[i].sort == e.sort && vars[i].index == e.var_index) return asg[i];
            throw Error("eval: assignment does not cover a variable");
        }
        case Expr::Kind::Map:
            return b.map_bindings[e.symbol].apply(eval_expr(e.args[0], b, asg, vars));
        case Expr::Kind::Prod:
            return b.prod_bindings[e.symbol].apply(eval_expr(e.args[0], b, asg, vars),
                                                   eval_expr(e.args[1], b, asg, vars));
        case Expr::Kind::Act: {
            Vec x = eval_expr(e.args[0], b, asg, vars);
            Vec v = eval_expr(e.args[1], b, asg, vars);
            const auto& family = b.act_bindings[e.symbol];
            int dim_mod = b.sort_dims[b.sig->acts[e.symbol].mod];
            Vec out(dim_mod);
            for (size_t i = 0; i < family.size(); ++i) {
                if (x[i].is_zero()) continue;
                Vec w = family[i].apply(v);
                for (int k = 0; k < dim_mod; ++k) out[k] += x[i] * w[k];
            }
            return out;
        }
    }
    throw Error("eval: corrupt expression");
}

Vec residual(const Identity& id, const ModelBinding& b, const Assignment& asg) {
    Vec acc(b.sort_dims[id.out_sort]);
    for (const auto& term : id.terms) {
        Scalar c = term.coeff;
        if (!term.param.empty()) {
            auto it = b.scalar_params.find(term.param);
            if (it == b.scalar_params.end())
                throw Error("eval: unbound scalar parameter '" + term.param + "'");
            c = c * it->second;
        }
        if (c.is_zero()) continue;
        Vec val = eval_expr(term.expr, b, asg, id.vars);
        for (size_t k = 0; k < acc.size(); ++k) acc[k] += c * val[k];
    }
    return acc;
}

namespace {

Vec basis_vec(int dim, int index1) {
    Vec v(dim);
    v[index1 - 1] = Scalar(1);
    return v;
}

int resolve_workers(const CheckOptions& opts) {
    int w = opts.workers;
    if (w <= 0) {
        if (const char* env = std::getenv("BIHOM_WORKERS")) w = std::atoi(env);
        if (w <= 0) w = 1;
    }
    return std::min(w, 64);
}

// Sweep tuples [from, to) of the flattened index space for one identity.
void sweep_range(const Identity& id, const ModelBinding& b, const std::vector<int>& dims,
                 long from, long to, int cap, std::vector<Failure>& failures, long& count) {
    int n = int(dims.size());
    std::vector<int> tuple(n, 1);
    Assignment asg(n);
    for (long flat = from; flat < to; ++flat) {
        long rest = flat;
        for (int i = n - 1; i >= 0; --i) {
            tuple[i] = int(rest % dims[i]) + 1;
            rest /= dims[i];
        }
        for (int i = 0; i < n; ++i) asg[i] = basis_vec(dims[i], tuple[i]);
        Vec r = residual(id, b, asg);
        if (!is_zero(r)) {
            ++count;
            if (int(failures.size()) < cap) failures.push_back({tuple, std::move(r)});
        }
    }
}

}  // namespace

std::vector<CheckReport> check_identities(const IdentitySet& set, const ModelBinding& b,
                                          const CheckOptions& opts) {
    b.validate();
    int workers = resolve_workers(opts);
    std::vector<CheckReport> reports;
    reports.reserve(set.identities.size());
    for (const auto& id : set.identities) {
        std::vector<int> dims;
        long total = 1;
        for (const auto& v : id.vars) {
            dims.push_back(b.sort_dims[v.sort]);
            total *= dims.back();
            if (total > opts.max_tuples)
                throw Error("identity '" + id.name +
                            "': exhaustive tuple count exceeds budget; use the random mode");
        }
        CheckReport rep;
        rep.identity = id.name;
        rep.mode = CheckMode::Exhaustive;
        rep.tuples_checked = total;
        if (workers <= 1 || total < 256) {
            sweep_range(id, b, dims, 0, total, opts.failure_cap, rep.failures, rep.failure_count);
        } else {
            // partition the flattened tuple space; merge preserves lexicographic order
            int parts = workers;
            std::vector<std::vector<Failure>> fails(parts);
            std::vector<long> counts(parts, 0);
            std::vector<std::thread> threads;
            for (int p = 0; p < parts; ++p) {
                long from = total * p / parts, to = total * (p + 1) / parts;
                threads.emplace_back([&, p, from, to] {
                    sweep_range(id, b, dims, from, to, opts.failure_cap, fails[p], counts[p]);
                });
            }
            for (auto& t : threads) t.join();
            for (int p = 0; p < parts; ++p) {
                rep.failure_count += counts[p];
                for (auto& f : fails[p])
                    if (int(rep.failures.size()) < opts.failure_cap)
                        rep.failures.push_back(std::move(f));
            }
        }
        rep.pass = rep.failure_count == 0;
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::vector<CheckReport> spot_check(const IdentitySet& set, const ModelBinding& b, long samples,
                                    std::uint64_t seed, const CheckOptions& opts) {
    if (samples < 1) throw Error("spot check: need at least one sample");
    b.validate();
    std::vector<CheckReport> reports;
    for (const auto& id : set.identities) {
        Mcg64 rng(seed);
        CheckReport rep;
        rep.identity = id.name;
        rep.mode = CheckMode::Random;
        rep.seed = seed;
        rep.tuples_checked = samples;
        int n = int(id.vars.size());
        std::vector<int> tuple(n);
        Assignment asg(n);
        std::vector<Failure> found;
        for (long s = 0; s < samples; ++s) {
            for (int i = 0; i < n; ++i) {
                int dim = b.sort_dims[id.vars[i].sort];
                tuple[i] = rng.below(dim) + 1;
                asg[i] = basis_vec(dim, tuple[i]);
            }
            Vec r = residual(id, b, asg);
            if (!is_zero(r)) found.push_back({tuple, std::move(r)});
        }
        std::sort(found.begin(), found.end(),
                  [](const Failure& a, const Failure& c) { return a.tuple < c.tuple; });
        found.erase(std::unique(found.begin(), found.end()), found.end());
        rep.failure_count = long(found.size());
        for (auto& f : found)
            if (int(rep.failures.size()) < opts.failure_cap) rep.failures.push_back(std::move(f));
        rep.pass = rep.failure_count == 0;
        reports.push_back(std::move(rep));
    }
    return reports;
}

bool all_pass(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

std::vector<std::string> random_assignment_failures(const IdentitySet& set, const ModelBinding& b,
                                                    int count, std::uint64_t seed) {
    b.validate();
    std::vector<std::string> bad;
    for (const auto& id : set.identities) {
        Mcg64 rng(seed);
        bool ok = true;
        for (int s = 0; s < count && ok; ++s) {
            Assignment asg;
            for (const auto& v : id.vars) {
                Vec vec(b.sort_dims[v.sort]);
                for (auto& x : vec) x = rng.rational();
                asg.push_back(std::move(vec));
            }
            if (!is_zero(residual(id, b, asg))) ok = false;
        }
        if (!ok) bad.push_back(id.name);
    }
    return bad;
}

}  // namespace bihom
