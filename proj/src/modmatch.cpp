#include "bihom/modmatch.hpp"

#include <sstream>

namespace bihom {

namespace {

std::string first_failure(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        if (r.pass) continue;
        std::ostringstream os;
        os << "'" << r.identity << "'";
        if (!r.failures.empty()) {
            os << " at (";
            for (size_t i = 0; i < r.failures[0].tuple.size(); ++i)
                os << (i ? ", e" : "e") << r.failures[0].tuple[i];
            os << ")";
        }
        return os.str();
    }
    return "";
}

}  // namespace

std::vector<CheckReport> check_bimodule(const BimodulePresentation& m, Transcription variant,
                                        const CheckOptions& opts) {
    const IdentitySet& set =
        builtin_identity_set("bimodule-of-" + variety_name(m.base.variety), variant);
    return check_identities(set, bind_bimodule(set, m), opts);
}

SemidirectResult semidirect(const BimodulePresentation& m, Transcription variant,
                            const CheckOptions& opts) {
    auto pre = check_bimodule(m, variant, opts);
    if (!all_pass(pre))
        throw Error("semidirect: bimodule check fails at " + first_failure(pre));
    SemidirectResult out;
    out.base_dim = m.base.dim;
    out.module_dim = m.dim_v;
    const int n = m.base.dim + m.dim_v;
    AlgebraPresentation& s = out.algebra;
    s.name = m.name + "_semidirect";
    s.dim = n;
    s.variety = m.base.variety;
    auto pnames = product_names(s.variety);
    for (size_t p = 0; p < pnames.size(); ++p) {
        Tensor3 t(n, n, n);
        const Tensor3& base = m.base.products[p];
        for (int k = 0; k < m.base.dim; ++k)
            for (int i = 0; i < m.base.dim; ++i)
                for (int j = 0; j < m.base.dim; ++j) t.at(k, i, j) = base.at(k, i, j);
        const auto& left = m.actions[2 * p];       // l_p(e_i) acting on V
        const auto& right = m.actions[2 * p + 1];  // r_p(e_j) acting on V
        for (int i = 0; i < m.base.dim; ++i)
            for (int j = 0; j < m.dim_v; ++j)
                for (int k = 0; k < m.dim_v; ++k) {
                    // base element in the left slot acts from the left
                    t.at(m.base.dim + k, i, m.base.dim + j) = left[i].at(k, j);
                    // base element in the right slot acts from the right
                    t.at(m.base.dim + k, m.base.dim + j, i) = right[i].at(k, j);
                }
        s.products.push_back(std::move(t));
    }
    auto block = [&](const Matrix& top, const Matrix& bottom) {
        Matrix b(n, n);
        for (int i = 0; i < m.base.dim; ++i)
            for (int j = 0; j < m.base.dim; ++j) b.at(i, j) = top.at(i, j);
        for (int i = 0; i < m.dim_v; ++i)
            for (int j = 0; j < m.dim_v; ++j) b.at(m.base.dim + i, m.base.dim + j) = bottom.at(i, j);
        return b;
    };
    s.alpha = block(m.base.alpha, m.beta1_v);
    s.beta = block(m.base.beta, m.beta2_v);
    return out;
}

BimodulePresentation dual_bimodule(const BimodulePresentation& m, Transcription variant,
                                   const CheckOptions& opts) {
    m.validate_shapes();
    std::string precond_tag;
    if (m.base.variety == Variety::LsDialgebra)
        precond_tag = "dual-precondition-of-ls-dialgebra";
    else if (m.base.variety == Variety::BihomTridendriform)
        precond_tag = "dual-precondition-of-bihom-tridendriform";
    if (!precond_tag.empty()) {
        const IdentitySet& pre = builtin_identity_set(precond_tag, variant);
        auto reports = check_identities(pre, bind_bimodule(pre, m), opts);
        if (!all_pass(reports))
            throw Error("dual bimodule: precondition fails at " + first_failure(reports));
    }
    BimodulePresentation out = m;
    out.name = m.name + "_dual";
    out.beta1_v = m.beta1_v.transpose();
    out.beta2_v = m.beta2_v.transpose();
    for (auto& family : out.actions)
        for (auto& mat : family) mat = mat.transpose();
    return out;
}

TwistedBimodule twist_bimodule(const BimodulePresentation& m, const Matrix& alpha1p,
                               const Matrix& alpha2p, const Matrix& beta1p, const Matrix& beta2p) {
    m.validate_shapes();
    // base-side hypotheses are those of the Yau twist
    AlgebraPresentation twisted_base = yau_twist(m.base, alpha1p, alpha2p, 1);
    // module-side: all four module maps commute pairwise
    const Matrix* vm[4] = {&m.beta1_v, &m.beta2_v, &beta1p, &beta2p};
    const char* vn[4] = {"beta1", "beta2", "beta1'", "beta2'"};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (auto w = commute_witness(*vm[i], *vm[j]))
                throw Error(std::string("twist bimodule: maps ") + vn[i] + " and " + vn[j] +
                            " do not commute (witness e" + std::to_string(*w) + ")");
    // intertwining: betaKp( act(x) v ) = act(alphaKp x)( betaKp v ) for all
    // actions and K in {1, 2}
    auto anames = action_names(m.base.variety);
    struct Pair {
        const Matrix* module_twist;
        const Matrix* base_twist;
        const char* label;
    };
    Pair pairs[2] = {{&beta1p, &alpha1p, "beta1'"}, {&beta2p, &alpha2p, "beta2'"}};
    for (size_t s = 0; s < m.actions.size(); ++s)
        for (const auto& pr : pairs)
            for (int i = 0; i < m.base.dim; ++i) {
                // act(alphaKp e_i) = sum_j (alphaKp)_{ji} act(e_j)
                Matrix lhs = pr.module_twist->compose(m.actions[s][i]);
                Matrix rhs(m.dim_v, m.dim_v);
                for (int j = 0; j < m.base.dim; ++j) {
                    if (pr.base_twist->at(j, i).is_zero()) continue;
                    rhs = rhs + m.actions[s][j].scaled(pr.base_twist->at(j, i));
                }
                rhs = rhs.compose(*pr.module_twist);
                if (lhs != rhs)
                    throw Error("twist bimodule: hypothesis " + std::string(pr.label) + " . " +
                                anames[s] + " = (" + anames[s] + " . twist) " + pr.label +
                                " fails at basis element e" + std::to_string(i + 1));
            }
    TwistedBimodule out;
    out.base = std::move(twisted_base);
    out.module.name = m.name + "_tw";
    out.module.base = out.base;
    out.module.dim_v = m.dim_v;
    out.module.beta1_v = m.beta1_v.compose(beta1p);
    out.module.beta2_v = m.beta2_v.compose(beta2p);
    // twisted action: act~(x) = act(alpha_p x) . beta_q with the side's
    // complementary module twist: left actions use alpha1p and beta2p,
    // right actions use alpha2p and beta1p
    for (size_t s = 0; s < m.actions.size(); ++s) {
        bool left = s % 2 == 0;
        const Matrix& base_twist = left ? alpha1p : alpha2p;
        const Matrix& module_twist = left ? beta2p : beta1p;
        std::vector<Matrix> family;
        for (int i = 0; i < m.base.dim; ++i) {
            Matrix acted(m.dim_v, m.dim_v);
            for (int j = 0; j < m.base.dim; ++j) {
                if (base_twist.at(j, i).is_zero()) continue;
                acted = acted + m.actions[s][j].scaled(base_twist.at(j, i));
            }
            family.push_back(acted.compose(module_twist));
        }
        out.module.actions.push_back(std::move(family));
    }
    return out;
}

bool MatchedPairReport::pass() const {
    return all_pass(constituent_a) && all_pass(constituent_b) && all_pass(bimodule_a_on_b) &&
           all_pass(bimodule_b_on_a) && all_pass(cross);
}

MatchedPairReport check_matched_pair(const MatchedPairPresentation& p, Transcription variant,
                                     const CheckOptions& opts) {
    p.validate_shapes();
    MatchedPairReport out;
    out.constituent_a = check_variety(p.a, variant, opts);
    out.constituent_b = check_variety(p.b, variant, opts);
    // A acting on B is a bimodule of A over the space of B, with B's
    // twisting maps as the module maps; symmetrically for B on A.
    BimodulePresentation a_on_b;
    a_on_b.name = p.name + "_AonB";
    a_on_b.base = p.a;
    a_on_b.dim_v = p.b.dim;
    a_on_b.beta1_v = p.b.alpha;
    a_on_b.beta2_v = p.b.beta;
    a_on_b.actions = p.actions_a_on_b;
    out.bimodule_a_on_b = check_bimodule(a_on_b, variant, opts);
    BimodulePresentation b_on_a;
    b_on_a.name = p.name + "_BonA";
    b_on_a.base = p.b;
    b_on_a.dim_v = p.a.dim;
    b_on_a.beta1_v = p.a.alpha;
    b_on_a.beta2_v = p.a.beta;
    b_on_a.actions = p.actions_b_on_a;
    out.bimodule_b_on_a = check_bimodule(b_on_a, variant, opts);
    const IdentitySet& cross =
        builtin_identity_set("matched-pair-of-" + variety_name(p.a.variety), variant);
    out.cross = check_identities(cross, bind_matched(cross, p), opts);
    return out;
}

AlgebraPresentation matched_sum_table(const MatchedPairPresentation& p) {
    p.validate_shapes();
    const int da = p.a.dim, db = p.b.dim, n = da + db;
    AlgebraPresentation s;
    s.name = p.name + "_sum";
    s.dim = n;
    s.variety = p.a.variety;
    auto pnames = product_names(s.variety);
    for (size_t pi = 0; pi < pnames.size(); ++pi) {
        Tensor3 t(n, n, n);
        for (int k = 0; k < da; ++k)
            for (int i = 0; i < da; ++i)
                for (int j = 0; j < da; ++j) t.at(k, i, j) = p.a.products[pi].at(k, i, j);
        for (int k = 0; k < db; ++k)
            for (int i = 0; i < db; ++i)
                for (int j = 0; j < db; ++j)
                    t.at(da + k, da + i, da + j) = p.b.products[pi].at(k, i, j);
        const auto& lA = p.actions_a_on_b[2 * pi];
        const auto& rA = p.actions_a_on_b[2 * pi + 1];
        const auto& lB = p.actions_b_on_a[2 * pi];
        const auto& rB = p.actions_b_on_a[2 * pi + 1];
        // x . b = lA(x) b (B part) ; a . y = rA(y) a (B part)
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j)
                for (int k = 0; k < db; ++k) {
                    t.at(da + k, i, da + j) = lA[i].at(k, j);
                    t.at(da + k, da + j, i) = rA[i].at(k, j);
                }
        // a . y = lB(a) y (A part) ; x . b = rB(b) x (A part)
        for (int i = 0; i < db; ++i)
            for (int j = 0; j < da; ++j)
                for (int k = 0; k < da; ++k) {
                    t.at(k, da + i, j) = lB[i].at(k, j);
                    t.at(k, j, da + i) = rB[i].at(k, j);
                }
        s.products.push_back(std::move(t));
    }
    auto block = [&](const Matrix& ma, const Matrix& mb) {
        Matrix m(n, n);
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < da; ++j) m.at(i, j) = ma.at(i, j);
        for (int i = 0; i < db; ++i)
            for (int j = 0; j < db; ++j) m.at(da + i, da + j) = mb.at(i, j);
        return m;
    };
    s.alpha = block(p.a.alpha, p.b.alpha);
    s.beta = block(p.a.beta, p.b.beta);
    return s;
}

MatchedSumResult matched_sum(const MatchedPairPresentation& p, Transcription variant,
                             const CheckOptions& opts) {
    auto report = check_matched_pair(p, variant, opts);
    if (!report.pass()) {
        std::string where;
        if (!all_pass(report.constituent_a)) where = "constituent A: " + first_failure(report.constituent_a);
        else if (!all_pass(report.constituent_b)) where = "constituent B: " + first_failure(report.constituent_b);
        else if (!all_pass(report.bimodule_a_on_b)) where = "A-on-B bimodule: " + first_failure(report.bimodule_a_on_b);
        else if (!all_pass(report.bimodule_b_on_a)) where = "B-on-A bimodule: " + first_failure(report.bimodule_b_on_a);
        else where = "cross equations: " + first_failure(report.cross);
        throw Error("matched sum: precondition fails at " + where);
    }
    MatchedSumResult out;
    out.dim_a = p.a.dim;
    out.dim_b = p.b.dim;
    out.algebra = matched_sum_table(p);
    return out;
}

MatchedPairPresentation matched_to_associative(const MatchedPairPresentation& p,
                                               Transcription variant, const CheckOptions& opts) {
    if (p.a.variety != Variety::BihomTridendriform)
        throw Error("matched to associative: input must be a tridendriform pair");
    auto report = check_matched_pair(p, variant, opts);
    if (!report.pass())
        throw Error("matched to associative: the tridendriform pair does not pass its checks");
    MatchedPairPresentation out;
    out.name = p.name + "_assoc";
    out.a = sum_to_associative(p.a);
    out.b = sum_to_associative(p.b);
    auto sum_families = [](const std::vector<std::vector<Matrix>>& fams, int base_dim,
                           int mod_dim) {
        std::vector<std::vector<Matrix>> out_fams;
        for (int side = 0; side < 2; ++side) {  // 0: left actions, 1: right actions
            std::vector<Matrix> total(base_dim, Matrix(mod_dim, mod_dim));
            for (size_t f = side; f < fams.size(); f += 2)
                for (int i = 0; i < base_dim; ++i) total[i] = total[i] + fams[f][i];
            out_fams.push_back(std::move(total));
        }
        return out_fams;
    };
    out.actions_a_on_b = sum_families(p.actions_a_on_b, p.a.dim, p.b.dim);
    out.actions_b_on_a = sum_families(p.actions_b_on_a, p.b.dim, p.a.dim);
    return out;
}

MatchedPairPresentation pair_from_bimodule(const BimodulePresentation& m) {
    m.validate_shapes();
    MatchedPairPresentation p;
    p.name = m.name + "_pair";
    p.a = m.base;
    p.b.name = m.name + "_zeroB";
    p.b.dim = m.dim_v;
    p.b.variety = m.base.variety;
    for (int i = 0; i < product_count(p.b.variety); ++i)
        p.b.products.push_back(Tensor3(m.dim_v, m.dim_v, m.dim_v));
    p.b.alpha = m.beta1_v;
    p.b.beta = m.beta2_v;
    p.actions_a_on_b = m.actions;
    auto anames = action_names(p.b.variety);
    for (size_t s = 0; s < anames.size(); ++s)
        p.actions_b_on_a.push_back(std::vector<Matrix>(m.dim_v, Matrix(m.base.dim, m.base.dim)));
    return p;
}

BimodulePresentation zero_bimodule(const AlgebraPresentation& a, int dim_v) {
    BimodulePresentation m;
    m.name = a.name + "_zeromod";
    m.base = a;
    m.dim_v = dim_v;
    m.beta1_v = Matrix::identity(dim_v);
    m.beta2_v = Matrix::identity(dim_v);
    auto anames = action_names(a.variety);
    for (size_t s = 0; s < anames.size(); ++s)
        m.actions.push_back(std::vector<Matrix>(a.dim, Matrix(dim_v, dim_v)));
    return m;
}

BimodulePresentation sum_bimodule(const BimodulePresentation& m) {
    if (m.base.variety != Variety::BihomTridendriform)
        throw Error("sum bimodule: base must be tridendriform");
    m.validate_shapes();
    BimodulePresentation out;
    out.name = m.name + "_assoc";
    out.base = sum_to_associative(m.base);
    out.dim_v = m.dim_v;
    out.beta1_v = m.beta1_v;
    out.beta2_v = m.beta2_v;
    for (int side = 0; side < 2; ++side) {
        std::vector<Matrix> total(m.base.dim, Matrix(m.dim_v, m.dim_v));
        for (size_t f = side; f < m.actions.size(); f += 2)
            for (int i = 0; i < m.base.dim; ++i) total[i] = total[i] + m.actions[f][i];
        out.actions.push_back(std::move(total));
    }
    return out;
}

}  // namespace bihom
