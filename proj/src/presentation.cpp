#include "bihom/presentation.hpp"

namespace bihom {

void AlgebraPresentation::validate_shapes() const {
    if (dim < 1) throw Error("algebra '" + name + "': dimension < 1");
    if (int(products.size()) != product_count(variety))
        throw Error("algebra '" + name + "': product count does not match variety");
    for (const auto& t : products)
        if (t.dim_out() != dim || t.dim_l() != dim || t.dim_r() != dim)
            throw Error("algebra '" + name + "': product tensor shape mismatch");
    for (const Matrix* m : {&alpha, &beta})
        if (m->rows() != dim || m->cols() != dim)
            throw Error("algebra '" + name + "': twisting map shape mismatch");
}

bool AlgebraPresentation::same_tables(const AlgebraPresentation& o) const {
    return dim == o.dim && variety == o.variety && products == o.products && alpha == o.alpha &&
           beta == o.beta;
}

std::string operator_kind_name(OperatorKind k) {
    switch (k) {
        case OperatorKind::RotaBaxter: return "rota-baxter";
        case OperatorKind::Centroid: return "centroid";
        case OperatorKind::Averaging: return "averaging";
        case OperatorKind::Endomorphism: return "endomorphism";
    }
    throw Error("unknown operator kind");
}

std::optional<OperatorKind> parse_operator_kind(const std::string& name) {
    for (OperatorKind k : {OperatorKind::RotaBaxter, OperatorKind::Centroid,
                           OperatorKind::Averaging, OperatorKind::Endomorphism})
        if (operator_kind_name(k) == name) return k;
    return std::nullopt;
}

void OperatorPresentation::validate_shapes() const {
    base.validate_shapes();
    if (op.rows() != base.dim || op.cols() != base.dim)
        throw Error("operator '" + name + "': matrix shape mismatch");
}

void BimodulePresentation::validate_shapes() const {
    base.validate_shapes();
    if (dim_v < 1) throw Error("bimodule '" + name + "': module dimension < 1");
    for (const Matrix* m : {&beta1_v, &beta2_v})
        if (m->rows() != dim_v || m->cols() != dim_v)
            throw Error("bimodule '" + name + "': module map shape mismatch");
    auto names = action_names(base.variety);
    if (actions.size() != names.size())
        throw Error("bimodule '" + name + "': action family count does not match variety");
    for (const auto& family : actions) {
        if (int(family.size()) != base.dim)
            throw Error("bimodule '" + name + "': family length differs from base dimension");
        for (const auto& m : family)
            if (m.rows() != dim_v || m.cols() != dim_v)
                throw Error("bimodule '" + name + "': action matrix shape mismatch");
    }
}

void MatchedPairPresentation::validate_shapes() const {
    a.validate_shapes();
    b.validate_shapes();
    if (a.variety != b.variety)
        throw Error("matched pair '" + name + "': constituents of different varieties");
    auto names = action_names(a.variety);
    if (actions_a_on_b.size() != names.size() || actions_b_on_a.size() != names.size())
        throw Error("matched pair '" + name + "': action family count does not match variety");
    for (const auto& family : actions_a_on_b) {
        if (int(family.size()) != a.dim)
            throw Error("matched pair '" + name + "': A-side family length mismatch");
        for (const auto& m : family)
            if (m.rows() != b.dim || m.cols() != b.dim)
                throw Error("matched pair '" + name + "': A-side action shape mismatch");
    }
    for (const auto& family : actions_b_on_a) {
        if (int(family.size()) != b.dim)
            throw Error("matched pair '" + name + "': B-side family length mismatch");
        for (const auto& m : family)
            if (m.rows() != a.dim || m.cols() != a.dim)
                throw Error("matched pair '" + name + "': B-side action shape mismatch");
    }
}

namespace {

int require_sort(const Signature& sig, const std::string& name) {
    int i = sig.sort_index(name);
    if (i < 0) throw Error("binding: signature lacks sort '" + name + "'");
    return i;
}

struct NamedData {
    std::map<std::string, const Matrix*> maps;
    std::map<std::string, const Tensor3*> prods;
    std::map<std::string, const std::vector<Matrix>*> acts;
    std::map<std::string, Scalar> params;
};

ModelBinding assemble(const IdentitySet& set, const std::vector<int>& dims, const NamedData& data) {
    ModelBinding b;
    b.sig = &set.sig;
    b.sort_dims = dims;
    for (const auto& m : set.sig.maps) {
        auto it = data.maps.find(m.name);
        if (it == data.maps.end()) throw Error("binding: no data for map symbol '" + m.name + "'");
        b.map_bindings.push_back(*it->second);
    }
    for (const auto& p : set.sig.prods) {
        auto it = data.prods.find(p.name);
        if (it == data.prods.end())
            throw Error("binding: no data for product symbol '" + p.name + "'");
        b.prod_bindings.push_back(*it->second);
    }
    for (const auto& a : set.sig.acts) {
        auto it = data.acts.find(a.name);
        if (it == data.acts.end())
            throw Error("binding: no data for action symbol '" + a.name + "'");
        b.act_bindings.push_back(*it->second);
    }
    b.scalar_params = data.params;
    b.validate();
    return b;
}

}  // namespace

ModelBinding bind_algebra(const IdentitySet& set, const AlgebraPresentation& a) {
    a.validate_shapes();
    std::vector<int> dims(set.sig.sorts.size());
    dims[require_sort(set.sig, "A")] = a.dim;
    NamedData data;
    data.maps["alpha"] = &a.alpha;
    data.maps["beta"] = &a.beta;
    auto pnames = product_names(a.variety);
    for (size_t i = 0; i < pnames.size(); ++i) data.prods[pnames[i]] = &a.products[i];
    return assemble(set, dims, data);
}

ModelBinding bind_operator(const IdentitySet& set, const AlgebraPresentation& a, const Matrix& op,
                           int product_index, const std::optional<Scalar>& weight) {
    a.validate_shapes();
    std::vector<int> dims(set.sig.sorts.size());
    dims[require_sort(set.sig, "A")] = a.dim;
    NamedData data;
    data.maps["alpha"] = &a.alpha;
    data.maps["beta"] = &a.beta;
    data.maps["R"] = &op;
    data.maps["gamma"] = &op;
    data.prods["mul"] = &a.products.at(product_index);
    if (weight) data.params["lambda"] = *weight;
    return assemble(set, dims, data);
}

ModelBinding bind_morphism(const IdentitySet& set, const Matrix& f, const AlgebraPresentation& a,
                           const AlgebraPresentation& b, int product_index) {
    a.validate_shapes();
    b.validate_shapes();
    std::vector<int> dims(set.sig.sorts.size());
    dims[require_sort(set.sig, "A")] = a.dim;
    dims[require_sort(set.sig, "B")] = b.dim;
    NamedData data;
    data.maps["alphaA"] = &a.alpha;
    data.maps["betaA"] = &a.beta;
    data.maps["alphaB"] = &b.alpha;
    data.maps["betaB"] = &b.beta;
    data.maps["f"] = &f;
    data.prods["mulA"] = &a.products.at(product_index);
    data.prods["mulB"] = &b.products.at(product_index);
    return assemble(set, dims, data);
}

ModelBinding bind_bimodule(const IdentitySet& set, const BimodulePresentation& m) {
    m.validate_shapes();
    std::vector<int> dims(set.sig.sorts.size());
    dims[require_sort(set.sig, "A")] = m.base.dim;
    dims[require_sort(set.sig, "V")] = m.dim_v;
    NamedData data;
    data.maps["alpha1"] = &m.base.alpha;
    data.maps["alpha2"] = &m.base.beta;
    data.maps["beta1"] = &m.beta1_v;
    data.maps["beta2"] = &m.beta2_v;
    auto pnames = product_names(m.base.variety);
    for (size_t i = 0; i < pnames.size(); ++i) data.prods[pnames[i]] = &m.base.products[i];
    auto anames = action_names(m.base.variety);
    for (size_t i = 0; i < anames.size(); ++i) data.acts[anames[i]] = &m.actions[i];
    return assemble(set, dims, data);
}

ModelBinding bind_matched(const IdentitySet& set, const MatchedPairPresentation& p) {
    p.validate_shapes();
    std::vector<int> dims(set.sig.sorts.size());
    dims[require_sort(set.sig, "A")] = p.a.dim;
    dims[require_sort(set.sig, "B")] = p.b.dim;
    NamedData data;
    data.maps["alpha1"] = &p.a.alpha;
    data.maps["alpha2"] = &p.a.beta;
    data.maps["beta1"] = &p.b.alpha;
    data.maps["beta2"] = &p.b.beta;
    auto pnames = product_names(p.a.variety);
    for (size_t i = 0; i < pnames.size(); ++i) {
        data.prods[pnames[i] + "A"] = &p.a.products[i];
        data.prods[pnames[i] + "B"] = &p.b.products[i];
    }
    auto anames = action_names(p.a.variety);
    for (size_t i = 0; i < anames.size(); ++i) {
        // bimodule action symbols l/r pair with the matched symbols lA/rA
        data.acts[anames[i] + "A"] = &p.actions_a_on_b[i];
        data.acts[anames[i] + "B"] = &p.actions_b_on_a[i];
    }
    return assemble(set, dims, data);
}

std::optional<std::array<int, 3>> endomorphism_witness(const AlgebraPresentation& a,
                                                       const Matrix& m) {
    for (size_t p = 0; p < a.products.size(); ++p) {
        const Tensor3& t = a.products[p];
        Tensor3 lhs = t.postcompose(m);      // m(mu(x, y))
        Tensor3 rhs = t.precompose(m, m);    // mu(m x, m y)
        if (lhs == rhs) continue;
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                for (int k = 0; k < a.dim; ++k)
                    if (lhs.at(k, i, j) != rhs.at(k, i, j))
                        return std::array<int, 3>{int(p), i + 1, j + 1};
    }
    return std::nullopt;
}

std::optional<int> commute_witness(const Matrix& m1, const Matrix& m2) {
    Matrix a = m1.compose(m2), b = m2.compose(m1);
    if (a == b) return std::nullopt;
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i)
            if (a.at(i, j) != b.at(i, j)) return j + 1;
    return std::nullopt;
}

namespace fixtures {

static Tensor3 zero_product(int d) { return Tensor3(d, d, d); }

AlgebraPresentation Z(int d, Variety v) {
    AlgebraPresentation a;
    a.name = "Z" + std::to_string(d);
    a.dim = d;
    a.variety = v;
    for (int i = 0; i < product_count(v); ++i) a.products.push_back(zero_product(d));
    a.alpha = Matrix::identity(d);
    a.beta = Matrix::identity(d);
    return a;
}

AlgebraPresentation K1() {
    AlgebraPresentation a;
    a.name = "K1";
    a.dim = 1;
    a.variety = Variety::BihomAssociative;
    Tensor3 t(1, 1, 1);
    t.at(0, 0, 0) = Scalar(1);
    a.products = {t};
    a.alpha = Matrix::identity(1);
    a.beta = Matrix::identity(1);
    return a;
}

AlgebraPresentation N2() {
    AlgebraPresentation a;
    a.name = "N2";
    a.dim = 2;
    a.variety = Variety::BihomAssociative;
    Tensor3 t(2, 2, 2);
    t.at(0, 0, 0) = Scalar(1);  // e1 e1 = e1
    t.at(1, 0, 1) = Scalar(1);  // e1 e2 = e2
    t.at(1, 1, 0) = Scalar(1);  // e2 e1 = e2
    a.products = {t};
    a.alpha = Matrix::identity(2);
    a.beta = Matrix::identity(2);
    return a;
}

Matrix sigma(const Scalar& c) {
    Matrix m = Matrix::identity(2);
    m.at(1, 1) = c;
    return m;
}

AlgebraPresentation N2_sigma(const Scalar& c) {
    // the twist of the dual numbers along the scaling endomorphism: product
    // sigma(x) sigma(y), both maps sigma
    AlgebraPresentation a = N2();
    a.name = "N2s";
    Matrix s = sigma(c);
    a.products[0] = a.products[0].precompose(s, s);
    a.alpha = s;
    a.beta = s;
    return a;
}

AlgebraPresentation E(const Scalar& a_param) {
    AlgebraPresentation a;
    a.name = "E";
    a.dim = 2;
    a.variety = Variety::BihomAssociative;
    Scalar one(1), two(2);
    a.alpha = Matrix(2, 2);
    a.alpha.at(0, 0) = two;
    a.alpha.at(0, 1) = -(two * a_param);
    a.alpha.at(1, 1) = one - a_param;
    a.beta = Matrix(2, 2);
    a.beta.at(0, 0) = two;
    a.beta.at(0, 1) = -a_param;
    a.beta.at(1, 1) = one - a_param;
    Tensor3 t(2, 2, 2);
    t.at(0, 0, 0) = two;                       // e1 e1 = 2 e1
    t.at(0, 0, 1) = -a_param;                  // e1 e2 = -a e1 + (1-a) e2
    t.at(1, 0, 1) = one - a_param;
    t.at(0, 1, 0) = -(two * a_param);          // e2 e1 = -2a e1 + (a-1) e2
    t.at(1, 1, 0) = a_param - one;
    t.at(0, 1, 1) = two * a_param * a_param;   // e2 e2 = 2a^2 e1 + a e2
    t.at(1, 1, 1) = a_param;
    a.products = {t};
    return a;
}

AlgebraPresentation P2() {
    AlgebraPresentation a;
    a.name = "P2";
    a.dim = 2;
    a.variety = Variety::BihomAssociative;
    Tensor3 t(2, 2, 2);
    t.at(0, 0, 0) = Scalar(1);  // e1 e1 = e1
    t.at(1, 0, 1) = Scalar(1);  // e1 e2 = e2
    a.products = {t};
    a.alpha = Matrix::identity(2);
    a.beta = Matrix::identity(2);
    return a;
}

static AlgebraPresentation twist_23(AlgebraPresentation a, const char* name) {
    Matrix s2 = sigma(Scalar(2)), s3 = sigma(Scalar(3));
    for (auto& t : a.products) t = t.precompose(s2, s3);
    a.alpha = s2;
    a.beta = s3;
    a.name = name;
    return a;
}

AlgebraPresentation P2ab() { return twist_23(P2(), "P2ab"); }

AlgebraPresentation D2() {
    AlgebraPresentation a;
    a.name = "D2";
    a.dim = 2;
    a.variety = Variety::AssocDialgebra;
    Matrix p(2, 2);
    p.at(0, 0) = Scalar(1);
    AlgebraPresentation n2 = N2();
    Tensor3 dl = n2.products[0].precompose(Matrix::identity(2), p);
    Tensor3 dr = n2.products[0].precompose(p, Matrix::identity(2));
    a.products = {dl, dr};
    a.alpha = Matrix::identity(2);
    a.beta = Matrix::identity(2);
    return a;
}

AlgebraPresentation D2ab() { return twist_23(D2(), "D2ab"); }

AlgebraPresentation LS2() {
    AlgebraPresentation a;
    a.name = "LS2";
    a.dim = 2;
    a.variety = Variety::BihomLeftSymmetric;
    Tensor3 t(2, 2, 2);
    t.at(1, 0, 1) = Scalar(1);  // e1 * e2 = e2
    a.products = {t};
    a.alpha = Matrix::identity(2);
    a.beta = Matrix::identity(2);
    return a;
}

AlgebraPresentation LS2ab() { return twist_23(LS2(), "LS2ab"); }

OperatorPresentation RB1(const Scalar& lambda) {
    OperatorPresentation o;
    o.name = "RB1";
    o.base = K1();
    o.op = Matrix::scalar(1, -lambda);
    o.kind = OperatorKind::RotaBaxter;
    o.weight = lambda;
    return o;
}

OperatorPresentation RB_P2(const AlgebraPresentation& base, const Scalar& lambda) {
    OperatorPresentation o;
    o.name = "RB_P2";
    o.base = base;
    o.op = Matrix(2, 2);
    o.op.at(1, 1) = -lambda;
    o.kind = OperatorKind::RotaBaxter;
    o.weight = lambda;
    return o;
}

BimodulePresentation regular_bimodule(const AlgebraPresentation& a) {
    BimodulePresentation m;
    m.name = a.name + "_regular";
    m.base = a;
    m.dim_v = a.dim;
    m.beta1_v = a.alpha;
    m.beta2_v = a.beta;
    // per product P: left action L(e_i) = P(e_i, .), right action R(e_i) = P(., e_i)
    for (const auto& t : a.products) {
        std::vector<Matrix> left(a.dim, Matrix(a.dim, a.dim)), right(a.dim, Matrix(a.dim, a.dim));
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                for (int k = 0; k < a.dim; ++k) {
                    left[i].at(k, j) = t.at(k, i, j);
                    right[i].at(k, j) = t.at(k, j, i);
                }
        m.actions.push_back(std::move(left));
        m.actions.push_back(std::move(right));
    }
    return m;
}

}  // namespace fixtures
}  // namespace bihom
