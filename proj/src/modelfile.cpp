#include "bihom/modelfile.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "bihom/idnparse.hpp"

namespace bihom {

namespace {

constexpr int kDimCap = 64;

struct MLexer {
    explicit MLexer(const std::string& src) : s(src) {}
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    void bump() {
        if (pos < s.size() && s[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip() {
        for (;;) {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) bump();
            if (pos < s.size() && s[pos] == '#') {
                while (pos < s.size() && s[pos] != '\n') bump();
                continue;
            }
            return;
        }
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col, msg); }

    bool eof() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            bump();
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }
    bool accept_arrow() {
        skip();
        if (pos + 1 < s.size() && s[pos] == '-' && s[pos + 1] == '>') {
            bump();
            bump();
            return true;
        }
        return false;
    }
    std::string ident() {
        skip();
        if (pos >= s.size() ||
            !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected identifier");
        std::string out;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            out += s[pos];
            bump();
        }
        return out;
    }
    /// Tags may contain '-' (variety and kind names).
    std::string tag() {
        skip();
        std::string out;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '-' ||
                s[pos] == '_')) {
            out += s[pos];
            bump();
        }
        if (out.empty()) fail("expected tag");
        return out;
    }
    Scalar rational() {
        skip();
        std::string out;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            out += s[pos];
            bump();
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected rational literal");
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            out += s[pos];
            bump();
        }
        if (pos < s.size() && s[pos] == '/') {
            out += '/';
            bump();
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                out += s[pos];
                bump();
            }
        }
        try {
            return Scalar::parse(out);
        } catch (const Error& e) {
            fail(e.what());
        }
    }
    long natural(const char* what) {
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail(std::string("expected ") + what);
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) fail("number out of range");
            bump();
        }
        return v;
    }
};

struct MParser {
    explicit MParser(const std::string& src) : lx(src) {}
    MLexer lx;
    ParsedModel model;

    Matrix matrix(int rows, int cols, const std::string& what) {
        lx.expect('[', "'['");
        std::vector<std::vector<Scalar>> data;
        for (;;) {
            lx.expect('[', "'[' (matrix row)");
            std::vector<Scalar> row;
            if (!lx.accept(']')) {
                for (;;) {
                    row.push_back(lx.rational());
                    if (!lx.accept(',')) break;
                }
                lx.expect(']', "']'");
            }
            data.push_back(std::move(row));
            if (!lx.accept(',')) break;
        }
        lx.expect(']', "']' (matrix end)");
        if (int(data.size()) != rows) lx.fail(what + ": expected " + std::to_string(rows) + " rows");
        Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            if (int(data[i].size()) != cols)
                lx.fail(what + ": row " + std::to_string(i + 1) + " has " +
                        std::to_string(data[i].size()) + " columns, expected " +
                        std::to_string(cols));
            for (int j = 0; j < cols; ++j) m.at(i, j) = data[i][j];
        }
        return m;
    }

    void lincomb_into(Tensor3& t, int i, int j, int dim) {
        // "0" or signed sum of [RAT] e_k
        lx.skip();
        if (lx.peek() == '0') {
            size_t save_pos = lx.pos;
            int save_line = lx.line, save_col = lx.col;
            Scalar c = lx.rational();
            lx.skip();
            if (c.is_zero() && lx.peek() == ';') return;
            lx.pos = save_pos;
            lx.line = save_line;
            lx.col = save_col;
        }
        for (;;) {
            Scalar coeff(1);
            lx.skip();
            if (lx.peek() == '-' || lx.peek() == '+' ||
                std::isdigit(static_cast<unsigned char>(lx.peek()))) {
                coeff = lx.rational();
            }
            std::string e = lx.ident();
            if (e.size() < 2 || e[0] != 'e') lx.fail("expected basis element e<k>");
            int k = std::atoi(e.c_str() + 1);
            if (k < 1 || k > dim) lx.fail("basis index out of range in product entry");
            t.at(k - 1, i - 1, j - 1) += coeff;
            if (!lx.accept('+')) break;
        }
    }

    void algebra() {
        AlgebraPresentation a;
        a.name = lx.ident();
        lx.expect('{', "'{'");
        int dim = -1;
        std::optional<Variety> variety;
        std::map<std::string, Matrix> maps;
        std::map<std::string, Tensor3> prods;
        while (!lx.accept('}')) {
            std::string kw = lx.ident();
            if (kw == "dim") {
                dim = int(lx.natural("dimension"));
                if (dim < 1 || dim > kDimCap) lx.fail("dimension must be in [1, 64]");
                lx.expect(';', "';'");
            } else if (kw == "variety") {
                variety = parse_variety(lx.tag());
                if (!variety) lx.fail("unknown variety tag");
                lx.expect(';', "';'");
            } else if (kw == "map") {
                if (dim < 0) lx.fail("dim must precede maps");
                std::string name = lx.ident();
                lx.expect('=', "'='");
                maps[name] = matrix(dim, dim, "map " + name);
                lx.expect(';', "';'");
            } else if (kw == "prod") {
                if (dim < 0 || !variety) lx.fail("dim and variety must precede products");
                std::string name = lx.ident();
                Tensor3 t(dim, dim, dim);
                lx.expect('{', "'{'");
                while (!lx.accept('}')) {
                    lx.expect('(', "'('");
                    int i = int(lx.natural("row index"));
                    lx.expect(',', "','");
                    int j = int(lx.natural("column index"));
                    lx.expect(')', "')'");
                    if (i < 1 || i > dim || j < 1 || j > dim)
                        lx.fail("product entry indices out of range");
                    if (!lx.accept_arrow()) lx.fail("expected '->'");
                    lincomb_into(t, i, j, dim);
                    lx.expect(';', "';'");
                }
                prods[name] = std::move(t);
            } else {
                lx.fail("unknown item '" + kw + "' in algebra block");
            }
        }
        if (dim < 0) lx.fail("algebra block lacks dim");
        if (!variety) lx.fail("algebra block lacks variety");
        a.dim = dim;
        a.variety = *variety;
        auto need_map = [&](const char* n) {
            auto it = maps.find(n);
            if (it == maps.end()) lx.fail(std::string("algebra block lacks map ") + n);
            return it->second;
        };
        a.alpha = need_map("alpha");
        a.beta = need_map("beta");
        for (const auto& pn : product_names(*variety)) {
            auto it = prods.find(pn);
            if (it == prods.end())
                a.products.push_back(Tensor3(dim, dim, dim));  // omitted product = zero
            else
                a.products.push_back(it->second);
        }
        for (const auto& [n, t] : prods)
            if (std::find(product_names(*variety).begin(), product_names(*variety).end(), n) ==
                product_names(*variety).end())
                lx.fail("product '" + n + "' is not a product symbol of this variety");
        model.algebras.push_back(std::move(a));
    }

    void op_block() {
        OperatorBlock b;
        b.name = lx.ident();
        lx.expect('{', "'{'");
        int dim = -1;
        bool have_op = false;
        while (!lx.accept('}')) {
            std::string kw = lx.ident();
            if (kw == "dim") {
                dim = int(lx.natural("dimension"));
                if (dim < 1 || dim > kDimCap) lx.fail("dimension must be in [1, 64]");
                lx.expect(';', "';'");
            } else if (kw == "kind") {
                auto k = parse_operator_kind(lx.tag());
                if (!k) lx.fail("unknown operator kind");
                b.kind = *k;
                lx.expect(';', "';'");
            } else if (kw == "weight") {
                b.weight = lx.rational();
                b.has_weight = true;
                lx.expect(';', "';'");
            } else if (kw == "on") {
                b.on = lx.ident();
                lx.expect(';', "';'");
            } else if (kw == "map") {
                if (dim < 0) lx.fail("dim must precede the matrix");
                std::string name = lx.ident();
                if (name != "op") lx.fail("operator blocks name their matrix 'op'");
                lx.expect('=', "'='");
                b.op = matrix(dim, dim, "operator matrix");
                have_op = true;
                lx.expect(';', "';'");
            } else {
                lx.fail("unknown item '" + kw + "' in operator block");
            }
        }
        if (dim < 0 || !have_op) lx.fail("operator block needs dim and map op");
        if (b.kind == OperatorKind::RotaBaxter && !b.has_weight)
            lx.fail("rota-baxter operator block needs a weight");
        b.dim = dim;
        model.operators.push_back(std::move(b));
    }

    std::vector<Matrix> action_family(int base_dim, int mod_dim) {
        std::vector<Matrix> family(base_dim, Matrix(mod_dim, mod_dim));
        lx.expect('{', "'{'");
        while (!lx.accept('}')) {
            lx.expect('[', "'[' (family index)");
            int i = int(lx.natural("family index"));
            lx.expect(']', "']'");
            if (i < 1 || i > base_dim) lx.fail("family index out of range");
            lx.expect('=', "'='");
            family[i - 1] = matrix(mod_dim, mod_dim, "action matrix");
            lx.expect(';', "';'");
        }
        return family;
    }

    void bimodule() {
        BimodulePresentation m;
        m.name = lx.ident();
        lx.expect('{', "'{'");
        std::string base_name;
        int dim = -1;
        std::map<std::string, Matrix> maps;
        std::map<std::string, std::vector<Matrix>> families;
        const AlgebraPresentation* base = nullptr;
        while (!lx.accept('}')) {
            std::string kw = lx.ident();
            if (kw == "base") {
                base_name = lx.ident();
                base = model.find_algebra(base_name);
                if (!base) lx.fail("bimodule references unknown algebra '" + base_name + "'");
                lx.expect(';', "';'");
            } else if (kw == "dim") {
                dim = int(lx.natural("dimension"));
                if (dim < 1 || dim > kDimCap) lx.fail("dimension must be in [1, 64]");
                lx.expect(';', "';'");
            } else if (kw == "map") {
                if (dim < 0) lx.fail("dim must precede maps");
                std::string name = lx.ident();
                lx.expect('=', "'='");
                maps[name] = matrix(dim, dim, "map " + name);
                lx.expect(';', "';'");
            } else if (kw == "action") {
                if (!base || dim < 0) lx.fail("base and dim must precede actions");
                std::string name = lx.ident();
                families[name] = action_family(base->dim, dim);
            } else {
                lx.fail("unknown item '" + kw + "' in bimodule block");
            }
        }
        if (!base || dim < 0) lx.fail("bimodule block needs base and dim");
        m.base = *base;
        m.dim_v = dim;
        auto need_map = [&](const char* n) {
            auto it = maps.find(n);
            if (it == maps.end()) lx.fail(std::string("bimodule block lacks map ") + n);
            return it->second;
        };
        m.beta1_v = need_map("beta1");
        m.beta2_v = need_map("beta2");
        for (const auto& an : action_names(base->variety)) {
            auto it = families.find(an);
            if (it == families.end())
                m.actions.push_back(std::vector<Matrix>(base->dim, Matrix(dim, dim)));
            else
                m.actions.push_back(it->second);
        }
        model.bimodules.push_back(std::move(m));
    }

    void matched() {
        MatchedPairPresentation p;
        p.name = lx.ident();
        lx.expect('{', "'{'");
        const AlgebraPresentation* a = nullptr;
        const AlgebraPresentation* b = nullptr;
        std::map<std::string, std::vector<Matrix>> families;
        while (!lx.accept('}')) {
            std::string kw = lx.ident();
            if (kw == "left") {
                a = model.find_algebra(lx.ident());
                if (!a) lx.fail("matched block references unknown left algebra");
                lx.expect(';', "';'");
            } else if (kw == "right") {
                b = model.find_algebra(lx.ident());
                if (!b) lx.fail("matched block references unknown right algebra");
                lx.expect(';', "';'");
            } else if (kw == "action") {
                if (!a || !b) lx.fail("left and right must precede actions");
                std::string name = lx.ident();
                bool a_side = !name.empty() && name.back() == 'A';
                int base_dim = a_side ? a->dim : b->dim;
                int mod_dim = a_side ? b->dim : a->dim;
                families[name] = action_family(base_dim, mod_dim);
            } else {
                lx.fail("unknown item '" + kw + "' in matched block");
            }
        }
        if (!a || !b) lx.fail("matched block needs left and right");
        if (a->variety != b->variety) lx.fail("matched constituents must share one variety");
        p.a = *a;
        p.b = *b;
        for (const auto& an : action_names(a->variety)) {
            auto ita = families.find(an + "A");
            p.actions_a_on_b.push_back(ita == families.end()
                                           ? std::vector<Matrix>(a->dim, Matrix(b->dim, b->dim))
                                           : ita->second);
            auto itb = families.find(an + "B");
            p.actions_b_on_a.push_back(itb == families.end()
                                           ? std::vector<Matrix>(b->dim, Matrix(a->dim, a->dim))
                                           : itb->second);
        }
        model.matched.push_back(std::move(p));
    }

    ParsedModel run() {
        while (!lx.eof()) {
            std::string kw = lx.ident();
            if (kw == "algebra") algebra();
            else if (kw == "operator") op_block();
            else if (kw == "bimodule") bimodule();
            else if (kw == "matched") matched();
            else lx.fail("expected a block ('algebra', 'operator', 'bimodule', 'matched')");
        }
        if (model.algebras.empty() && model.operators.empty() && model.bimodules.empty() &&
            model.matched.empty())
            lx.fail("model file declares nothing");
        return std::move(model);
    }
};

std::string scalar_text(const Scalar& s) { return s.str(); }

std::string matrix_text(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << scalar_text(m.at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

void print_family(std::ostringstream& os, const std::string& name,
                  const std::vector<Matrix>& family) {
    os << "  action " << name << " {\n";
    for (size_t i = 0; i < family.size(); ++i) {
        if (family[i].is_zero()) continue;
        os << "    [" << (i + 1) << "] = " << matrix_text(family[i]) << ";\n";
    }
    os << "  }\n";
}

}  // namespace

const AlgebraPresentation* ParsedModel::find_algebra(const std::string& name) const {
    for (const auto& a : algebras)
        if (a.name == name) return &a;
    return nullptr;
}

const OperatorBlock* ParsedModel::find_operator(const std::string& name) const {
    for (const auto& o : operators)
        if (o.name == name) return &o;
    return nullptr;
}

OperatorPresentation ParsedModel::make_operator(const OperatorBlock& block,
                                                const AlgebraPresentation* fallback) const {
    const AlgebraPresentation* base = nullptr;
    if (!block.on.empty()) {
        base = find_algebra(block.on);
        if (!base) throw Error("operator '" + block.name + "' references unknown algebra '" +
                               block.on + "'");
    } else {
        base = fallback;
    }
    if (!base) throw Error("operator '" + block.name + "' has no base algebra");
    if (base->dim != block.dim)
        throw Error("operator '" + block.name + "' dimension differs from its base algebra");
    OperatorPresentation op;
    op.name = block.name;
    op.base = *base;
    op.op = block.op;
    op.kind = block.kind;
    op.weight = block.weight;
    return op;
}

ParsedModel parse_model_file(const std::string& text) {
    MParser p(text);
    return p.run();
}

std::string print_algebra(const AlgebraPresentation& a) {
    std::ostringstream os;
    os << "algebra " << a.name << " {\n";
    os << "  dim " << a.dim << ";\n";
    os << "  variety " << variety_name(a.variety) << ";\n";
    os << "  map alpha = " << matrix_text(a.alpha) << ";\n";
    os << "  map beta = " << matrix_text(a.beta) << ";\n";
    auto pnames = product_names(a.variety);
    for (size_t p = 0; p < pnames.size(); ++p) {
        os << "  prod " << pnames[p] << " {\n";
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) {
                bool any = false;
                for (int k = 0; k < a.dim; ++k) any = any || !a.products[p].at(k, i, j).is_zero();
                if (!any) continue;
                os << "    (" << (i + 1) << "," << (j + 1) << ") ->";
                bool first = true;
                for (int k = 0; k < a.dim; ++k) {
                    const Scalar& c = a.products[p].at(k, i, j);
                    if (c.is_zero()) continue;
                    os << (first ? " " : " + ");
                    if (!c.is_one()) os << scalar_text(c) << " ";
                    os << "e" << (k + 1);
                    first = false;
                }
                os << ";\n";
            }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

std::string print_operator(const OperatorBlock& block) {
    std::ostringstream os;
    os << "operator " << block.name << " {\n";
    os << "  dim " << block.dim << ";\n";
    os << "  kind " << operator_kind_name(block.kind) << ";\n";
    if (block.has_weight) os << "  weight " << block.weight.str() << ";\n";
    if (!block.on.empty()) os << "  on " << block.on << ";\n";
    os << "  map op = " << matrix_text(block.op) << ";\n";
    os << "}\n";
    return os.str();
}

OperatorBlock to_block(const OperatorPresentation& op, bool with_on) {
    OperatorBlock b;
    b.name = op.name;
    b.dim = op.base.dim;
    b.kind = op.kind;
    b.weight = op.weight;
    b.has_weight = op.kind == OperatorKind::RotaBaxter;
    if (with_on) b.on = op.base.name;
    b.op = op.op;
    return b;
}

std::string print_bimodule(const BimodulePresentation& m) {
    std::ostringstream os;
    os << print_algebra(m.base);
    os << "bimodule " << m.name << " {\n";
    os << "  base " << m.base.name << ";\n";
    os << "  dim " << m.dim_v << ";\n";
    os << "  map beta1 = " << matrix_text(m.beta1_v) << ";\n";
    os << "  map beta2 = " << matrix_text(m.beta2_v) << ";\n";
    auto anames = action_names(m.base.variety);
    for (size_t s = 0; s < anames.size(); ++s) print_family(os, anames[s], m.actions[s]);
    os << "}\n";
    return os.str();
}

std::string print_matched(const MatchedPairPresentation& p) {
    std::ostringstream os;
    AlgebraPresentation a = p.a, b = p.b;
    if (a.name == b.name) b.name += "_right";
    os << print_algebra(a) << print_algebra(b);
    os << "matched " << p.name << " {\n";
    os << "  left " << a.name << ";\n";
    os << "  right " << b.name << ";\n";
    auto anames = action_names(p.a.variety);
    for (size_t s = 0; s < anames.size(); ++s) {
        print_family(os, anames[s] + "A", p.actions_a_on_b[s]);
        print_family(os, anames[s] + "B", p.actions_b_on_a[s]);
    }
    os << "}\n";
    return os.str();
}

}  // namespace bihom
