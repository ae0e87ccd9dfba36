#include "bihom/idnparse.hpp"

#include <cctype>
#include <sstream>

namespace bihom {

namespace {

enum class Tok { Ident, Number, LParen, RParen, Comma, Colon, Arrow, Plus, Minus, Star, Eq, Caret, Dot, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

struct Lexer {
    explicit Lexer(const std::string& src) : s(src) { advance(); }

    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;
    Token cur{Tok::End, "", 1, 1};

    void advance() {
        skip_space();
        cur.line = line;
        cur.col = col;
        if (pos >= s.size()) {
            cur = {Tok::End, "", line, col};
            return;
        }
        char c = s[pos];
        auto one = [&](Tok k) {
            cur = {k, std::string(1, c), line, col};
            bump();
        };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int l = line, co = col;
            std::string id;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                id += s[pos];
                bump();
            }
            cur = {Tok::Ident, id, l, co};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int l = line, co = col;
            std::string num;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                num += s[pos];
                bump();
            }
            if (pos < s.size() && s[pos] == '/') {
                num += '/';
                bump();
                if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                    throw ParseError(line, col, "expected digits after '/' in rational literal");
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    num += s[pos];
                    bump();
                }
            }
            cur = {Tok::Number, num, l, co};
            return;
        }
        switch (c) {
            case '(': one(Tok::LParen); return;
            case ')': one(Tok::RParen); return;
            case ',': one(Tok::Comma); return;
            case ':': one(Tok::Colon); return;
            case '+': one(Tok::Plus); return;
            case '*': one(Tok::Star); return;
            case '=': one(Tok::Eq); return;
            case '^': one(Tok::Caret); return;
            case '.': one(Tok::Dot); return;
            case '-':
                if (pos + 1 < s.size() && s[pos + 1] == '>') {
                    cur = {Tok::Arrow, "->", line, col};
                    bump();
                    bump();
                    return;
                }
                one(Tok::Minus);
                return;
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

    void skip_space() {
        for (;;) {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) bump();
            if (pos < s.size() && s[pos] == '#') {
                while (pos < s.size() && s[pos] != '\n') bump();
                continue;
            }
            return;
        }
    }

    void bump() {
        if (s[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
};

struct Parser {
    explicit Parser(const std::string& src) : lex(src) {}
    Lexer lex;
    IdentitySet set;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(lex.cur.line, lex.cur.col, msg); }

    bool at_ident(const char* kw) { return lex.cur.kind == Tok::Ident && lex.cur.text == kw; }

    std::string expect_ident(const char* what) {
        if (lex.cur.kind != Tok::Ident) fail(std::string("expected ") + what);
        std::string t = lex.cur.text;
        lex.advance();
        return t;
    }

    void expect(Tok k, const char* what) {
        if (lex.cur.kind != k) fail(std::string("expected ") + what);
        lex.advance();
    }

    IdentitySet run() {
        while (lex.cur.kind != Tok::End) {
            int dl = lex.cur.line, dc = lex.cur.col;
            try {
                decl_or_identity();
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(dl, dc, e.what());
            }
        }
        if (set.name.empty()) throw ParseError(1, 1, "file declares no 'set' name");
        wellform_set(set);
        return set;
    }

    void decl_or_identity() {
        {
            if (at_ident("set")) {
                lex.advance();
                // set names are labels, not expression symbols; hyphens allowed
                set.name = expect_ident("set name");
                while (lex.cur.kind == Tok::Minus) {
                    lex.advance();
                    set.name += "-" + expect_ident("set name continuation");
                }
            } else if (at_ident("sort")) {
                lex.advance();
                std::string name = expect_ident("sort name");
                std::string role = expect_ident("sort role");
                SortRole r;
                if (role == "algebra") r = SortRole::Algebra;
                else if (role == "module") r = SortRole::Module;
                else if (role == "dual_module") r = SortRole::DualModule;
                else fail("unknown sort role '" + role + "'");
                set.sig.add_sort(name, r);
            } else if (at_ident("map")) {
                lex.advance();
                std::string name = expect_ident("map name");
                expect(Tok::Colon, "':'");
                int from = sort_ref();
                expect(Tok::Arrow, "'->'");
                int to = sort_ref();
                set.sig.add_map(name, from, to);
            } else if (at_ident("prod")) {
                lex.advance();
                std::string name = expect_ident("product name");
                expect(Tok::Colon, "':'");
                int l = sort_ref();
                expect(Tok::Comma, "','");
                int r = sort_ref();
                expect(Tok::Arrow, "'->'");
                int out = sort_ref();
                set.sig.add_prod(name, l, r, out);
            } else if (at_ident("act")) {
                lex.advance();
                std::string name = expect_ident("action name");
                expect(Tok::Colon, "':'");
                int alg = sort_ref();
                if (!at_ident("on")) fail("expected 'on'");
                lex.advance();
                int mod = sort_ref();
                std::string side = expect_ident("'left' or 'right'");
                if (side != "left" && side != "right") fail("expected 'left' or 'right'");
                set.sig.add_act(name, alg, mod, side == "left" ? Side::Left : Side::Right);
            } else if (at_ident("param")) {
                lex.advance();
                set.sig.add_param(expect_ident("parameter name"));
            } else if (at_ident("identity")) {
                identity();
            } else {
                fail("expected a declaration or 'identity'");
            }
        }
    }

    int sort_ref() {
        int l = lex.cur.line, c = lex.cur.col;
        std::string n = expect_ident("sort name");
        int idx = set.sig.sort_index(n);
        if (idx < 0) throw ParseError(l, c, "unknown sort '" + n + "'");
        return idx;
    }

    void identity() {
        lex.advance();  // 'identity'
        Identity id;
        id.name = expect_ident("identity name");
        if (!at_ident("over")) fail("expected 'over'");
        lex.advance();
        for (;;) {
            int sort = sort_ref();
            expect(Tok::LParen, "'('");
            int index = 1;
            for (const auto& v : id.vars)
                if (v.sort == sort) ++index;
            for (;;) {
                std::string vn = expect_ident("variable name");
                for (const auto& v : id.vars)
                    if (v.name == vn) fail("duplicate variable '" + vn + "'");
                id.vars.push_back({sort, index++, vn});
                if (lex.cur.kind != Tok::Comma) break;
                lex.advance();
            }
            expect(Tok::RParen, "')'");
            if (lex.cur.kind != Tok::Comma) break;
            lex.advance();
        }
        expect(Tok::Colon, "':'");
        pending = &id;
        // signed sum of terms, terminated by '= 0'
        bool neg = false;
        if (lex.cur.kind == Tok::Minus) {
            neg = true;
            lex.advance();
        } else if (lex.cur.kind == Tok::Plus) {
            lex.advance();
        }
        for (;;) {
            id.terms.push_back(term(neg));
            if (lex.cur.kind == Tok::Plus) {
                neg = false;
                lex.advance();
            } else if (lex.cur.kind == Tok::Minus) {
                neg = true;
                lex.advance();
            } else {
                break;
            }
        }
        expect(Tok::Eq, "'=' (every identity ends in '= 0')");
        if (lex.cur.kind != Tok::Number || lex.cur.text != "0") fail("expected '0'");
        lex.advance();
        int l = lex.cur.line, c = lex.cur.col;
        try {
            id.out_sort = sort_check(id.terms[0].expr, set.sig, id.vars);
            wellform_identity(id, set.sig);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(l, c, e.what());
        }
        pending = nullptr;
        set.identities.push_back(std::move(id));
    }

    Term term(bool neg) {
        Term t;
        t.coeff = Scalar(neg ? -1 : 1);
        if (lex.cur.kind == Tok::Number) {
            t.coeff = t.coeff * Scalar::parse(lex.cur.text);
            lex.advance();
            expect(Tok::Star, "'*' after coefficient");
        }
        if (lex.cur.kind == Tok::Ident && set.sig.has_param(lex.cur.text)) {
            t.param = lex.cur.text;
            lex.advance();
            expect(Tok::Star, "'*' after parameter coefficient");
        }
        t.expr = expr();
        return t;
    }

    Expr expr() {
        int l = lex.cur.line, c = lex.cur.col;
        std::string head = expect_ident("expression");
        // map word (with ^ / . sugar) applied to one argument
        if (set.sig.map_index(head) >= 0) {
            std::vector<int> chain;  // outermost first
            unsigned long count = 1;
            if (lex.cur.kind == Tok::Caret) {
                lex.advance();
                if (lex.cur.kind != Tok::Number || lex.cur.text.find('/') != std::string::npos)
                    fail("expected integer exponent");
                count = std::stoul(lex.cur.text);
                lex.advance();
            }
            for (unsigned long i = 0; i < count; ++i) chain.push_back(set.sig.map_index(head));
            while (lex.cur.kind == Tok::Dot) {
                lex.advance();
                int ml = lex.cur.line, mc = lex.cur.col;
                std::string next = expect_ident("map name after '.'");
                int idx = set.sig.map_index(next);
                if (idx < 0) throw ParseError(ml, mc, "unknown map '" + next + "'");
                unsigned long cnt = 1;
                if (lex.cur.kind == Tok::Caret) {
                    lex.advance();
                    if (lex.cur.kind != Tok::Number || lex.cur.text.find('/') != std::string::npos)
                        fail("expected integer exponent");
                    cnt = std::stoul(lex.cur.text);
                    lex.advance();
                }
                for (unsigned long i = 0; i < cnt; ++i) chain.push_back(idx);
            }
            expect(Tok::LParen, "'('");
            Expr inner = expr();
            expect(Tok::RParen, "')'");
            for (auto it = chain.rbegin(); it != chain.rend(); ++it) inner = Expr::map(*it, std::move(inner));
            return inner;
        }
        if (set.sig.prod_index(head) >= 0) {
            expect(Tok::LParen, "'('");
            Expr a = expr();
            expect(Tok::Comma, "','");
            Expr b = expr();
            expect(Tok::RParen, "')'");
            return Expr::prod(set.sig.prod_index(head), std::move(a), std::move(b));
        }
        if (set.sig.act_index(head) >= 0) {
            expect(Tok::LParen, "'('");
            Expr a = expr();
            expect(Tok::Comma, "','");
            Expr b = expr();
            expect(Tok::RParen, "')'");
            return Expr::act(set.sig.act_index(head), std::move(a), std::move(b));
        }
        // otherwise a variable of the identity being parsed
        const Identity& cur_id = pending_identity();
        for (const auto& v : cur_id.vars)
            if (v.name == head) return Expr::var(v.sort, v.index);
        throw ParseError(l, c, "unknown symbol '" + head + "'");
    }

    // The identity currently under construction (variables are needed while
    // parsing its terms). Maintained by identity() via this pointer.
    const Identity& pending_identity() const { return *pending; }
    const Identity* pending = nullptr;
};

}  // namespace

IdentitySet parse_identity_file(const std::string& text) {
    Parser p(text);
    return p.run();
}

namespace {

void print_expr_rec(std::ostringstream& os, const Expr& e, const IdentitySet& set,
                    const Identity& id) {
    switch (e.kind) {
        case Expr::Kind::Var: {
            for (const auto& v : id.vars)
                if (v.sort == e.sort && v.index == e.var_index) {
                    os << v.name;
                    return;
                }
            throw Error("print: expression references undeclared variable");
        }
        case Expr::Kind::Map:
            os << set.sig.maps[e.symbol].name << "(";
            print_expr_rec(os, e.args[0], set, id);
            os << ")";
            return;
        case Expr::Kind::Prod:
        case Expr::Kind::Act: {
            os << (e.kind == Expr::Kind::Prod ? set.sig.prods[e.symbol].name
                                              : set.sig.acts[e.symbol].name)
               << "(";
            print_expr_rec(os, e.args[0], set, id);
            os << ", ";
            print_expr_rec(os, e.args[1], set, id);
            os << ")";
            return;
        }
    }
}

}  // namespace

std::string print_expr(const Expr& e, const IdentitySet& set, const Identity& id) {
    std::ostringstream os;
    print_expr_rec(os, e, set, id);
    return os.str();
}

std::string print_identity_set(const IdentitySet& set) {
    if (set.identities.empty()) throw Error("print: refusing to print a set with no identities");
    std::ostringstream os;
    os << "set " << set.name << "\n";
    for (const auto& s : set.sig.sorts) {
        os << "sort " << s.name << " "
           << (s.role == SortRole::Algebra ? "algebra"
                                           : s.role == SortRole::Module ? "module" : "dual_module")
           << "\n";
    }
    for (const auto& m : set.sig.maps)
        os << "map " << m.name << " : " << set.sig.sorts[m.from].name << " -> "
           << set.sig.sorts[m.to].name << "\n";
    for (const auto& p : set.sig.prods)
        os << "prod " << p.name << " : " << set.sig.sorts[p.left].name << ", "
           << set.sig.sorts[p.right].name << " -> " << set.sig.sorts[p.out].name << "\n";
    for (const auto& a : set.sig.acts)
        os << "act " << a.name << " : " << set.sig.sorts[a.alg].name << " on "
           << set.sig.sorts[a.mod].name << (a.side == Side::Left ? " left" : " right") << "\n";
    for (const auto& p : set.sig.params) os << "param " << p << "\n";
    for (const auto& id : set.identities) {
        os << "identity " << id.name << " over ";
        // group variables by sort in first-appearance order
        std::vector<int> sort_order;
        for (const auto& v : id.vars) {
            bool seen = false;
            for (int s : sort_order) seen = seen || s == v.sort;
            if (!seen) sort_order.push_back(v.sort);
        }
        for (size_t gi = 0; gi < sort_order.size(); ++gi) {
            if (gi) os << ", ";
            os << set.sig.sorts[sort_order[gi]].name << "(";
            bool first = true;
            for (const auto& v : id.vars)
                if (v.sort == sort_order[gi]) {
                    if (!first) os << ", ";
                    os << v.name;
                    first = false;
                }
            os << ")";
        }
        os << ": ";
        for (size_t t = 0; t < id.terms.size(); ++t) {
            const Term& term = id.terms[t];
            Scalar mag = term.coeff;
            bool neg = mag < Scalar(0);
            if (neg) mag = -mag;
            if (t == 0) {
                if (neg) os << "- ";
            } else {
                os << (neg ? " - " : " + ");
            }
            if (!mag.is_one()) os << mag.str() << " * ";
            if (!term.param.empty()) os << term.param << " * ";
            print_expr_rec(os, term.expr, set, id);
        }
        os << " = 0\n";
    }
    return os.str();
}

}  // namespace bihom
