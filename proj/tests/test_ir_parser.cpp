#include <doctest.h>

#include "bihom/idnparse.hpp"

using namespace bihom;

namespace {
const char* kTinySet = R"(
# a minimal two-sorted set
set tiny
sort A algebra
sort V module
map alpha : A -> A
map beta1 : V -> V
prod mul : A, A -> A
act l : A on V left

identity assoc over A(x, y, z): mul(alpha(x), mul(y, z)) - mul(mul(x, y), x_free(z)) = 0
)";
}

TEST_CASE("identities parse with positions on errors") {
    // unknown symbol in the tiny set (x_free) is rejected with its location
    try {
        parse_identity_file(kTinySet);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 11);
        CHECK(std::string(e.what()).find("unknown symbol 'x_free'") != std::string::npos);
    }
}

TEST_CASE("the associativity example parses to a two-term identity") {
    IdentitySet s = parse_identity_file(
        "set demo\n"
        "sort A algebra\n"
        "map alpha : A -> A\nmap beta : A -> A\nprod mul : A, A -> A\n"
        "identity assoc over A(x,y,z): mul(alpha(x), mul(y,z)) - mul(mul(x,y), beta(z)) = 0\n");
    REQUIRE(s.identities.size() == 1);
    const Identity& id = s.identities[0];
    CHECK(id.terms.size() == 2);
    CHECK(id.terms[0].coeff == Scalar(1));
    CHECK(id.terms[1].coeff == Scalar(-1));
    CHECK(id.vars.size() == 3);
    CHECK(id.out_sort == 0);
}

TEST_CASE("map word sugar expands to nested applications") {
    IdentitySet s = parse_identity_file(
        "set demo\nsort A algebra\nmap alpha : A -> A\nmap beta : A -> A\n"
        "prod mul : A, A -> A\n"
        "identity w over A(x, y): mul(alpha^2.beta(x), y) - mul(alpha(alpha(beta(x))), y) = 0\n");
    const Identity& id = s.identities[0];
    CHECK(id.terms[0].expr == id.terms[1].expr);
}

TEST_CASE("unbalanced parentheses are a positioned syntax error") {
    try {
        parse_identity_file(
            "set demo\nsort A algebra\nprod mul : A, A -> A\n"
            "identity bad over A(x, y): mul(x, mul(y, x) = 0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(e.col > 1);
    }
}

TEST_CASE("sort errors are rejected") {
    // module element fed to an algebra product
    CHECK_THROWS_AS(parse_identity_file(
                        "set demo\nsort A algebra\nsort V module\nprod mul : A, A -> A\n"
                        "act l : A on V left\n"
                        "identity bad over A(x), V(v): mul(v, x) = 0\n"),
                    ParseError);
    // well-sorted nested action accepted, and its output sort is the module
    IdentitySet ok = parse_identity_file(
        "set demo\nsort A algebra\nsort V module\nmap alpha1 : A -> A\n"
        "prod mul : A, A -> A\nact l : A on V left\n"
        "identity good over A(x), V(v): l(alpha1(x), v) - l(x, v) = 0\n");
    CHECK(ok.identities[0].out_sort == 1);
}

TEST_CASE("heterogeneous output sorts and variable mismatches are rejected") {
    CHECK_THROWS_WITH_AS(
        parse_identity_file("set demo\nsort A algebra\nsort V module\nprod mul : A, A -> A\n"
                            "act l : A on V left\n"
                            "identity bad over A(x, y), V(v): mul(x, y) + l(x, v) = 0\n"),
        doctest::Contains("mixed output sort"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_identity_file("set demo\nsort A algebra\nprod mul : A, A -> A\n"
                            "identity bad over A(x, y, z): mul(x, y) - mul(x, z) = 0\n"),
        doctest::Contains("free-variable multiset"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_identity_file("set demo\nsort A algebra\nprod mul : A, A -> A\n"
                            "identity bad over A(x, y): mul(x, x) - mul(x, x) = 0\n"),
        doctest::Contains("repeated"), ParseError);
}

TEST_CASE("free variables collect as a sorted multiset") {
    IdentitySet s = parse_identity_file(
        "set demo\nsort A algebra\nsort B algebra\nmap beta2 : B -> B\n"
        "prod mulB : B, B -> B\nact lA : A on B left\nact rB : B on A right\n"
        "identity three over A(x), B(a, b): lA(rB(a, x), beta2(b)) - lA(x, mulB(a, b)) = 0\n");
    auto fv = free_vars(s.identities[0].terms[0].expr);
    REQUIRE(fv.size() == 3);
    CHECK(fv[0] == std::pair<int, int>{0, 1});  // (A, 1)
    CHECK(fv[1] == std::pair<int, int>{1, 1});  // (B, 1)
    CHECK(fv[2] == std::pair<int, int>{1, 2});  // (B, 2)
}

TEST_CASE("duplicate symbol names are rejected at declaration") {
    CHECK_THROWS_WITH_AS(
        parse_identity_file("set demo\nsort A algebra\nmap mul : A -> A\nprod mul : A, A -> A\n"),
        doctest::Contains("duplicate"), ParseError);
}

TEST_CASE("rational and parameter coefficients parse and print") {
    IdentitySet s = parse_identity_file(
        "set demo\nsort A algebra\nprod mul : A, A -> A\nparam lambda\n"
        "identity c over A(x, y): 3/2 * mul(x, y) - lambda * mul(x, y) "
        "+ 2 * lambda * mul(y, x) = 0\n");
    const Identity& id = s.identities[0];
    REQUIRE(id.terms.size() == 3);
    CHECK(id.terms[0].coeff == Scalar(3, 2));
    CHECK(id.terms[0].param.empty());
    CHECK(id.terms[1].coeff == Scalar(-1));
    CHECK(id.terms[1].param == "lambda");
    CHECK(id.terms[2].coeff == Scalar(2));
    CHECK(id.terms[2].param == "lambda");
    IdentitySet reparsed = parse_identity_file(print_identity_set(s));
    CHECK(reparsed == s);
}

TEST_CASE("printing an empty set is refused") {
    IdentitySet s;
    s.name = "empty";
    CHECK_THROWS_AS(print_identity_set(s), Error);
}
