#include <doctest.h>

#include "bihom/construct.hpp"

using namespace bihom;
using namespace bihom::fixtures;

namespace {
Vec basis(int dim, int i) {
    Vec v(dim);
    v[i - 1] = Scalar(1);
    return v;
}
}  // namespace

TEST_CASE("direct sum is block diagonal and closed under validity") {
    AlgebraPresentation s = direct_sum(Z(1), K1());
    CHECK(s.dim == 2);
    CHECK(s.products[0].apply(basis(2, 2), basis(2, 2)) == basis(2, 2));
    CHECK(s.products[0].apply(basis(2, 1), basis(2, 2)) == Vec(2));
    CHECK(all_pass(check_variety(s)));

    AlgebraPresentation kk = direct_sum(K1(), K1());
    CHECK(kk.dim == 2);
    CHECK(all_pass(check_variety(kk)));
    CHECK(kk.products[0].apply(basis(2, 1), basis(2, 2)) == Vec(2));  // orthogonal idempotents

    CHECK(direct_sum(E(Scalar(1)), N2()).dim == 4);
    CHECK_THROWS_AS(direct_sum(K1(), D2()), Error);
}

TEST_CASE("tensor product uses row-major basis order and preserves validity") {
    AlgebraPresentation a = P2ab();
    AlgebraPresentation t = tensor_product(K1(), a);
    CHECK(t.dim == a.dim);
    // the unit factor reproduces the other factor's tables under (1, j) order
    CHECK(t.products[0] == a.products[0]);
    CHECK(t.alpha == a.alpha);

    AlgebraPresentation nn = tensor_product(N2(), N2());
    CHECK(nn.dim == 4);
    // (e2 (x) e1) . (e2 (x) e1) = (e2 e2) (x) (e1 e1) = 0; index e2(x)e1 = 3
    CHECK(is_zero(nn.products[0].apply(basis(4, 3), basis(4, 3))));
    // (e1 (x) e1) . (e2 (x) e2) = e2 (x) e2
    CHECK(nn.products[0].apply(basis(4, 1), basis(4, 4)) == basis(4, 4));
    CHECK(all_pass(check_variety(nn)));
    CHECK(all_pass(check_variety(tensor_product(K1(), N2()))));
    CHECK(all_pass(check_variety(tensor_product(D2ab(), D2()))));
}

TEST_CASE("yau twist: identity twists are neutral, tables match, validity closed") {
    AlgebraPresentation n2 = N2();
    AlgebraPresentation same = yau_twist(n2, Matrix::identity(2), Matrix::identity(2), 5);
    CHECK(same.same_tables(n2));

    Matrix s2 = sigma(Scalar(2));
    AlgebraPresentation tw = yau_twist(n2, s2, s2, 1);
    CHECK(tw.products[0].apply(basis(2, 1), basis(2, 2)) == Vec{Scalar(0), Scalar(2)});
    CHECK(is_zero(tw.products[0].apply(basis(2, 2), basis(2, 2))));
    CHECK(tw.alpha == s2);
    CHECK(all_pass(check_variety(tw)));
    CHECK(tw.same_tables(N2_sigma(Scalar(2))));

    // non-endomorphism rejected with a named witness
    Matrix bad(2, 2);
    bad.at(1, 0) = Scalar(1);  // e1 -> e2, e2 -> 0 is not an endomorphism of N2
    CHECK_THROWS_WITH_AS(yau_twist(n2, bad, bad, 1), doctest::Contains("not an endomorphism"),
                         Error);
    // commuting requirement
    AlgebraPresentation z2 = Z(2);
    Matrix m1(2, 2), m2(2, 2);
    m1.at(0, 1) = Scalar(1);  // nilpotent shift
    m2.at(1, 1) = Scalar(2);
    CHECK_THROWS_WITH_AS(yau_twist(z2, m1, m2, 1), doctest::Contains("do not commute"), Error);
}

TEST_CASE("derived algebras: degenerate cases and type agreement") {
    AlgebraPresentation a = N2_sigma(Scalar(2));
    CHECK(derived_algebra(a, 0, 1).same_tables(a));
    CHECK(derived_algebra(a, 0, 2).same_tables(a));
    CHECK(derived_algebra(a, 1, 1).same_tables(derived_algebra(a, 1, 2)));
    AlgebraPresentation d2k2 = derived_algebra(a, 2, 2);
    // type 2 at k = 2 composes products with the cubes and maps with the fourth powers
    Matrix s = sigma(Scalar(2));
    CHECK(d2k2.alpha == s.pow(4));
    CHECK(d2k2.products[0] == a.products[0].precompose(s.pow(3), s.pow(3)));
    CHECK(all_pass(check_variety(d2k2)));
    for (unsigned long k : {1UL, 2UL, 3UL}) {
        CHECK(all_pass(check_variety(derived_algebra(a, k, 1))));
        CHECK(all_pass(check_variety(derived_algebra(a, k, 2))));
    }
    CHECK_THROWS_AS(derived_algebra(a, 1, 3), Error);
    CHECK_THROWS_AS(derived_algebra(a, 70, 2), Error);
}

TEST_CASE("operator checks: Rota-Baxter") {
    // R = 0 passes for any weight
    OperatorPresentation zero;
    zero.name = "zero";
    zero.base = N2();
    zero.op = Matrix(2, 2);
    zero.kind = OperatorKind::RotaBaxter;
    zero.weight = Scalar(7, 3);
    CHECK(all_pass(check_operator(zero)));

    for (auto lam : {Scalar(1), Scalar(2), Scalar(5, 3)}) {
        CHECK(all_pass(check_operator(RB1(lam))));
        CHECK(all_pass(check_operator(RB_P2(P2ab(), lam))));
    }

    // R = id at weight 1 fails with residual -2 on (e1, e1)
    OperatorPresentation bad;
    bad.name = "id";
    bad.base = K1();
    bad.op = Matrix::identity(1);
    bad.kind = OperatorKind::RotaBaxter;
    bad.weight = Scalar(1);
    auto reports = check_operator(bad);
    bool found = false;
    for (const auto& r : reports)
        if (r.identity == "rota_baxter") {
            REQUIRE_FALSE(r.pass);
            REQUIRE(!r.failures.empty());
            CHECK(r.failures[0].tuple == std::vector<int>{1, 1});
            CHECK(r.failures[0].residual == Vec{Scalar(-2)});
            found = true;
        }
    CHECK(found);
}

TEST_CASE("operator checks: centroid and averaging") {
    // gamma = c id is a centroid of anything
    for (const auto& a : {K1(), N2(), P2ab()}) {
        OperatorPresentation c;
        c.name = "scale";
        c.base = a;
        c.op = Matrix::scalar(a.dim, Scalar(5, 2));
        c.kind = OperatorKind::Centroid;
        CHECK(all_pass(check_operator(c)));
    }
    // gamma: e1 -> e2, e2 -> 0 is a centroid of the dual numbers
    OperatorPresentation g;
    g.name = "nil";
    g.base = N2();
    g.op = Matrix(2, 2);
    g.op.at(1, 0) = Scalar(1);
    g.kind = OperatorKind::Centroid;
    CHECK(all_pass(check_operator(g)));

    // the projection onto the unital line is averaging on the dual numbers
    OperatorPresentation avg;
    avg.name = "proj";
    avg.base = N2();
    avg.op = Matrix(2, 2);
    avg.op.at(0, 0) = Scalar(1);
    avg.kind = OperatorKind::Averaging;
    CHECK(all_pass(check_operator(avg)));
    // but it is not a centroid (fails centroid_left at (e2, e1))
    OperatorPresentation not_cen = avg;
    not_cen.kind = OperatorKind::Centroid;
    CHECK_FALSE(all_pass(check_operator(not_cen)));
}

TEST_CASE("centroid twisting keeps the Rota-Baxter structure") {
    // identity centroids change nothing
    auto [same, rb_same] = centroid_twist(RB1(Scalar(1)), Matrix::identity(1),
                                          Matrix::identity(1));
    CHECK(same.same_tables(K1()));
    CHECK(all_pass(check_operator(rb_same)));

    // 2 id and 3 id on the unital line: product scales by 6, maps by 2 and 3
    auto [tw, rb_tw] = centroid_twist(RB1(Scalar(1)), Matrix::scalar(1, Scalar(2)),
                                      Matrix::scalar(1, Scalar(3)));
    CHECK(tw.products[0].at(0, 0, 0) == Scalar(6));
    CHECK(tw.alpha.at(0, 0) == Scalar(2));
    CHECK(tw.beta.at(0, 0) == Scalar(3));
    CHECK(all_pass(check_operator(rb_tw)));
    // with distinct scaling factors the two sides of the twisted
    // associativity law pick up different centroid powers, so even the
    // structural axiom fails; with equal factors the structural axiom
    // holds but multiplicativity still fails for invertible non-identity
    // centroids. The Rota-Baxter re-check passes in both cases.
    for (const auto& r : check_variety(tw))
        if (r.identity == "assoc") CHECK_FALSE(r.pass);
    auto [tw_eq, rb_eq] = centroid_twist(RB1(Scalar(1)), Matrix::scalar(1, Scalar(2)),
                                         Matrix::scalar(1, Scalar(2)));
    for (const auto& r : check_variety(tw_eq)) {
        if (r.identity == "assoc" || r.identity == "maps_commute") CHECK(r.pass);
        else CHECK_FALSE(r.pass);  // multiplicativity picks up one extra factor
    }
    CHECK(all_pass(check_operator(rb_eq)));

    // a non-centroid map is rejected with the failing condition named
    Matrix proj(2, 2);
    proj.at(0, 0) = Scalar(1);
    OperatorPresentation rb0;
    rb0.name = "zero";
    rb0.base = N2();
    rb0.op = Matrix(2, 2);
    rb0.kind = OperatorKind::RotaBaxter;
    rb0.weight = Scalar(1);
    CHECK_THROWS_WITH_AS(centroid_twist(rb0, proj, proj), doctest::Contains("centroid"), Error);

    // centroid twist on a valid nontrivial pair over the dual numbers
    Matrix nil(2, 2);
    nil.at(1, 0) = Scalar(1);
    auto [tw2, rb2] = centroid_twist(rb0, nil, nil);
    CHECK(all_pass(check_variety(tw2)));
    CHECK(all_pass(check_operator(rb2)));
    // identity twists of nontrivial models keep the full variety set
    OperatorPresentation rbp = RB_P2(P2ab(), Scalar(1));
    auto [tw3, rb3] = centroid_twist(rbp, Matrix::identity(2), Matrix::identity(2));
    CHECK(all_pass(check_variety(tw3)));
    CHECK(all_pass(check_operator(rb3)));
}

TEST_CASE("Rota-Baxter splitting into tridendriform and back") {
    OperatorPresentation rb = RB1(Scalar(2));
    AlgebraPresentation t = rb_tridendriform(rb);
    REQUIRE(t.products.size() == 3);
    CHECK(t.products[0].at(0, 0, 0) == Scalar(-2));
    CHECK(t.products[1].at(0, 0, 0) == Scalar(-2));
    CHECK(t.products[2].at(0, 0, 0) == Scalar(2));
    CHECK(all_pass(check_variety(t)));
    CHECK(all_pass(check_variety(t, Transcription::Corrected)));

    AlgebraPresentation assoc = sum_to_associative(t);
    CHECK(assoc.products[0].at(0, 0, 0) == Scalar(-2));
    CHECK(all_pass(check_variety(assoc)));

    AlgebraPresentation dend = tridend_to_dend(t);
    REQUIRE(dend.products.size() == 2);
    CHECK(dend.products[0].at(0, 0, 0) == Scalar(-2));
    CHECK(dend.products[1].is_zero());
    CHECK(all_pass(check_variety(dend)));
    // both paths to the summed product agree
    CHECK(sum_to_associative(dend).products[0] == assoc.products[0]);

    // degenerate splitting: R = 0 reduces the axioms to associativity of dot
    OperatorPresentation rb_zero;
    rb_zero.name = "zero";
    rb_zero.base = N2();
    rb_zero.op = Matrix(2, 2);
    rb_zero.kind = OperatorKind::RotaBaxter;
    rb_zero.weight = Scalar(1);
    AlgebraPresentation t0 = rb_tridendriform(rb_zero);
    CHECK(t0.products[0].is_zero());
    CHECK(t0.products[2] == N2().products[0]);
    CHECK(all_pass(check_variety(t0)));

    // noncommutative twisted chain
    AlgebraPresentation t2 = rb_tridendriform(RB_P2(P2ab(), Scalar(2)));
    CHECK(all_pass(check_variety(t2)));
    CHECK(all_pass(check_variety(sum_to_associative(t2))));
    CHECK(all_pass(check_variety(tridend_to_dend(t2))));
    CHECK(sum_to_associative(tridend_to_dend(t2)).products[0] ==
          sum_to_associative(t2).products[0]);

    // precondition failure is rejected
    OperatorPresentation bad;
    bad.name = "id";
    bad.base = K1();
    bad.op = Matrix::identity(1);
    bad.kind = OperatorKind::RotaBaxter;
    bad.weight = Scalar(1);
    CHECK_THROWS_AS(rb_tridendriform(bad), Error);
}

TEST_CASE("averaging dialgebra") {
    // identity maps: both products collapse to the original associative one
    AlgebraPresentation d = averaging_dialgebra(N2());
    CHECK(d.products[0] == N2().products[0]);
    CHECK(d.products[1] == N2().products[0]);
    CHECK(all_pass(check_variety(d)));

    // non-averaging twist is rejected with a witness
    AlgebraPresentation n2bad = N2();
    Matrix unip = Matrix::identity(2);
    unip.at(0, 1) = Scalar(1);  // unipotent shear, fails the averaging identity
    n2bad.beta = unip;
    CHECK_THROWS_WITH_AS(averaging_dialgebra(n2bad), doctest::Contains("averaging"), Error);
}

TEST_CASE("dialgebra views: weaker set holds and the iff with per-product associativity") {
    DialgebraViews v = dialgebra_views(D2ab());
    CHECK(all_pass(v.ls_dialgebra));
    for (const auto& rep : v.per_product) CHECK(all_pass(rep));
    CHECK(v.single_product.empty());  // dl != dr here

    // equal products: the single-product view applies
    AlgebraPresentation sym = averaging_dialgebra(N2());
    DialgebraViews v2 = dialgebra_views(sym);
    CHECK(!v2.single_product.empty());
    CHECK(all_pass(v2.single_product));

    // an ls-dialgebra whose two products are each associative passes the
    // dialgebra set too, and conversely (both directions on fixtures)
    AlgebraPresentation d2 = D2ab();
    bool products_assoc = true;
    for (const auto& rep : v.per_product) products_assoc = products_assoc && all_pass(rep);
    AlgebraPresentation as_dialgebra = d2;
    as_dialgebra.variety = Variety::AssocDialgebra;
    CHECK(products_assoc == all_pass(check_variety(as_dialgebra)));

    // proper left-symmetric dialgebra: products are not associative and the
    // dialgebra set indeed fails
    AlgebraPresentation ls = LS2ab();
    AlgebraPresentation ls_d;
    ls_d.name = "LS2d";
    ls_d.dim = ls.dim;
    ls_d.variety = Variety::LsDialgebra;
    ls_d.products = {ls.products[0], ls.products[0]};
    ls_d.alpha = ls.alpha;
    ls_d.beta = ls.beta;
    CHECK(all_pass(check_variety(ls_d)));
    DialgebraViews v3 = dialgebra_views(ls_d);
    bool assoc3 = true;
    for (const auto& rep : v3.per_product) assoc3 = assoc3 && all_pass(rep);
    CHECK_FALSE(assoc3);
    AlgebraPresentation ls_as_assoc = ls_d;
    ls_as_assoc.variety = Variety::AssocDialgebra;
    CHECK_FALSE(all_pass(check_variety(ls_as_assoc)));
}

TEST_CASE("involution swap") {
    AlgebraPresentation d = D2();  // identity maps are involutions
    AlgebraPresentation swapped = involution_swap(d);
    CHECK(all_pass(check_variety(swapped)));

    Matrix refl = Matrix::identity(2);
    refl.at(1, 1) = Scalar(-1);
    AlgebraPresentation z = Z(2, Variety::LsDialgebra);
    z.alpha = refl;
    z.beta = refl;
    AlgebraPresentation zs = involution_swap(z);
    CHECK(zs.alpha == z.beta);
    CHECK(all_pass(check_variety(zs)) == all_pass(check_variety(z)));

    AlgebraPresentation bad = D2();
    bad.alpha = sigma(Scalar(2));
    CHECK_THROWS_AS(involution_swap(bad), Error);
}

TEST_CASE("morphism check and the graph criterion agree") {
    AlgebraPresentation n2 = N2();
    // identity and zero maps are morphisms
    CHECK(all_pass(check_morphism(Matrix::identity(2), n2, n2)));
    CHECK(all_pass(check_morphism(Matrix(2, 2), n2, P2())));
    // the scaling endomorphism is a morphism of the dual numbers
    CHECK(all_pass(check_morphism(sigma(Scalar(2)), n2, n2)));
    // e1 -> e2, e2 -> 0 is not
    Matrix bad(2, 2);
    bad.at(1, 0) = Scalar(1);
    CHECK_FALSE(all_pass(check_morphism(bad, n2, n2)));

    for (const Matrix& f : {Matrix::identity(2), sigma(Scalar(2)), bad, Matrix(2, 2)}) {
        bool morphism = all_pass(check_morphism(f, n2, n2));
        CHECK(graph_check(f, n2, n2).closed == morphism);
    }
    // two-product graph criterion
    CHECK(graph_check(Matrix::identity(2), D2ab(), D2ab()).closed);
}

TEST_CASE("ideal check") {
    AlgebraPresentation n2 = N2();
    CHECK(ideal_check(n2, {}).ideal);  // the zero subspace
    IdealCheck nilradical = ideal_check(n2, {basis(2, 2)});
    CHECK(nilradical.ideal);
    CHECK(nilradical.rank == 1);
    IdealCheck line = ideal_check(n2, {basis(2, 1)});
    CHECK_FALSE(line.ideal);
    CHECK(!line.witness.empty());
    // degenerate generating sets are normalized first
    IdealCheck dup = ideal_check(n2, {basis(2, 2), basis(2, 2)});
    CHECK(dup.ideal);
    CHECK(dup.rank == 1);
    // whole space is always an ideal
    CHECK(ideal_check(P2ab(), {basis(2, 1), basis(2, 2)}).ideal);
}

TEST_CASE("twist functoriality: morphisms intertwining the twists survive twisting") {
    AlgebraPresentation n2 = N2();
    Matrix s2 = sigma(Scalar(2));
    Matrix f = sigma(Scalar(3));  // a morphism n2 -> n2 commuting with s2
    REQUIRE(all_pass(check_morphism(f, n2, n2)));
    AlgebraPresentation tw = yau_twist(n2, s2, s2, 1);
    CHECK(all_pass(check_morphism(f, tw, tw)));
}

TEST_CASE("type-1 derived algebras are twists along the algebra's own maps") {
    AlgebraPresentation a = N2_sigma(Scalar(2));
    for (unsigned long k : {1UL, 2UL, 3UL}) {
        AlgebraPresentation d = derived_algebra(a, k, 1);
        AlgebraPresentation t = yau_twist(a, a.alpha, a.beta, k);
        CHECK(d.products == t.products);
        CHECK(d.alpha == t.alpha);
        CHECK(d.beta == t.beta);
    }
}

TEST_CASE("summing the zero dendriform model gives the zero algebra") {
    AlgebraPresentation z = Z(2, Variety::BihomDendriform);
    AlgebraPresentation s = sum_to_associative(z);
    CHECK(s.products[0].is_zero());
    CHECK(all_pass(check_variety(s)));
    CHECK(tridend_to_dend(Z(2, Variety::BihomTridendriform)).products[1].is_zero());
}

TEST_CASE("the summed split product matches an independently built table") {
    // brute-force oracle: entry by entry through vector evaluation, not
    // through tensor composition
    AlgebraPresentation base = P2ab();
    OperatorPresentation rb = RB_P2(base, Scalar(2));
    AlgebraPresentation total = sum_to_associative(rb_tridendriform(rb));
    const Tensor3& mu = base.products[0];
    for (int i = 0; i < base.dim; ++i)
        for (int j = 0; j < base.dim; ++j) {
            Vec ei = basis(base.dim, i + 1), ej = basis(base.dim, j + 1);
            Vec expect(base.dim);
            Vec t1 = mu.apply(ei, rb.op.apply(ej));
            Vec t2 = mu.apply(rb.op.apply(ei), ej);
            Vec t3 = mu.apply(ei, ej);
            for (int k = 0; k < base.dim; ++k)
                expect[k] = t1[k] + t2[k] + rb.weight * t3[k];
            for (int k = 0; k < base.dim; ++k)
                CHECK(total.products[0].at(k, i, j) == expect[k]);
        }
}
