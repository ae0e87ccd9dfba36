#include <doctest.h>

#include "bihom/modmatch.hpp"

using namespace bihom;
using namespace bihom::fixtures;

namespace {
AlgebraPresentation trid_P2ab() { return rb_tridendriform(RB_P2(P2ab(), Scalar(2))); }
}  // namespace

TEST_CASE("regular bimodules of valid models pass their sets") {
    for (const auto& a : {K1(), N2(), P2ab(), N2_sigma(Scalar(2))})
        CHECK_MESSAGE(all_pass(check_bimodule(regular_bimodule(a))), a.name);
    CHECK(all_pass(check_bimodule(regular_bimodule(LS2ab()))));
    // regular bimodule of the collapsed dialgebra (dl = dr = mul)
    CHECK(all_pass(check_bimodule(regular_bimodule(averaging_dialgebra(N2())))));
    // tridendriform and dendriform regular bimodules, twisted noncommutative
    AlgebraPresentation t = trid_P2ab();
    REQUIRE(all_pass(check_variety(t)));
    CHECK(all_pass(check_bimodule(regular_bimodule(t))));
    CHECK(all_pass(check_bimodule(regular_bimodule(tridend_to_dend(t)))));
}

TEST_CASE("as-printed dialgebra bimodule rows with misprints fail exactly where expected") {
    // D2ab has dl != dr; its regular bimodule separates the misprinted rows
    AlgebraPresentation d = D2ab();
    REQUIRE(all_pass(check_variety(d)));
    BimodulePresentation reg = regular_bimodule(d);
    auto printed = check_bimodule(reg, Transcription::AsPrinted);
    std::vector<std::string> failing;
    for (const auto& r : printed)
        if (!r.pass) failing.push_back(r.identity);
    CHECK(failing == std::vector<std::string>{"q13"});
    CHECK(all_pass(check_bimodule(reg, Transcription::Corrected)));

    // same structure as an ls-dialgebra: s6 and s10 are the misprinted rows
    AlgebraPresentation ls = d;
    ls.variety = Variety::LsDialgebra;
    BimodulePresentation reg_ls = regular_bimodule(ls);
    auto printed_ls = check_bimodule(reg_ls, Transcription::AsPrinted);
    failing.clear();
    for (const auto& r : printed_ls)
        if (!r.pass) failing.push_back(r.identity);
    CHECK(failing == std::vector<std::string>{"s6", "s10"});
    CHECK(all_pass(check_bimodule(reg_ls, Transcription::Corrected)));
}

TEST_CASE("zero actions with identity module maps form a bimodule of any valid base") {
    for (const auto& a : {K1(), N2(), P2ab()})
        CHECK(all_pass(check_bimodule(zero_bimodule(a, 2))));
    CHECK(all_pass(check_bimodule(zero_bimodule(D2ab(), 1))));
    CHECK(all_pass(check_bimodule(zero_bimodule(trid_P2ab(), 2))));
}

TEST_CASE("semidirect extensions pass the base variety and embed the base block") {
    for (const auto& a : {K1(), N2(), P2ab()}) {
        SemidirectResult s = semidirect(regular_bimodule(a));
        CHECK(s.algebra.dim == 2 * a.dim);
        CHECK(all_pass(check_variety(s.algebra)));
        // the base block reproduces the original table and V.V = 0
        for (int k = 0; k < a.dim; ++k)
            for (int i = 0; i < a.dim; ++i)
                for (int j = 0; j < a.dim; ++j)
                    CHECK(s.algebra.products[0].at(k, i, j) == a.products[0].at(k, i, j));
        for (int k = 0; k < s.algebra.dim; ++k)
            for (int i = a.dim; i < s.algebra.dim; ++i)
                for (int j = a.dim; j < s.algebra.dim; ++j)
                    CHECK(s.algebra.products[0].at(k, i, j).is_zero());
    }
    // zero bimodule semidirect equals the direct sum with the zero algebra
    AlgebraPresentation n2 = N2();
    SemidirectResult z = semidirect(zero_bimodule(n2, 2));
    CHECK(z.algebra.same_tables(direct_sum(n2, Z(2))));
    // dialgebra and tridendriform semidirect products
    CHECK(all_pass(check_variety(semidirect(regular_bimodule(D2ab()), Transcription::Corrected)
                                     .algebra)));
    CHECK(all_pass(check_variety(semidirect(regular_bimodule(trid_P2ab())).algebra)));
    // the failing bimodule is rejected with the identity forwarded
    BimodulePresentation broken = regular_bimodule(n2);
    broken.actions[0][1].at(0, 0) += Scalar(1);
    CHECK_THROWS_WITH_AS(semidirect(broken), doctest::Contains("bimodule check fails"), Error);
}

TEST_CASE("dual bimodules") {
    // one-dimensional regular bimodule is self-dual
    BimodulePresentation k1 = regular_bimodule(K1());
    BimodulePresentation k1d = dual_bimodule(k1);
    CHECK(k1d.actions == k1.actions);
    CHECK(all_pass(check_bimodule(k1d)));

    // symmetric two-dimensional ls-dialgebra bimodule: preconditions hold,
    // the transposed module passes, and the double dual returns the original
    AlgebraPresentation n2d = averaging_dialgebra(N2());
    AlgebraPresentation n2ls = n2d;
    n2ls.variety = Variety::LsDialgebra;
    BimodulePresentation reg = regular_bimodule(n2ls);
    REQUIRE(all_pass(check_bimodule(reg)));
    BimodulePresentation dual = dual_bimodule(reg);
    CHECK(all_pass(check_bimodule(dual)));
    BimodulePresentation dd = dual_bimodule(dual);
    CHECK(dd.actions == reg.actions);
    CHECK(dd.beta1_v == reg.beta1_v);

    // tridendriform dual with preconditions on a commutative model
    AlgebraPresentation tk = rb_tridendriform(RB1(Scalar(2)));
    BimodulePresentation regt = regular_bimodule(tk);
    BimodulePresentation dualt = dual_bimodule(regt);
    CHECK(all_pass(check_bimodule(dualt)));

    // precondition failure is reported: the noncommutative dialgebra's
    // regular bimodule does not satisfy the dual preconditions
    AlgebraPresentation d2ls = D2ab();
    d2ls.variety = Variety::LsDialgebra;
    CHECK_THROWS_WITH_AS(dual_bimodule(regular_bimodule(d2ls)),
                         doctest::Contains("precondition"), Error);
}

TEST_CASE("twisted bimodules") {
    // identity twists change nothing
    BimodulePresentation reg = regular_bimodule(N2());
    Matrix id2 = Matrix::identity(2);
    TwistedBimodule same = twist_bimodule(reg, id2, id2, id2, id2);
    CHECK(same.base.same_tables(N2()));
    CHECK(same.module.actions == reg.actions);
    CHECK(all_pass(check_bimodule(same.module)));

    // power case: twist the regular bimodule of the sigma model by its own
    // maps (p = q = 1)
    AlgebraPresentation ns = N2_sigma(Scalar(2));
    BimodulePresentation regs = regular_bimodule(ns);
    REQUIRE(all_pass(check_bimodule(regs)));
    TwistedBimodule tw = twist_bimodule(regs, ns.alpha, ns.beta, regs.beta1_v, regs.beta2_v);
    CHECK(all_pass(check_variety(tw.base)));
    CHECK(all_pass(check_bimodule(tw.module)));

    // non-commuting module twists are rejected
    Matrix shear = Matrix::identity(2);
    shear.at(0, 1) = Scalar(1);
    Matrix diag = sigma(Scalar(2));
    CHECK_THROWS_WITH_AS(twist_bimodule(regs, ns.alpha, ns.beta, shear, diag),
                         doctest::Contains("do not commute"), Error);
    // intertwining hypothesis failures are named
    CHECK_THROWS_WITH_AS(twist_bimodule(reg, id2, id2, diag, diag),
                         doctest::Contains("hypothesis"), Error);
}

TEST_CASE("degenerate matched pairs from bimodules") {
    for (const auto& a : {K1(), N2(), P2ab()}) {
        MatchedPairPresentation p = pair_from_bimodule(regular_bimodule(a));
        MatchedPairReport rep = check_matched_pair(p);
        CHECK_MESSAGE(rep.pass(), a.name);
        // the matched sum equals the semidirect extension table for table
        MatchedSumResult sum = matched_sum(p);
        SemidirectResult sd = semidirect(regular_bimodule(a));
        CHECK(sum.algebra.same_tables(sd.algebra));
        CHECK(all_pass(check_variety(sum.algebra)));
    }
    // two-product and three-product degenerate pairs
    MatchedPairPresentation pd = pair_from_bimodule(regular_bimodule(D2ab()));
    CHECK(check_matched_pair(pd, Transcription::Corrected).pass());
    MatchedPairPresentation pt = pair_from_bimodule(regular_bimodule(trid_P2ab()));
    CHECK(check_matched_pair(pt).pass());
    CHECK(matched_sum(pt).algebra.dim == 4);
    CHECK(all_pass(check_variety(matched_sum(pt).algebra)));

    // both constituents zero: the sum is the bigger zero algebra
    MatchedPairPresentation zz = pair_from_bimodule(zero_bimodule(Z(1), 1));
    CHECK(matched_sum(zz).algebra.same_tables(Z(2)));
}

TEST_CASE("single-entry mutations flip at least one layered check") {
    // on the one-dimensional pair every possible +1 mutation breaks a check
    MatchedPairPresentation p = pair_from_bimodule(regular_bimodule(K1()));
    REQUIRE(check_matched_pair(p).pass());
    Mcg64 rng(20240805);
    const int trials = 20;
    int flipped = 0;
    for (int t = 0; t < trials; ++t) {
        MatchedPairPresentation mutated = p;
        bool a_side = rng.below(2) == 0;
        auto& families = a_side ? mutated.actions_a_on_b : mutated.actions_b_on_a;
        auto& family = families[rng.below(int(families.size()))];
        auto& mat = family[rng.below(int(family.size()))];
        mat.at(rng.below(mat.rows()), rng.below(mat.cols())) += Scalar(1);
        if (!check_matched_pair(mutated).pass() ||
            !all_pass(check_variety(matched_sum_table(mutated))))
            ++flipped;
    }
    CHECK(flipped == trials);
}

TEST_CASE("mutations that survive the layered checks still give valid sums") {
    // on a two-dimensional pair a few single-entry mutations happen to land
    // on other genuine matched pairs; for those the sum theorem must hold,
    // which exercises the cross equations away from the degenerate case
    MatchedPairPresentation p = pair_from_bimodule(regular_bimodule(N2()));
    REQUIRE(check_matched_pair(p).pass());
    Mcg64 rng(20240805);
    int flipped = 0, survived = 0;
    for (int t = 0; t < 40; ++t) {
        MatchedPairPresentation mutated = p;
        bool a_side = rng.below(2) == 0;
        auto& families = a_side ? mutated.actions_a_on_b : mutated.actions_b_on_a;
        auto& family = families[rng.below(int(families.size()))];
        auto& mat = family[rng.below(int(family.size()))];
        mat.at(rng.below(mat.rows()), rng.below(mat.cols())) += Scalar(1);
        if (check_matched_pair(mutated).pass()) {
            ++survived;
            CHECK(all_pass(check_variety(matched_sum_table(mutated))));
        } else {
            ++flipped;
        }
    }
    CHECK(flipped > 0);
    CHECK(survived > 0);
}

TEST_CASE("a corrupted action names the failing equation and witness") {
    MatchedPairPresentation p = pair_from_bimodule(regular_bimodule(K1()));
    p.actions_b_on_a[0][0].at(0, 0) = Scalar(1);  // lB(e1) e1 = e1, previously zero
    MatchedPairReport rep = check_matched_pair(p);
    CHECK_FALSE(rep.pass());
    bool named = false;
    for (const auto& r : rep.cross)
        if (!r.pass && !r.failures.empty()) named = true;
    for (const auto& r : rep.bimodule_b_on_a)
        if (!r.pass && !r.failures.empty()) named = true;
    CHECK(named);
}

TEST_CASE("tridendriform pairs collapse to associative ones") {
    AlgebraPresentation t = trid_P2ab();
    MatchedPairPresentation p = pair_from_bimodule(regular_bimodule(t));
    REQUIRE(check_matched_pair(p).pass());
    MatchedPairPresentation q = matched_to_associative(p);
    CHECK(q.a.variety == Variety::BihomAssociative);
    CHECK(check_matched_pair(q).pass());
    // summed actions of the regular tridendriform bimodule equal the
    // regular actions of the summed product
    BimodulePresentation regular_sum = regular_bimodule(sum_to_associative(t));
    CHECK(q.actions_a_on_b == regular_sum.actions);
    // the two paths to the summed algebra produce identical tables
    AlgebraPresentation path1 = sum_to_associative(matched_sum(p).algebra);
    AlgebraPresentation path2 = matched_sum(q).algebra;
    CHECK(path1.products[0] == path2.products[0]);
    CHECK(path1.alpha == path2.alpha);
}

TEST_CASE("summing a tridendriform bimodule gives an associative bimodule") {
    AlgebraPresentation t = trid_P2ab();
    BimodulePresentation reg = regular_bimodule(t);
    REQUIRE(all_pass(check_bimodule(reg)));
    BimodulePresentation summed = sum_bimodule(reg);
    CHECK(summed.base.variety == Variety::BihomAssociative);
    CHECK(all_pass(check_bimodule(summed)));
    CHECK(summed.actions == regular_bimodule(sum_to_associative(t)).actions);
}

TEST_CASE("a pair with zero cross-actions sums to the direct sum") {
    AlgebraPresentation t = rb_tridendriform(RB1(Scalar(2)));
    MatchedPairPresentation p;
    p.name = "two_copies";
    p.a = t;
    p.b = t;
    auto anames = action_names(t.variety);
    for (size_t s = 0; s < anames.size(); ++s) {
        p.actions_a_on_b.push_back(std::vector<Matrix>(t.dim, Matrix(t.dim, t.dim)));
        p.actions_b_on_a.push_back(std::vector<Matrix>(t.dim, Matrix(t.dim, t.dim)));
    }
    REQUIRE(check_matched_pair(p).pass());
    CHECK(matched_sum(p).algebra.same_tables(direct_sum(t, t)));
    CHECK(all_pass(check_variety(matched_sum(p).algebra)));
}

TEST_CASE("survivor sums stay valid across the two-product and three-product blocks") {
    // same soundness property as above, on the dialgebra and tridendriform
    // equation blocks (the dialgebra one under its corrected transcription)
    struct Case {
        MatchedPairPresentation pair;
        Transcription variant;
    };
    std::vector<Case> cases;
    cases.push_back({pair_from_bimodule(regular_bimodule(D2())), Transcription::Corrected});
    cases.push_back({pair_from_bimodule(regular_bimodule(rb_tridendriform(RB1(Scalar(2))))),
                     Transcription::AsPrinted});
    for (auto& c : cases) {
        REQUIRE(check_matched_pair(c.pair, c.variant).pass());
        Mcg64 rng(99);
        int survived = 0;
        for (int t = 0; t < 60; ++t) {
            MatchedPairPresentation mutated = c.pair;
            auto& families = rng.below(2) ? mutated.actions_a_on_b : mutated.actions_b_on_a;
            auto& family = families[rng.below(int(families.size()))];
            auto& mat = family[rng.below(int(family.size()))];
            Scalar delta = rng.rational();
            if (delta.is_zero()) delta = Scalar(1);
            mat.at(rng.below(mat.rows()), rng.below(mat.cols())) += delta;
            if (check_matched_pair(mutated, c.variant).pass()) {
                ++survived;
                CHECK(all_pass(check_variety(matched_sum_table(mutated), c.variant)));
            }
        }
        INFO("survivors: " << survived);
    }
}
