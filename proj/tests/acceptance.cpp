// Acceptance suite: end-to-end criteria for the whole engine, one line per
// criterion. Exit status is nonzero when any criterion fails. Every
// tolerance here is exact equality; there is no floating point anywhere.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "bihom/idnparse.hpp"
#include "bihom/modmatch.hpp"
#include "bihom/report.hpp"

using namespace bihom;
using namespace bihom::fixtures;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void fail(const std::string& why) {
        pass = false;
        notes.push_back(why);
    }
    void require(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

// (set, binding) pairs that passed exhaustively; criterion 10 revisits them
// with random rational assignments.
struct PassedCheck {
    const IdentitySet* set;
    ModelBinding binding;
};
std::vector<PassedCheck> g_passed;

bool run_and_record(const IdentitySet& set, ModelBinding binding) {
    bool ok = all_pass(check_identities(set, binding));
    if (ok) g_passed.push_back({&set, std::move(binding)});
    return ok;
}

bool variety_pass(const AlgebraPresentation& a,
                  Transcription variant = Transcription::AsPrinted) {
    const IdentitySet& set = builtin_identity_set(variety_name(a.variety), variant);
    return run_and_record(set, bind_algebra(set, a));
}

bool bimodule_pass(const BimodulePresentation& m,
                   Transcription variant = Transcription::AsPrinted) {
    const IdentitySet& set =
        builtin_identity_set("bimodule-of-" + variety_name(m.base.variety), variant);
    return run_and_record(set, bind_bimodule(set, m));
}

bool operator_pass(const OperatorPresentation& op) {
    bool ok = all_pass(check_operator(op));
    if (ok && op.kind != OperatorKind::Endomorphism) {
        const IdentitySet& set = builtin_identity_set(operator_kind_name(op.kind));
        std::optional<Scalar> w;
        if (op.kind == OperatorKind::RotaBaxter) w = op.weight;
        for (int p = 0; p < int(op.base.products.size()); ++p)
            g_passed.push_back({&set, bind_operator(set, op.base, op.op, p, w)});
    }
    return ok;
}

bool matched_pass(const MatchedPairPresentation& p,
                  Transcription variant = Transcription::AsPrinted) {
    MatchedPairReport rep = check_matched_pair(p, variant);
    if (rep.pass()) {
        const IdentitySet& cross =
            builtin_identity_set("matched-pair-of-" + variety_name(p.a.variety), variant);
        g_passed.push_back({&cross, bind_matched(cross, p)});
    }
    return rep.pass();
}

// --- criteria -------------------------------------------------------------

Outcome criterion1() {
    Outcome o;
    for (const auto& entry : coverage_ledger()) {
        try {
            const IdentitySet& set = builtin_identity_set(entry.tag);
            wellform_set(set);
            if (int(set.identities.size()) != entry.count)
                o.fail(std::string(entry.tag) + ": " + std::to_string(set.identities.size()) +
                       " identities, ledger says " + std::to_string(entry.count));
            IdentitySet reparsed = parse_identity_file(print_identity_set(set));
            if (!(reparsed == set)) o.fail(std::string(entry.tag) + ": round trip unstable");
            if (has_corrected_variant(entry.tag)) {
                const IdentitySet& cor = builtin_identity_set(entry.tag, Transcription::Corrected);
                wellform_set(cor);
                if (!(parse_identity_file(print_identity_set(cor)) == cor))
                    o.fail(std::string(entry.tag) + ": corrected round trip unstable");
            }
        } catch (const Error& e) {
            o.fail(std::string(entry.tag) + ": " + e.what());
        }
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (int d = 1; d <= 4; ++d)
        o.require(variety_pass(Z(d)), "Z" + std::to_string(d));
    o.require(variety_pass(K1()), "K1");
    o.require(variety_pass(N2()), "N2");
    AlgebraPresentation tw = yau_twist(N2(), sigma(Scalar(2)), sigma(Scalar(2)), 1);
    o.require(variety_pass(tw), "twisted N2");
    return o;
}

Outcome criterion3() {
    Outcome o;
    // direct sums
    for (const auto& [a, b] : {std::pair{K1(), N2()}, {P2ab(), N2_sigma(Scalar(2))},
                               {D2ab(), D2()}, {LS2ab(), LS2()}})
        o.require(variety_pass(direct_sum(a, b)), "direct sum " + a.name + "+" + b.name);
    // tensor products
    for (const auto& [a, b] : {std::pair{K1(), N2()}, {N2(), N2()}, {P2ab(), P2ab()},
                               {D2(), D2ab()}})
        o.require(variety_pass(tensor_product(a, b)), "tensor " + a.name + "x" + b.name);
    // twists along commuting endomorphism pairs
    Matrix s2 = sigma(Scalar(2)), s3 = sigma(Scalar(3));
    o.require(variety_pass(yau_twist(N2(), s2, s2, 1)), "twist N2");
    o.require(variety_pass(yau_twist(P2(), s2, s3, 1)), "twist P2");
    o.require(variety_pass(yau_twist(D2(), s2, s3, 2)), "twist D2");
    o.require(variety_pass(yau_twist(LS2(), s2, s3, 1)), "twist LS2");
    // derived algebras, both types, k up to 3
    for (const auto& a : {N2_sigma(Scalar(2)), P2ab(), D2ab(), LS2ab()})
        for (unsigned long k = 0; k <= 3; ++k)
            for (int type : {1, 2})
                o.require(variety_pass(derived_algebra(a, k, type)),
                          "derived " + a.name + " k=" + std::to_string(k) + " type=" +
                              std::to_string(type));
    // centroid twists on instances whose output stays in the variety
    {
        auto [t1, r1] = centroid_twist(RB1(Scalar(1)), Matrix::identity(1), Matrix::identity(1));
        o.require(variety_pass(t1) && operator_pass(r1), "centroid twist on the unital line");
        auto [t2, r2] = centroid_twist(RB_P2(P2ab(), Scalar(2)), Matrix::identity(2),
                                       Matrix::identity(2));
        o.require(variety_pass(t2) && operator_pass(r2), "centroid twist on the twisted model");
        OperatorPresentation rb0;
        rb0.name = "zero";
        rb0.base = N2();
        rb0.op = Matrix(2, 2);
        rb0.kind = OperatorKind::RotaBaxter;
        rb0.weight = Scalar(1);
        Matrix nil(2, 2);
        nil.at(1, 0) = Scalar(1);
        auto [t3, r3] = centroid_twist(rb0, nil, nil);
        o.require(variety_pass(t3) && operator_pass(r3), "centroid twist by a nilpotent map");
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (const Scalar& lam : {Scalar(1), Scalar(2), Scalar(5, 3)}) {
        OperatorPresentation rb = RB1(lam);
        o.require(operator_pass(rb), "weight " + lam.str() + ": operator check");
        AlgebraPresentation t = rb_tridendriform(rb);
        o.require(variety_pass(t), "weight " + lam.str() + ": tridendriform axioms");
        o.require(variety_pass(sum_to_associative(t)), "weight " + lam.str() + ": summed product");
        o.require(variety_pass(tridend_to_dend(t)), "weight " + lam.str() + ": dendriform");
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    AlgebraPresentation a = N2();
    Matrix proj(2, 2);
    proj.at(0, 0) = Scalar(1);  // e1 -> e1, e2 -> 0
    a.beta = proj;
    for (const Matrix* g : {&a.alpha, &a.beta}) {
        OperatorPresentation avg;
        avg.name = "avg";
        avg.base = a;
        avg.op = *g;
        avg.kind = OperatorKind::Averaging;
        o.require(operator_pass(avg), "averaging condition");
    }
    // the construction goes through (its stated precondition holds)...
    AlgebraPresentation d = averaging_dialgebra(a);
    // ...but its output provably violates the structural axioms; this
    // criterion is red by design, and the exact counterexamples are printed
    auto describe = [&](const AlgebraPresentation& alg, const std::string& label) {
        auto reports = check_variety(alg);
        if (all_pass(reports)) {
            const IdentitySet& set = builtin_identity_set(variety_name(alg.variety));
            g_passed.push_back({&set, bind_algebra(set, alg)});
            return;
        }
        for (const auto& r : reports) {
            if (r.pass || r.failures.empty()) continue;
            std::ostringstream os;
            os << label << ": " << r.identity << " fails at (";
            for (size_t i = 0; i < r.failures[0].tuple.size(); ++i)
                os << (i ? ", e" : "e") << r.failures[0].tuple[i];
            os << ") with residual (";
            for (size_t i = 0; i < r.failures[0].residual.size(); ++i)
                os << (i ? ", " : "") << r.failures[0].residual[i].str();
            os << ")";
            o.fail(os.str());
        }
    };
    describe(d, "dialgebra axioms");
    AlgebraPresentation ls = d;
    ls.variety = Variety::LsDialgebra;
    describe(ls, "weaker dialgebra axioms");
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (const auto& base : {K1(), N2()}) {
        BimodulePresentation reg = regular_bimodule(base);
        o.require(bimodule_pass(reg), "regular bimodule of " + base.name);
        o.require(variety_pass(semidirect(reg).algebra), "semidirect of " + base.name);
    }
    AlgebraPresentation d = averaging_dialgebra(N2());
    BimodulePresentation regd = regular_bimodule(d);
    o.require(bimodule_pass(regd), "regular bimodule of the collapsed dialgebra");
    o.require(variety_pass(semidirect(regd).algebra), "semidirect of the collapsed dialgebra");
    for (const auto& base : {K1(), N2()}) {
        SemidirectResult z = semidirect(zero_bimodule(base, 2));
        o.require(z.algebra.same_tables(direct_sum(base, Z(2))),
                  "zero bimodule semidirect equals the direct sum for " + base.name);
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    // degenerate pairs over three varieties
    for (const auto& base : {K1(), N2()}) {
        MatchedPairPresentation p = pair_from_bimodule(regular_bimodule(base));
        o.require(matched_pass(p), "degenerate pair over " + base.name);
        o.require(matched_sum(p).algebra.same_tables(semidirect(regular_bimodule(base)).algebra),
                  "matched sum equals semidirect over " + base.name);
    }
    AlgebraPresentation t = rb_tridendriform(RB1(Scalar(2)));
    MatchedPairPresentation pt = pair_from_bimodule(regular_bimodule(t));
    o.require(matched_pass(pt), "degenerate tridendriform pair");
    o.require(matched_sum(pt).algebra.same_tables(semidirect(regular_bimodule(t)).algebra),
              "tridendriform matched sum equals semidirect");
    // seeded single-entry mutations all flip a check on the unital pair
    MatchedPairPresentation p = pair_from_bimodule(regular_bimodule(K1()));
    Mcg64 rng(20240805);
    for (int trial = 0; trial < 20; ++trial) {
        MatchedPairPresentation mutated = p;
        auto& families = rng.below(2) ? mutated.actions_a_on_b : mutated.actions_b_on_a;
        auto& family = families[rng.below(int(families.size()))];
        auto& mat = family[rng.below(int(family.size()))];
        mat.at(rng.below(mat.rows()), rng.below(mat.cols())) += Scalar(1);
        bool flipped = !check_matched_pair(mutated).pass() ||
                       !all_pass(check_variety(matched_sum_table(mutated)));
        o.require(flipped, "mutation " + std::to_string(trial) + " went undetected");
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    AlgebraPresentation t = rb_tridendriform(RB_P2(P2ab(), Scalar(2)));
    MatchedPairPresentation p = pair_from_bimodule(regular_bimodule(t));
    o.require(matched_pass(p), "tridendriform pair");
    MatchedPairPresentation q = matched_to_associative(p);
    o.require(matched_pass(q), "collapsed associative pair");
    AlgebraPresentation path1 = sum_to_associative(matched_sum(p).algebra);
    AlgebraPresentation path2 = matched_sum(q).algebra;
    o.require(path1.products[0] == path2.products[0] && path1.alpha == path2.alpha &&
                  path1.beta == path2.beta,
              "the two routes to the summed algebra differ");
    return o;
}

Outcome criterion9() {
    Outcome o;
    struct Expectation {
        const char* file;
        std::vector<std::string> failing;
    };
    const std::vector<Expectation> cases = {
        {"E.alg", {"maps_commute", "alpha_mult", "beta_mult", "assoc"}},
        {"E_m1.alg", {"alpha_mult", "beta_mult", "assoc"}},
        {"E_2.alg", {"maps_commute", "alpha_mult", "beta_mult", "assoc"}},
    };
    for (const auto& c : cases) {
        std::string cmd = std::string(BIHOM_CLI_PATH) + " check " + BIHOM_FIXTURE_DIR + "/" +
                          c.file + " --json 2>&1";
        std::array<char, 4096> buf{};
        std::string out;
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) {
            o.fail("cannot spawn the tool");
            continue;
        }
        size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
        int status = WEXITSTATUS(pclose(pipe));
        o.require(status == 1, std::string(c.file) + ": expected exit 1, got " +
                                   std::to_string(status));
        auto j = nlohmann::json::parse(out, nullptr, false);
        if (j.is_discarded()) {
            o.fail(std::string(c.file) + ": unparsable report");
            continue;
        }
        std::vector<std::string> failing;
        for (const auto& sec : j["sections"])
            for (const auto& chk : sec["checks"]) {
                if (chk["status"] == "fail") failing.push_back(chk["identity"]);
                if (std::string(c.file) == "E.alg" && chk["identity"] == "maps_commute") {
                    bool witness =
                        chk["failures"].size() == 1 &&
                        chk["failures"][0]["tuple"] == nlohmann::json::array({2}) &&
                        chk["failures"][0]["residual"] == nlohmann::json::array({"2", "0"});
                    o.require(witness, "commutation witness or residual is off");
                }
            }
        o.require(failing == c.failing, std::string(c.file) + ": failing set differs");
    }
    return o;
}

Outcome criterion10() {
    Outcome o;
    int revisited = 0;
    for (const auto& rec : g_passed) {
        auto bad = random_assignment_failures(*rec.set, rec.binding, 20, 1234567);
        if (!bad.empty())
            o.fail(rec.set->name + "/" + bad.front() + ": nonzero residual off the basis");
        ++revisited;
    }
    o.require(revisited > 50, "too few exhaustive passes were recorded");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"01 identity library complete, well-formed, round-trip stable", 1.0, criterion1},
        {"02 baseline fixtures pass exhaustively", 1.0, criterion2},
        {"03 construction closure across varieties", 10.0, criterion3},
        {"04 Rota-Baxter splitting chain at three weights", 1.0, criterion4},
        {"05 averaging chain on the projection-twisted dual numbers", 1.0, criterion5},
        {"06 bimodules and semidirect extensions", 5.0, criterion6},
        {"07 matched pairs: degenerate agreement and mutation sensitivity", 10.0, criterion7},
        {"08 tridendriform pair collapses to an associative pair", 10.0, criterion8},
        {"09 diagnostic model regression through the CLI", 5.0, criterion9},
        {"10 exhaustive passes extend to random rational assignments", 20.0, criterion10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds)
            o.fail("runtime " + std::to_string(secs) + "s over budget");
        std::printf("%s  %s  (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.label, secs);
        for (const auto& note : o.notes) std::printf("      - %s\n", note.c_str());
        if (!o.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
