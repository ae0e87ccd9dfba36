// Command-line front end: check structure-constant models against identity
// sets, and run the construction toolbox over model files.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bihom/idnparse.hpp"
#include "bihom/modelfile.hpp"
#include "bihom/modmatch.hpp"
#include "bihom/report.hpp"

using namespace bihom;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

struct CheckArgs {
    std::string model;
    std::string variety_tag;
    std::string identities_path;
    bool corrected = false;
    bool json = false;
    long random_samples = 0;
    std::uint64_t seed = 1;
    int failure_cap = 16;
};

std::vector<CheckReport> run_set(const IdentitySet& set, const ModelBinding& binding,
                                 const CheckArgs& args) {
    CheckOptions opts;
    opts.failure_cap = args.failure_cap;
    if (args.random_samples > 0)
        return spot_check(set, binding, args.random_samples, args.seed, opts);
    return check_identities(set, binding, opts);
}

int cmd_check(const CheckArgs& args) {
    std::string text = slurp(args.model);
    ParsedModel model = parse_model_file(text);
    Transcription variant = args.corrected ? Transcription::Corrected : Transcription::AsPrinted;
    ReportDocument doc;
    doc.input_name = args.model;
    doc.input_digest = content_digest(text);
    doc.variant = args.corrected ? "corrected" : "as_printed";
    CheckOptions opts;
    opts.failure_cap = args.failure_cap;

    std::optional<IdentitySet> user_set;
    if (!args.identities_path.empty())
        user_set = parse_identity_file(slurp(args.identities_path));

    for (const auto& a : model.algebras) {
        ReportSection sec;
        if (user_set) {
            sec.title = "algebra " + a.name + " against " + user_set->name;
            sec.reports = run_set(*user_set, bind_algebra(*user_set, a), args);
        } else {
            std::string tag = args.variety_tag.empty() ? variety_name(a.variety) : args.variety_tag;
            const IdentitySet& set = builtin_identity_set(tag, variant);
            sec.title = "algebra " + a.name + " against " + tag;
            sec.reports = run_set(set, bind_algebra(set, a), args);
        }
        doc.sections.push_back(std::move(sec));
    }
    for (const auto& block : model.operators) {
        if (block.on.empty()) continue;  // unattached operators have no check here
        OperatorPresentation op = model.make_operator(block, nullptr);
        ReportSection sec;
        sec.title = "operator " + block.name + " (" + operator_kind_name(block.kind) + " on " +
                    block.on + ")";
        sec.reports = check_operator(op, opts);
        doc.sections.push_back(std::move(sec));
    }
    for (const auto& m : model.bimodules) {
        ReportSection sec;
        sec.title = "bimodule " + m.name + " of " + m.base.name;
        sec.reports = check_bimodule(m, variant, opts);
        doc.sections.push_back(std::move(sec));
    }
    for (const auto& p : model.matched) {
        MatchedPairReport rep = check_matched_pair(p, variant, opts);
        auto add = [&](const std::string& part, std::vector<CheckReport> r) {
            doc.sections.push_back({"matched " + p.name + ": " + part, std::move(r)});
        };
        add("constituent " + p.a.name, std::move(rep.constituent_a));
        add("constituent " + p.b.name, std::move(rep.constituent_b));
        add("bimodule A-on-B", std::move(rep.bimodule_a_on_b));
        add("bimodule B-on-A", std::move(rep.bimodule_b_on_a));
        add("cross equations", std::move(rep.cross));
    }
    if (doc.sections.empty())
        throw Error("'" + args.model +
                    "' contains nothing checkable (operator blocks need an 'on' reference)");
    std::cout << (args.json ? render_json(doc) : render_text(doc));
    return doc.all_pass() ? kExitPass : kExitFail;
}

const AlgebraPresentation& first_algebra(const ParsedModel& m, const std::string& path) {
    if (m.algebras.empty()) throw Error("'" + path + "' declares no algebra block");
    return m.algebras.front();
}

const OperatorBlock& first_operator(const ParsedModel& m, const std::string& path) {
    if (m.operators.empty()) throw Error("'" + path + "' declares no operator block");
    return m.operators.front();
}

const Matrix& named_op(const ParsedModel& m, const std::string& name, int dim,
                       const std::string& path) {
    const OperatorBlock* b = m.find_operator(name);
    if (!b) throw Error("'" + path + "' declares no operator block named '" + name + "'");
    if (b->dim != dim) throw Error("operator '" + name + "' has the wrong dimension");
    return b->op;
}

int verify_and_write(const AlgebraPresentation& out, const std::string& out_path, bool verify,
                     Transcription variant) {
    emit(out_path, print_algebra(out));
    if (!verify) return kExitPass;
    auto reports = check_variety(out, variant);
    for (const auto& r : reports)
        if (!r.pass)
            std::cerr << "verify: " << variety_name(out.variety) << "/" << r.identity
                      << " fails\n";
    return all_pass(reports) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker and construction toolbox for twisted structure-constant algebras"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "check a model file against identity sets");
    check->add_option("model", check_args.model, "model file")->required();
    check->add_option("--variety", check_args.variety_tag,
                      "override the identity-set tag for algebra blocks");
    check->add_option("--identities", check_args.identities_path,
                      "check algebra blocks against a user identity file");
    check->add_flag("--corrected", check_args.corrected,
                    "use corrected transcriptions where they exist");
    check->add_flag("--json", check_args.json, "machine-readable report");
    check->add_option("--random", check_args.random_samples,
                      "sample this many random basis tuples instead of sweeping");
    check->add_option("--seed", check_args.seed, "seed for --random");
    check->add_option("--failure-cap", check_args.failure_cap, "witnesses kept per identity");

    auto* print_set = app.add_subcommand("print-set", "print a built-in identity set");
    std::string print_tag;
    bool print_corrected = false;
    print_set->add_option("tag", print_tag, "identity-set tag")->required();
    print_set->add_flag("--corrected", print_corrected);

    auto* list_sets = app.add_subcommand("list-sets", "list built-in identity sets");

    auto* construct = app.add_subcommand("construct", "build new presentations from models");
    construct->require_subcommand(1);
    std::string in_model, in_with, in_op, in_twists, in_gammas, out_path;
    bool verify = false, corrected = false;
    unsigned long power = 1, derive_k = 0;
    int derive_type = 1;
    std::string weight_text;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--model", in_model, "primary input model")->required();
        sub->add_option("-o,--out", out_path, "output path (default stdout)");
        sub->add_flag("--verify", verify, "re-check the output and fold into the exit code");
        sub->add_flag("--corrected", corrected, "use corrected transcriptions for checks");
    };
    auto* dsum = construct->add_subcommand("dsum", "direct sum of two algebras");
    add_common(dsum);
    dsum->add_option("--with", in_with, "second algebra model")->required();
    auto* tensor = construct->add_subcommand("tensor", "tensor product of two algebras");
    add_common(tensor);
    tensor->add_option("--with", in_with, "second algebra model")->required();
    auto* twist = construct->add_subcommand("twist", "twist along commuting endomorphisms");
    add_common(twist);
    twist->add_option("--twists", in_twists, "model with operator blocks 'alphap' and 'betap'")
        ->required();
    twist->add_option("-p,--power", power, "power of the twisting maps");
    auto* derived = construct->add_subcommand("derived", "derived algebra of type 1 or 2");
    add_common(derived);
    derived->add_option("-k", derive_k, "derivation index")->required();
    derived->add_option("--type", derive_type, "1 or 2")->required();
    auto* ctwist =
        construct->add_subcommand("centroid-twist", "twist a Rota-Baxter structure by centroids");
    add_common(ctwist);
    ctwist->add_option("--op", in_op, "rota-baxter operator model")->required();
    ctwist->add_option("--gammas", in_gammas,
                       "model with centroid operator blocks 'gamma1' and 'gamma2'")
        ->required();
    auto* rbsplit =
        construct->add_subcommand("rb-split", "split a Rota-Baxter structure into tridendriform");
    add_common(rbsplit);
    rbsplit->add_option("--op", in_op, "rota-baxter operator model")->required();
    rbsplit->add_option("--weight", weight_text, "override the operator's weight");
    auto* avg =
        construct->add_subcommand("avg-dialgebra", "dialgebra from averaging twisting maps");
    add_common(avg);
    auto* todend = construct->add_subcommand("to-dend", "tridendriform to dendriform");
    add_common(todend);
    auto* toassoc = construct->add_subcommand("to-assoc", "sum the products to one associative");
    add_common(toassoc);
    auto* semi = construct->add_subcommand("semidirect", "split null extension of a bimodule");
    add_common(semi);
    auto* msum = construct->add_subcommand("matched-sum", "sum algebra of a matched pair");
    add_common(msum);
    auto* dualb = construct->add_subcommand("dual-bimodule", "transpose a bimodule");
    add_common(dualb);
    auto* twistb =
        construct->add_subcommand("twist-bimodule", "twist a bimodule along commuting maps");
    add_common(twistb);
    twistb->add_option("--twists", in_twists,
                       "model with operator blocks alpha1p, alpha2p, beta1p, beta2p")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return cmd_check(check_args);
        if (*print_set) {
            std::cout << print_identity_set(builtin_identity_set(
                print_tag, print_corrected ? Transcription::Corrected : Transcription::AsPrinted));
            return kExitPass;
        }
        if (*list_sets) {
            for (const auto& entry : coverage_ledger())
                std::cout << entry.tag << "  identities=" << entry.count
                          << (has_corrected_variant(entry.tag) ? "  [has corrected variant]" : "")
                          << "\n";
            return kExitPass;
        }

        Transcription variant = corrected ? Transcription::Corrected : Transcription::AsPrinted;
        ParsedModel model = parse_model_file(slurp(in_model));
        if (*dsum || *tensor) {
            const AlgebraPresentation& a = first_algebra(model, in_model);
            ParsedModel other = parse_model_file(slurp(in_with));
            const AlgebraPresentation& b = first_algebra(other, in_with);
            AlgebraPresentation out = *dsum ? direct_sum(a, b) : tensor_product(a, b);
            return verify_and_write(out, out_path, verify, variant);
        }
        if (*twist) {
            const AlgebraPresentation& a = first_algebra(model, in_model);
            ParsedModel tw = parse_model_file(slurp(in_twists));
            const Matrix& ap = named_op(tw, "alphap", a.dim, in_twists);
            const Matrix& bp = named_op(tw, "betap", a.dim, in_twists);
            return verify_and_write(yau_twist(a, ap, bp, power), out_path, verify, variant);
        }
        if (*derived) {
            const AlgebraPresentation& a = first_algebra(model, in_model);
            return verify_and_write(derived_algebra(a, derive_k, derive_type), out_path, verify,
                                    variant);
        }
        if (*ctwist) {
            const AlgebraPresentation& a = first_algebra(model, in_model);
            ParsedModel opm = parse_model_file(slurp(in_op));
            OperatorPresentation rb = opm.make_operator(first_operator(opm, in_op), &a);
            if (rb.kind != OperatorKind::RotaBaxter)
                throw Error("centroid-twist expects a rota-baxter operator");
            ParsedModel gm = parse_model_file(slurp(in_gammas));
            auto [out, rb_out] = centroid_twist(rb, named_op(gm, "gamma1", a.dim, in_gammas),
                                                named_op(gm, "gamma2", a.dim, in_gammas));
            emit(out_path, print_algebra(out) + print_operator(to_block(rb_out, true)));
            if (!verify) return kExitPass;
            return all_pass(check_operator(rb_out)) ? kExitPass : kExitFail;
        }
        if (*rbsplit) {
            const AlgebraPresentation& a = first_algebra(model, in_model);
            ParsedModel opm = parse_model_file(slurp(in_op));
            OperatorPresentation rb = opm.make_operator(first_operator(opm, in_op), &a);
            if (!weight_text.empty()) rb.weight = Scalar::parse(weight_text);
            rb.kind = OperatorKind::RotaBaxter;
            return verify_and_write(rb_tridendriform(rb), out_path, verify, variant);
        }
        if (*avg) {
            const AlgebraPresentation& a = first_algebra(model, in_model);
            return verify_and_write(averaging_dialgebra(a), out_path, verify, variant);
        }
        if (*todend) {
            const AlgebraPresentation& a = first_algebra(model, in_model);
            return verify_and_write(tridend_to_dend(a), out_path, verify, variant);
        }
        if (*toassoc) {
            const AlgebraPresentation& a = first_algebra(model, in_model);
            return verify_and_write(sum_to_associative(a), out_path, verify, variant);
        }
        if (*semi) {
            if (model.bimodules.empty()) throw Error("'" + in_model + "' declares no bimodule");
            SemidirectResult s = semidirect(model.bimodules.front(), variant);
            return verify_and_write(s.algebra, out_path, verify, variant);
        }
        if (*msum) {
            if (model.matched.empty()) throw Error("'" + in_model + "' declares no matched pair");
            MatchedSumResult s = matched_sum(model.matched.front(), variant);
            return verify_and_write(s.algebra, out_path, verify, variant);
        }
        if (*dualb) {
            if (model.bimodules.empty()) throw Error("'" + in_model + "' declares no bimodule");
            BimodulePresentation out = dual_bimodule(model.bimodules.front(), variant);
            emit(out_path, print_bimodule(out));
            if (!verify) return kExitPass;
            return all_pass(check_bimodule(out, variant)) ? kExitPass : kExitFail;
        }
        if (*twistb) {
            if (model.bimodules.empty()) throw Error("'" + in_model + "' declares no bimodule");
            const BimodulePresentation& m = model.bimodules.front();
            ParsedModel tw = parse_model_file(slurp(in_twists));
            TwistedBimodule out =
                twist_bimodule(m, named_op(tw, "alpha1p", m.base.dim, in_twists),
                               named_op(tw, "alpha2p", m.base.dim, in_twists),
                               named_op(tw, "beta1p", m.dim_v, in_twists),
                               named_op(tw, "beta2p", m.dim_v, in_twists));
            emit(out_path, print_bimodule(out.module));
            if (!verify) return kExitPass;
            return all_pass(check_bimodule(out.module, variant)) ? kExitPass : kExitFail;
        }
        throw Error("no subcommand dispatched");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
