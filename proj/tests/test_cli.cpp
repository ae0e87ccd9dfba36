#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(BIHOM_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) {
    return std::string(BIHOM_FIXTURE_DIR) + "/" + name;
}

std::filesystem::path tmpdir() {
    auto d = std::filesystem::temp_directory_path() / "bihom-cli-tests";
    std::filesystem::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("exit codes: 0 pass, 1 fail, 2 usage or parse error") {
    CHECK(run("check " + fixture("K1.alg")).exit_code == 0);
    CHECK(run("check " + fixture("E.alg")).exit_code == 1);
    CHECK(run("check " + fixture("nonexistent.alg")).exit_code == 2);
    CHECK(run("check").exit_code > 1);  // usage error from the parser
    CHECK(run("check " + fixture("K1.alg") + " --variety no-such-tag").exit_code == 2);
}

TEST_CASE("the diagnostic model reports the commutation failure in JSON") {
    RunResult r = run("check " + fixture("E.alg") + " --json");
    CHECK(r.exit_code == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schemaVersion"] == 1);
    CHECK(j["allPass"] == false);
    CHECK(j["transcription"] == "as_printed");
    bool found = false;
    for (const auto& sec : j["sections"])
        for (const auto& c : sec["checks"])
            if (c["identity"] == "maps_commute") {
                CHECK(c["status"] == "fail");
                REQUIRE(!c["failures"].empty());
                CHECK(c["failures"][0]["tuple"] == nlohmann::json::array({2}));
                CHECK(c["failures"][0]["residual"] ==
                      nlohmann::json::array({"2", "0"}));
                found = true;
            }
    CHECK(found);
}

TEST_CASE("byte-determinism of reports and construction outputs") {
    std::string cmdline = "check " + fixture("E.alg") + " --json";
    CHECK(run(cmdline).out == run(cmdline).out);
    auto out1 = tmpdir() / "t1.alg";
    auto out2 = tmpdir() / "t2.alg";
    std::string args = "construct rb-split --model " + fixture("K1.alg") + " --op " +
                       fixture("Rneg2.op");
    CHECK(run(args + " -o " + out1.string()).exit_code == 0);
    CHECK(run(args + " -o " + out2.string()).exit_code == 0);
    std::ifstream f1(out1), f2(out2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(!s1.str().empty());
}

TEST_CASE("construction chains through files with verification") {
    auto trid = tmpdir() / "T.alg";
    RunResult r1 = run("construct rb-split --model " + fixture("K1.alg") + " --op " +
                       fixture("Rneg2.op") + " -o " + trid.string() + " --verify");
    CHECK(r1.exit_code == 0);
    CHECK(run("check " + trid.string()).exit_code == 0);
    auto dend = tmpdir() / "Dend.alg";
    CHECK(run("construct to-dend --model " + trid.string() + " -o " + dend.string() +
              " --verify").exit_code == 0);
    auto assoc = tmpdir() / "Assoc.alg";
    CHECK(run("construct to-assoc --model " + trid.string() + " -o " + assoc.string() +
              " --verify").exit_code == 0);
    CHECK(run("check " + assoc.string()).exit_code == 0);
}

TEST_CASE("derived constructions of both types coincide at k = 1") {
    auto d1 = tmpdir() / "d1.alg";
    auto d2 = tmpdir() / "d2.alg";
    CHECK(run("construct derived --model " + fixture("N2s.alg") + " -k 1 --type 1 -o " +
              d1.string() + " --verify").exit_code == 0);
    CHECK(run("construct derived --model " + fixture("N2s.alg") + " -k 1 --type 2 -o " +
              d2.string() + " --verify").exit_code == 0);
    std::ifstream f1(d1), f2(d2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
}

TEST_CASE("twist with non-commuting maps exits 2 and names the witness") {
    // shear and scaling do not commute on the zero algebra
    auto zt = tmpdir() / "twists_bad.alg";
    {
        std::ofstream out(zt);
        out << "operator alphap { dim 2; kind endomorphism; map op = [[1,1],[0,1]]; }\n"
               "operator betap { dim 2; kind endomorphism; map op = [[1,0],[0,2]]; }\n";
    }
    RunResult r = run("construct twist --model " + fixture("Z2.alg") + " --twists " + zt.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("do not commute") != std::string::npos);
    CHECK(r.out.find("witness") != std::string::npos);
}

TEST_CASE("twist along the shipped scaling endomorphisms verifies") {
    RunResult r = run("construct twist --model " + fixture("N2.alg") + " --twists " +
                      fixture("sigma2.alg") + " -p 1 --verify -o -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("2 e2") != std::string::npos);
}

TEST_CASE("random mode is seeded and reproducible from the command line") {
    std::string args = "check " + fixture("E.alg") + " --random 40 --seed 9 --json";
    RunResult r1 = run(args);
    RunResult r2 = run(args);
    CHECK(r1.exit_code == 1);
    CHECK(r1.out == r2.out);
    auto j = nlohmann::json::parse(r1.out);
    bool saw_random = false;
    for (const auto& sec : j["sections"])
        for (const auto& c : sec["checks"]) {
            CHECK(c["mode"] == "random");
            CHECK(c["tuplesChecked"] == 40);
            saw_random = true;
        }
    CHECK(saw_random);
}

TEST_CASE("print-set round trips through the tool and list-sets shows the ledger") {
    RunResult sets = run("list-sets");
    CHECK(sets.exit_code == 0);
    CHECK(sets.out.find("bihom-tridendriform  identities=13") != std::string::npos);
    CHECK(sets.out.find("matched-pair-of-bihom-tridendriform  identities=42") !=
          std::string::npos);
    RunResult ps = run("print-set rota-baxter");
    CHECK(ps.exit_code == 0);
    CHECK(ps.out.find("param lambda") != std::string::npos);
    CHECK(run("print-set no-such-set").exit_code == 2);
}

TEST_CASE("checking against a user identity file") {
    auto idn = tmpdir() / "comm.idn";
    {
        std::ofstream out(idn);
        out << "set commutativity\nsort A algebra\nmap alpha : A -> A\nmap beta : A -> A\n"
               "prod mul : A, A -> A\n"
               "identity comm over A(x, y): mul(x, y) - mul(y, x) = 0\n";
    }
    CHECK(run("check " + fixture("N2.alg") + " --identities " + idn.string()).exit_code == 0);
    // the noncommutative model fails the same user set
    CHECK(run("check " + fixture("P2ab.alg") + " --identities " + idn.string()).exit_code == 1);
}

TEST_CASE("corrected transcriptions are selectable and reported") {
    RunResult r = run("check " + fixture("D2ab.alg") + " --json --corrected");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["transcription"] == "corrected");
}

TEST_CASE("bimodule and matched model files check and construct end to end") {
    std::string corpus = BIHOM_CORPUS_DIR;
    CHECK(run("check " + corpus + "/N2_regular.bim").exit_code == 0);
    CHECK(run("check " + corpus + "/K1_pair.mat").exit_code == 0);
    auto semi = tmpdir() / "semi.alg";
    CHECK(run("construct semidirect --model " + corpus + "/N2_regular.bim -o " + semi.string() +
              " --verify").exit_code == 0);
    auto msum = tmpdir() / "msum.alg";
    CHECK(run("construct matched-sum --model " + corpus + "/K1_pair.mat -o " + msum.string() +
              " --verify").exit_code == 0);
    auto dual = tmpdir() / "dual.bim";
    CHECK(run("construct dual-bimodule --model " + corpus + "/N2_regular.bim -o " +
              dual.string() + " --verify").exit_code == 0);
    CHECK(run("check " + dual.string()).exit_code == 0);
    auto twisted = tmpdir() / "twisted.bim";
    CHECK(run("construct twist-bimodule --model " + corpus + "/N2_regular.bim --twists " +
              corpus + "/id_twists.alg -o " + twisted.string() + " --verify").exit_code == 0);
    CHECK(run("check " + twisted.string()).exit_code == 0);
}

TEST_CASE("a model with nothing checkable is a usage error") {
    CHECK(run("check " + fixture("Rneg2.op")).exit_code == 2);
}
