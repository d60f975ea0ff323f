#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macgreen/cli.hpp"
#include "macgreen/prover.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace macgreen;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand and bound") {
    const CliRun e = run({"expand", "14", "4"});
    CHECK(e.code == 0);
    CHECK(e.out == "14 = C(5,4) + C(4,3) + C(3,2) + C(2,1)\n");

    CHECK(run({"bound", "--kind", "green", "14", "4"}).out == "4\n");
    CHECK(run({"bound", "--kind", "macaulay", "9", "2"}).out == "16\n");
    CHECK(run({"bound", "--kind", "h2-lower", "10", "4"}).out == "9\n");
    CHECK(run({"bound", "--kind", "nonsense", "1", "1"}).code == 1);

    const CliRun js = run({"--json", "bound", "--kind", "green", "14", "4"});
    CHECK(json::parse(js.out)["value"] == 4);
}

TEST_CASE("check") {
    const CliRun r = run({"check", "1,10,9,10,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("o-sequence: yes") != std::string::npos);
    CHECK(r.out.find("symmetric: yes") != std::string::npos);

    const CliRun j = run({"--json", "check", "1,2,4"});
    const json parsed = json::parse(j.out);
    CHECK(parsed["o_sequence"] == false);
    CHECK(parsed["codimension"] == 2);

    CHECK(run({"check", "2,3"}).code == 1);  // h_0 != 1
}

TEST_CASE("analyze verdicts and exit codes") {
    const CliRun bad = run({"analyze", "--char", "not-two", "1,10,9,10,1"});
    CHECK(bad.code == 0);
    CHECK(bad.out.find("NOT GORENSTEIN") != std::string::npos);

    const CliRun open = run({"analyze", "--char", "not-two", "1,11,10,11,1"});
    CHECK(open.code == 2);
    CHECK(open.out.find("INCONCLUSIVE") != std::string::npos);

    const CliRun witness =
        run({"analyze", "--char", "not-two", "--witnesses", "1,11,10,11,1"});
    CHECK(witness.out.find("witness: b = ") != std::string::npos);

    CHECK(run({"analyze", "--char", "bogus", "1,3,3,1"}).code == 1);
    CHECK(run({"analyze", "--char", "zero", "1,x,1"}).code == 1);
}

TEST_CASE("analyze writes replayable certificates") {
    const std::string path = "cli_cert_test.json";
    const CliRun r = run({"analyze", "--char", "not-two", "--certificate", path, "1,10,9,10,1"});
    CHECK(r.code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    const Certificate cert = certificate_from_json(buf.str());
    CHECK(cert.verdict == VerdictTag::NotGorenstein);
    CHECK(certificate_replay(cert));
    std::remove(path.c_str());
}

TEST_CASE("analyze family batches") {
    const CliRun fam = run({"analyze", "--family", "socle4", "--m-max", "4"});
    CHECK(fam.code == 0);
    CHECK(fam.out.find("all refuted") != std::string::npos);

    const CliRun uni = run({"--json", "analyze", "--family", "socle5-codim14"});
    const json parsed = json::parse(uni.out);
    CHECK(parsed["all_not_gorenstein"] == true);
    CHECK(parsed["entries"].size() == 13);
}

TEST_CASE("wlp") {
    const CliRun w1 = run({"wlp", "--socle", "gorenstein", "--char", "not-two", "1,3,3,1"});
    CHECK(w1.code == 0);
    CHECK(w1.out.find("FORCED WLP (rule W1)") != std::string::npos);

    const CliRun unknown = run({"wlp", "--socle", "gorenstein", "--char", "exactly:2", "1,3,3,1"});
    CHECK(unknown.code == 2);
    CHECK(unknown.out.find("WLP UNKNOWN") != std::string::npos);

    const CliRun w4 = run({"wlp", "--socle", "level", "--char", "not-two", "1,4,7,11,15"});
    CHECK(w4.code == 0);
    CHECK(w4.out.find("rule W4") != std::string::npos);
}

TEST_CASE("enumerate") {
    const CliRun r = run({"enumerate", "--codim", "10", "--socle-degree", "4", "--char",
                          "not-two"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1,10,9,10,1  not-gorenstein") != std::string::npos);
    CHECK(r.out.find("1,10,10,10,1  inconclusive") != std::string::npos);
    CHECK(r.out.find("below-h2-bound") != std::string::npos);

    CHECK(run({"enumerate", "--codim", "10", "--socle-degree", "4", "--char", "not-two",
               "--budget", "3"})
              .code == 1);
}

TEST_CASE("oracle algebra") {
    const CliRun r = run({"oracle", "algebra", "--ideal", "x^2, y^2, z^2", "--vars", "3",
                          "--char", "2", "--wlp", "--trials", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("hilbert function: 1,3,3,1 (artinian)") != std::string::npos);
    CHECK(r.out.find("socle type: gorenstein") != std::string::npos);
    CHECK(r.out.find("wlp: fails for all sampled forms (exhaustive over F_2: 7 forms)") !=
          std::string::npos);

    const CliRun restr = run({"--json", "oracle", "algebra", "--ideal", "x^2, y^2, z^2",
                              "--vars", "3", "--char", "0", "--restrict", "--seed", "5"});
    const json parsed = json::parse(restr.out);
    CHECK(parsed["gorenstein"] == true);
    for (const auto& row : parsed["restriction"])
        CHECK(row["restricted"].get<long long>() <= row["green_cap"].get<long long>());

    CHECK(run({"oracle", "algebra", "--ideal", "x^2", "--vars", "3", "--char", "4"}).code == 1);
}

TEST_CASE("oracle lex, charp, split") {
    CHECK(run({"oracle", "lex", "9", "2", "5"}).out == "16\n");

    const CliRun charp = run({"oracle", "charp", "-p", "2", "-d", "2", "--seed", "42"});
    CHECK(charp.code == 0);
    CHECK(charp.out.find("codim W = 3 (expected 3)") != std::string::npos);
    CHECK(charp.out.find("all samples match") != std::string::npos);

    const CliRun split = run({"oracle", "split", "--ideal", "x^2,y^2,z^2", "--vars", "3",
                              "--var", "z"});
    CHECK(split.code == 0);
    CHECK(split.out.find("b = 0,1,2,1") != std::string::npos);
    CHECK(split.out.find("c = 1,2,1,0") != std::string::npos);
    CHECK(split.out.find("h = b + c: ok") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
    const std::vector<std::string> cases[] = {
        {"analyze", "--char", "not-two", "--witnesses", "1,11,10,11,1"},
        {"oracle", "algebra", "--ideal", "x^3, y^2, z^2", "--vars", "3", "--char", "13", "--wlp",
         "--trials", "6", "--seed", "99"},
        {"oracle", "charp", "-p", "3", "-d", "3", "--seed", "7"},
    };
    for (const auto& args : cases) {
        const CliRun a = run(args);
        const CliRun b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("json analyze output round-trips through the certificate schema") {
    const CliRun r = run({"--json", "analyze", "--char", "not-two", "1,10,9,10,1"});
    const json parsed = json::parse(r.out);
    CHECK(parsed["verdict"] == "not-gorenstein");
    CHECK(parsed["char"] == "not-two");
    CHECK(parsed["h"] == json::array({1, 10, 9, 10, 1}));
    REQUIRE(parsed.contains("steps"));
    const auto& step = parsed["steps"][0];
    CHECK(step.contains("rule"));
    CHECK(step.contains("degree"));
    CHECK(step.contains("before"));
    CHECK(step.contains("after"));
    CHECK(step.contains("anchor"));
    const Certificate cert = certificate_from_json(r.out);
    CHECK(certificate_replay(cert));
}
