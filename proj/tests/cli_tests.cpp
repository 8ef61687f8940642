#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// Exercises the installed binary end to end. The path to the executable comes
// from the LONGRUN_CLI environment variable, set by the test registration.

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

const char* cli_path() {
    const char* p = std::getenv("LONGRUN_CLI");
    REQUIRE_MESSAGE(p != nullptr, "LONGRUN_CLI must point at the binary");
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const char* kAlt = R"('{"type":"ep","cycle":["1","0"]}')";
const char* kAltShift = R"('{"type":"ep","cycle":["0","1"]}')";

}  // namespace

TEST_CASE("eval reports exact means and bound functionals") {
    RunResult r = run(R"(eval '{"type":"ep","head":["7"],"cycle":["1","2","3"]}' --T 1 --T 4)");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc.at("command") == "eval");
    const json& s = doc.at("streams").at(0);
    CHECK(s.at("kind") == "ep");
    CHECK(s.at("mu_inf") == "2");
    CHECK(s.at("mu_T").at(0).at("value") == "7");
    CHECK(s.at("mu_T").at(1).at("value") == "13/4");
    CHECK(s.at("W").at("W1") == "2");
    CHECK(s.at("W").at("W4") == "2");
    CHECK(s.at("W").at("W2").get<double>() == doctest::Approx(2.0));
}

TEST_CASE("eval accepts generator specs and spec files") {
    RunResult inline_run = run(R"(eval '{"type":"gen","name":"doubling_blocks"}' --horizon 65536)");
    REQUIRE(inline_run.exit_code == 0);
    json doc = json::parse(inline_run.out);
    const json& s = doc.at("streams").at(0);
    CHECK(s.at("kind") == "gen");
    double w1 = s.at("W").at("W1").get<double>();
    double w4 = s.at("W").at("W4").get<double>();
    CHECK(w1 == doctest::Approx(1.0 / 3.0).epsilon(0.05));
    CHECK(w4 == doctest::Approx(2.0 / 3.0).epsilon(0.05));

    std::string path = "cli_test_spec.json";
    {
        std::ofstream f(path);
        f << R"({"type":"ep","cycle":["1","0"]})";
    }
    RunResult file_run = run("eval " + path + " --T 2");
    REQUIRE(file_run.exit_code == 0);
    json fdoc = json::parse(file_run.out);
    CHECK(fdoc.at("streams").at(0).at("mu_inf") == "1/2");
    std::remove(path.c_str());
}

TEST_CASE("eval output formats") {
    RunResult csv = run(std::string("eval ") + kAlt + " --T 2 --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.find("stream,field,key,value") == 0);
    CHECK(csv.out.find("mu_inf,,1/2") != std::string::npos);
    RunResult text = run(std::string("eval ") + kAlt + " --T 2 --format text");
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("mu_inf") != std::string::npos);
}

TEST_CASE("compare resolves the phase-shift pair") {
    RunResult r = run(std::string("compare ") + kAlt + " " + kAltShift);
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc.at("results").at("catching_up").at("verdict") == "StrictlyBetter");
    CHECK(doc.at("results").at("fixed_step").at("verdict") == "Equivalent");
    CHECK(doc.at("results").at("fixed_step").at("witness").at("step") == 2);

    RunResult brute = run(std::string("compare ") + kAlt + " " + kAltShift + " --brute-force");
    REQUIRE(brute.exit_code == 0);
    json bdoc = json::parse(brute.out);
    CHECK(bdoc.at("results").at("brute_force_catching_up").at("verdict") == "StrictlyBetter");
    CHECK(bdoc.at("results").at("brute_force_fixed_step").at("verdict") == "Equivalent");

    // --criterion narrows the oracle to one side
    RunResult one = run(std::string("compare ") + kAlt + " " + kAltShift +
                        " --brute-force --criterion catching_up");
    REQUIRE(one.exit_code == 0);
    json odoc = json::parse(one.out);
    CHECK(odoc.at("results").contains("brute_force_catching_up"));
    CHECK(!odoc.at("results").contains("brute_force_fixed_step"));
}

TEST_CASE("compare rejects generator specs and unknown rules") {
    RunResult gen = run(std::string("compare '{\"type\":\"gen\",\"name\":\"doubling_blocks\"}' ") + kAlt);
    CHECK(gen.exit_code == 2);
    RunResult rule = run(std::string("compare ") + kAlt + " " + kAltShift + " --rule no_such_rule");
    CHECK(rule.exit_code == 2);
    RunResult crit = run(std::string("compare ") + kAlt + " " + kAltShift +
                         " --brute-force --criterion sideways");
    CHECK(crit.exit_code == 2);
}

TEST_CASE("axioms suite passes for the mean order and is byte-stable") {
    std::string args = "axioms --rule cesaro --axiom incremental_equity --axiom uniform_pareto"
                       " --trials 50 --seed 9 --corpus-size 100";
    RunResult a = run(args);
    RunResult b = run(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    json doc = json::parse(a.out);
    for (const json& rep : doc.at("reports")) {
        CHECK(rep.at("failures") == 0);
        CHECK(rep.at("trials") == 50);
    }
}

TEST_CASE("axioms exits 1 when a property fails") {
    RunResult r = run("axioms --rule dictator_t1 --axiom finite_anonymity --trials 100");
    CHECK(r.exit_code == 1);
    json doc = json::parse(r.out);
    CHECK(doc.at("reports").at(0).at("failures").get<int>() > 0);
    CHECK(!doc.at("reports").at(0).at("witnesses").empty());
}

TEST_CASE("both named axiom suites succeed") {
    RunResult t1 = run("axioms --suite theorem1 --trials 60 --corpus-size 120");
    REQUIRE(t1.exit_code == 0);
    json tdoc = json::parse(t1.out);
    CHECK(tdoc.at("reports").size() == 14);
    CHECK(tdoc.at("ok") == true);

    RunResult ab = run("axioms --suite appendixB --trials 60 --corpus-size 120");
    REQUIRE(ab.exit_code == 0);
    json adoc = json::parse(ab.out);
    CHECK(adoc.at("ok") == true);
    bool all_ok = true;
    for (const json& e : adoc.at("expectations")) all_ok = all_ok && e.at("ok").get<bool>();
    CHECK(all_ok);
}

TEST_CASE("identity-check validates the discounted identities") {
    RunResult r = run(std::string("identity-check ") + kAlt);
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    bool all_ok = true;
    for (const json& c : doc.at("checks")) all_ok = all_ok && c.at("ok").get<bool>();
    CHECK(all_ok);
}

TEST_CASE("search finds and reports counterexamples deterministically") {
    std::string args = "search --property fixC_strictly_weaker_than_C --seed 1 --budget 2000";
    RunResult a = run(args);
    RunResult b = run(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    json doc = json::parse(a.out);
    CHECK(doc.at("result").at("found") == true);
    CHECK(!doc.at("result").at("streams").empty());

    // the implication property expects no witness, so "not found" is success
    RunResult none = run("search --property C_implies_fixC_violation --seed 1 --budget 200");
    CHECK(none.exit_code == 0);
    // a findable property that stays unfound within the budget exits 1
    RunResult miss = run("search --property C_incomparable_pair --seed 1 --budget 1");
    CHECK(miss.exit_code == 1);
}

TEST_CASE("malformed input and bad flags exit 2") {
    CHECK(run("eval '{\"type\":\"ep\"}'").exit_code == 2);
    CHECK(run("eval no_such_file.json").exit_code == 2);
    CHECK(run("eval '{\"type\":\"ep\",\"cycle\":[\"1/0\"]}'").exit_code == 2);
    CHECK(run(std::string("eval ") + kAlt + " --delta-grid 9..3").exit_code == 2);
    CHECK(run("axioms --axiom no_such_axiom --trials 5").exit_code == 2);
    CHECK(run("search --property bogus --budget 5").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("compare " + std::string(kAlt)).exit_code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("eval --help").exit_code == 0);
}
