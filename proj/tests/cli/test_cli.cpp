// Drives the gdet binary (path in $GDET_CLI) through its public command
// surface and checks envelopes, payloads and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using json = nlohmann::json;

namespace {

struct Result {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("GDET_CLI");
    REQUIRE_MESSAGE(p != nullptr, "GDET_CLI must point at the gdet binary");
    return p;
}

Result run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Result r;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json payload_of(const Result& r) {
    const json env = json::parse(r.out);
    CHECK(env.at("schema") == 1);
    CHECK(env.at("ok") == true);
    CHECK(!env.contains("error"));
    return env.at("payload");
}

json error_of(const Result& r) {
    const json env = json::parse(r.out);
    CHECK(env.at("schema") == 1);
    CHECK(env.at("ok") == false);
    CHECK(!env.contains("payload"));
    return env.at("error");
}

}  // namespace

TEST_CASE("eval computes value, transform and factor determinants") {
    const auto r = run("eval 2 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 --json");
    CHECK(r.exit_code == 0);
    const json p = payload_of(r);
    CHECK(p.at("value") == "17");
    CHECK(p.at("b") == json::array({"5", "4", "4", "4"}));
    CHECK(p.at("c") == json::array({"1", "0", "0", "0"}));
    CHECK(p.at("d4_factors") == json::array({"17", "1", "1", "1"}));
}

TEST_CASE("eval --oracle reports agreement") {
    const auto r = run("eval 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 --oracle --json");
    CHECK(r.exit_code == 0);
    const json p = payload_of(r);
    CHECK(p.at("value") == "1");
    CHECK(p.at("oracle_value") == "1");
    CHECK(p.at("agree") == true);
}

TEST_CASE("eval arity and integer validation") {
    CHECK(run("eval 1 2 3 --json").exit_code == 64);
    const auto r = run("eval 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 zebra --json");
    CHECK(r.exit_code == 64);
    CHECK(error_of(r).at("code") == "usage");
}

TEST_CASE("classify member and non-member exit codes") {
    auto r = run("classify 17 --json");
    CHECK(r.exit_code == 0);
    auto p = payload_of(r);
    CHECK(p.at("member") == true);
    CHECK(p.at("family") == "Odd16m1");
    CHECK(p.at("params").at("m") == "1");

    r = run("classify 458752 --json");  // 2^16 * 7
    CHECK(r.exit_code == 1);
    p = payload_of(r);
    CHECK(p.at("member") == false);
    CHECK(p.at("family") == "NonMember");
    const std::string reason = p.at("reason");
    CHECK(reason.find("(8k-3)(8l+3)") != std::string::npos);

    r = run("classify --group C16 3 --json");
    CHECK(r.exit_code == 0);
    CHECK(payload_of(r).at("member") == true);

    CHECK(run("classify --group Q8 3").exit_code == 64);
    CHECK(run("classify twelve").exit_code == 64);
}

TEST_CASE("power-of-two shorthand is accepted everywhere integers are") {
    auto r = run("classify 2^16*7 --json");
    CHECK(r.exit_code == 1);
    CHECK(payload_of(r).at("value") == "458752");

    r = run("classify --json -- -2^16*3");
    CHECK(payload_of(r).at("value") == "-196608");
    CHECK(r.exit_code == 0);  // -3 = 4*(-1) + 1 lands in the 2^16 (4m+1) family

    r = run("classify 2^18 --json");
    CHECK(r.exit_code == 0);
    CHECK(payload_of(r).at("value") == "262144");
}

TEST_CASE("witness emits a verified coefficient vector") {
    auto r = run("witness 17 --json");
    CHECK(r.exit_code == 0);
    auto p = payload_of(r);
    CHECK(p.at("verified") == true);
    CHECK(p.at("coeffs") ==
          json::array({"2", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1",
                       "1", "1"}));

    r = run("witness 983040 --json");  // 2^16 * 15 through the product construction
    CHECK(r.exit_code == 0);
    CHECK(payload_of(r).at("family") == "E16_A");

    r = run("witness 9 --json");
    CHECK(r.exit_code == 1);
    const json e = error_of(r);
    CHECK(e.at("code") == "non_member");
    CHECK(std::string(e.at("message")).find("(mod 16)") != std::string::npos);
}

TEST_CASE("witness --emit-file writes a JSON-lines record") {
    const std::string path = "/tmp/gdet_witness_test.jsonl";
    std::remove(path.c_str());
    const auto r = run("witness 17 --emit-file " + path + " --json");
    CHECK(r.exit_code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string line;
    REQUIRE(std::getline(f, line));
    const json rec = json::parse(line);
    CHECK(rec.at("target") == "17");
    CHECK(rec.at("verified") == true);
    CHECK_FALSE(std::getline(f, line));  // exactly one record
    std::remove(path.c_str());
}

TEST_CASE("verify suites run and aggregate exit status") {
    auto r = run("verify lemma32 --json");
    CHECK(r.exit_code == 0);
    const json reports = payload_of(r).at("reports");
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].at("lemma") == "lemma32");
    CHECK(reports[0].at("checked") == 131072);
    CHECK(reports[0].at("passed") == true);

    r = run("verify remarks --bound 2 --json");
    CHECK(r.exit_code == 0);

    CHECK(run("verify nonsense --json").exit_code == 64);
}

TEST_CASE("verify chain respects --allow-inconclusive") {
    // bound 16 is too small for the topmost strictness witness
    auto r = run("verify chain --samples 20 --bound 16 --seed 7 --json");
    CHECK(r.exit_code == 1);
    r = run("verify chain --samples 20 --bound 16 --seed 7 --allow-inconclusive --json");
    CHECK(r.exit_code == 0);
    const json rep = payload_of(r).at("reports")[0];
    CHECK(rep.at("passed") == true);
    CHECK(rep.at("inconclusive") == true);
}

TEST_CASE("search exhaustive01 summary") {
    const auto r = run("search --mode exhaustive01 --json");
    CHECK(r.exit_code == 0);
    const json p = payload_of(r);
    CHECK(p.at("vectors_tested") == 65536);
    CHECK(p.at("values_seen") == 38);
    CHECK(p.at("violation_count") == 0);
}

TEST_CASE("search random is reproducible from the seed") {
    const auto a = run("search --mode random --budget 5000 --entry-bound 3 --seed 42 --json");
    const auto b = run("search --mode random --budget 5000 --entry-bound 3 --seed 42 "
                       "--threads 2 --json");
    CHECK(a.exit_code == 0);
    CHECK(payload_of(a).at("values_seen") == payload_of(b).at("values_seen"));
    CHECK(run("search --budget 0 --json").exit_code == 64);
    CHECK(run("search --mode sideways --json").exit_code == 64);
}

TEST_CASE("text and JSON envelopes carry the same data") {
    const auto text = run("classify 17");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("member: true") != std::string::npos);
    CHECK(text.out.find("family: Odd16m1") != std::string::npos);
}
