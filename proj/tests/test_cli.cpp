#include <json.hpp>

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef LEXTROP_CLI
#error "LEXTROP_CLI must name the command-line binary"
#endif

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
    std::string input = std::string(LEXTROP_TEST_TMP) + "/cli_input.json";
    std::ofstream(input) << stdin_text;
    std::string cmd = std::string(LEXTROP_CLI) + " " + args + " < " + input + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

const char* kLine = R"j({"1,0": "(0,0)", "0,1": "(0,0)", "0,0": "(0,0)"})j";

} // namespace

TEST_CASE("trop emits three cells for the tropical line") {
    Run r = run("trop", kLine);
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 3);
    CHECK(j[0] == nlohmann::json({"0,1 = (0,0)", "1,0 >= (0,0)"}));
    // deterministic output
    CHECK(run("trop", kLine).out == r.out);
}

TEST_CASE("closure, path and verify") {
    Run c = run("closure", kLine);
    CHECK(c.status == 0);
    CHECK(nlohmann::json::parse(c.out).size() == 3);

    std::string job = std::string(R"j({"polynomial": )j") + kLine + R"j(, "from": ["(0,0)","(3,2)"], "to": ["(0,0)","(3,2)"]})j";
    Run same = run("path", job);
    CHECK(same.status == 0);
    CHECK(nlohmann::json::parse(same.out)["segments"].empty());

    std::string job2 = std::string(R"j({"polynomial": )j") + kLine + R"j(, "from": ["(0,0)","(3,2)"], "to": ["(-1,0)","(-1,0)"]})j";
    Run p = run("path", job2);
    CHECK(p.status == 0);
    auto cert = nlohmann::json::parse(p.out);
    CHECK(cert["segments"].size() == 2);

    nlohmann::json vjob = {{"polynomial", nlohmann::json::parse(kLine)}, {"certificate", cert}};
    Run v = run("verify", vjob.dump());
    CHECK(v.status == 0);
    vjob["certificate"]["to"] = {"(-2,0)", "(-2,0)"};
    Run bad = run("verify", vjob.dump());
    CHECK(bad.status == 3);
    CHECK(nlohmann::json::parse(bad.out)["valid"] == false);
}

TEST_CASE("exit codes") {
    CHECK(run("trop", "{\"1,0\": ").status == 1);
    CHECK(run("trop", R"j({"1,0": "(0,x)"})j").status == 1);
    CHECK(run("frobnicate").status == 1);
    std::string off = std::string(R"j({"polynomial": )j") + kLine + R"j(, "from": ["(1,0)","(2,0)"], "to": ["(0,0)","(0,0)"]})j";
    CHECK(run("path", off).status == 2);
    CHECK(run("trop --in /nonexistent/file.json").status == 1);
}

TEST_CASE("check and skeleton subcommands") {
    Run r = run("check --seed 7 --samples 5");
    CHECK(r.status == 0);
    CHECK(r.out.find("all suites passed") != std::string::npos);
    CHECK(r.out.find("hahn-valuation") != std::string::npos);

    nlohmann::json g = {{"rank", 2},
                        {"vertices", {"A", "B"}},
                        {"edges",
                         {{{"from", "A"}, {"to", "B"}, {"length", "(1,0)"}, {"chart", {{"x", {{"1,0", "(0,0)"}}}}}}}},
                        {"functions", {"x"}},
                        {"evaluate", {{{"edge", 0}, {"param", "(1/2,0)"}}}}};
    Run s = run("skeleton", g.dump());
    CHECK(s.status == 0);
    auto out = nlohmann::json::parse(s.out);
    CHECK(out["injectivity"]["injective"] == true);
    CHECK(out["evaluations"][0]["values"]["x"] == "(1/2,0)");
}

TEST_CASE("render writes SVG") {
    Run r = run("render --bbox -2,-2,2,2", kLine);
    CHECK(r.status == 0);
    CHECK(r.out.rfind("<?xml", 0) == 0);
    CHECK(r.out.find("stroke-dasharray") != std::string::npos);
    CHECK(run("render --bbox 1,1,0,0", kLine).status == 2);
    CHECK(run("render", R"j({"1": "(0)", "0": "(0)"})j").status == 2);
}
