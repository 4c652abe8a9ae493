#include "lextrop/error.hpp"
#include "lextrop/fixtures.hpp"
#include "lextrop/io.hpp"
#include "lextrop/random.hpp"

#include <doctest.h>

using namespace lextrop;
using io::Json;

namespace {

LexValue v2(long a, long b) { return LexValue{Rational(a), Rational(b)}; }

} // namespace

TEST_CASE("tropical line polynomial from JSON") {
    auto p = io::polynomial_from_json(io::parse_json(R"j({"1,0": "(0,0)", "0,1": "(0,0)", "0,0": "(0,0)"})j"));
    CHECK(p == fixtures::tropical_line(2));
    auto wrapped = io::polynomial_from_json(io::parse_json(R"j({"terms": {"1,0": "(0,0)", "0,1": "(0,0)", "0,0": "(0,0)"}})j"));
    CHECK(wrapped == p);
    CHECK(io::to_json(p).dump() == R"j({"0,0":"(0,0)","0,1":"(0,0)","1,0":"(0,0)"})j");
}

TEST_CASE("Hahn coefficients are reduced to their valuations") {
    auto p = io::polynomial_from_json(io::parse_json(R"j({"1,0": "3*t^(0,1)+5*t^(1,0)", "0,1": "0", "0,0": 7})j"), 2);
    CHECK(p.size() == 2);
    CHECK(p.terms().at({1, 0}) == v2(0, 1));
    CHECK(p.terms().at({0, 0}) == v2(0, 0));
    // rank inferred from a series exponent
    auto q = io::polynomial_from_json(io::parse_json(R"j({"1": "t^(1,2,3)", "0": "1"})j"));
    CHECK(q.rank() == 3);
    CHECK_THROWS_AS(io::polynomial_from_json(io::parse_json(R"j({"1": "1", "0": "2"})j")), DomainError);
    CHECK(io::polynomial_from_json(io::parse_json(R"j({"1": "1", "0": "2"})j"), 2).rank() == 2);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(io::parse_json("{\"1,0\": "), ParseError);
    try {
        io::polynomial_from_json(io::parse_json(R"j({"1,0": "(0,x)"})j"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
        CHECK(std::string(e.what()).find("term '1,0'") != std::string::npos);
    }
    CHECK_THROWS_AS(io::polynomial_from_json(io::parse_json(R"j({"1,a": "(0,0)"})j")), ParseError);
    CHECK_THROWS_AS(io::polynomial_from_json(io::parse_json(R"j({"1,0": "(0,0)", "1": "(0,0)"})j")), DomainError);
    CHECK_THROWS_AS(io::polynomial_from_json(io::parse_json(R"j({"1,0": "(0,0)", "0,0": "(0,0,1)"})j")), RankMismatch);
    CHECK_THROWS_AS(io::point_from_json(io::parse_json(R"j(["(0,0)", "inf"])j")), DomainError);
    CHECK_THROWS_AS(io::complex_from_json(io::parse_json(R"j([["1,0 >= (0,0)"], ["1 >= (0,0)"]])j")), DomainError);
}

TEST_CASE("complex, pieces and certificates round trip") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t k = 1 + rng() % 3, d = 1 + rng() % 3;
        auto p = random_polynomial(rng, k, d, 6);
        CHECK(io::polynomial_from_json(io::parse_json(io::to_json(p).dump())) == p);
        LexComplex c = trop_hypersurface(p);
        if (c.empty()) continue;
        std::string text = io::to_json(c).dump();
        LexComplex back = io::complex_from_json(io::parse_json(text));
        CHECK(back == c);
        CHECK(io::to_json(back).dump() == text);

        auto pieces = banerjee_trop(p);
        std::string ptext = io::to_json(pieces).dump();
        CHECK(io::to_json(io::pieces_from_json(io::parse_json(ptext))).dump() == ptext);

        CellAdjacency adj = build_adjacency(c);
        if (!adj.is_connected()) continue;
        auto a = *c.cells().front().sample_point(rng);
        auto b = *c.cells().back().sample_point(rng);
        PLPath path = connect(c, adj, a, b);
        std::string cert = io::to_json(path).dump();
        PLPath reread = io::path_from_json(io::parse_json(cert));
        CHECK(io::to_json(reread).dump() == cert);
        CHECK(verify_path(reread, c).ok);
    }
}

TEST_CASE("skeleton jobs") {
    auto f = fixtures::two_cycle();
    Json j = io::graph_to_json(f.graph, f.charts);
    j["functions"] = f.functions;
    j["samples"] = 4;
    j["evaluate"] = Json::array({{{"edge", 1}, {"param", "(1,0)"}}});
    j["path"] = {{"from", {{"edge", 0}, {"param", "(1/2,0)"}}}, {"to", {{"edge", 1}, {"param", "(1,0)"}}}};
    io::SkeletonJob job = io::skeleton_job_from_json(io::parse_json(j.dump()));
    CHECK(job.graph.vertices() == f.graph.vertices());
    CHECK(job.graph.edges().size() == 2);
    CHECK(job.functions == f.functions);
    CHECK(job.samples == 4);
    REQUIRE(job.evaluate.size() == 1);
    REQUIRE(job.path.has_value());
    for (std::size_t e = 0; e < 2; ++e)
        for (const auto& [name, p] : f.charts[e].functions) CHECK(job.charts[e].functions.at(name) == p);
    CHECK(io::graph_to_json(job.graph, job.charts) == io::graph_to_json(f.graph, f.charts));

    Json bad = j;
    bad["edges"][0]["from"] = "Z";
    CHECK_THROWS_AS(io::skeleton_job_from_json(bad), DomainError);
    Json marked = {{"rank", 2}, {"vertices", {"p", "m"}}, {"edges", {{{"from", "p"}, {"to", "m"}, {"length", "inf"}, {"chart", {{"x", {{"1", "(0,0)"}}}}}}}}};
    io::SkeletonJob mj = io::skeleton_job_from_json(marked);
    CHECK(mj.graph.edges().front().marked());
    CHECK(mj.charts.front().functions.at("x").dim() == 1);
}
