#include "lextrop/error.hpp"
#include "lextrop/fixtures.hpp"
#include "lextrop/random.hpp"
#include "lextrop/skeleton.hpp"

#include <doctest.h>

using namespace lextrop;

namespace {

LexValue v2(long a, long b) { return LexValue{Rational(a), Rational(b)}; }
LexValue half(long a) { return LexValue{Rational(a, 2), Rational(0)}; }

ValuatedPolynomial poly(std::size_t dim, std::initializer_list<std::pair<Exponent, LexValue>> terms) {
    ValuatedPolynomial p(2, dim);
    for (const auto& [u, v] : terms) p.set_term(u, v);
    return p;
}

MetricGraph triangle() {
    return MetricGraph(2, {"a", "b", "c"},
                       {MetricEdge{0, 1, v2(1, 0)}, MetricEdge{1, 2, v2(1, 0)}, MetricEdge{2, 0, v2(1, 0)}});
}

// Swaps tail and head of edge e; a chart function sum a x^j y^k becomes
// sum a x^k y^j in the new coordinates.
fixtures::SkeletonFixture flipped(const fixtures::SkeletonFixture& f, std::size_t e) {
    std::vector<MetricEdge> edges = f.graph.edges();
    std::swap(edges[e].tail, edges[e].head);
    fixtures::SkeletonFixture out{MetricGraph(f.graph.rank(), f.graph.vertices(), edges), f.charts, f.functions};
    for (auto& [name, p] : out.charts[e].functions) {
        ValuatedPolynomial q(p.rank(), p.dim());
        for (const auto& [u, v] : p.terms()) q.set_term({u[1], u[0]}, v);
        p = q;
    }
    return out;
}

} // namespace

TEST_CASE("edge valuation examples") {
    auto x_plus_y = poly(2, {{{1, 0}, v2(0, 0)}, {{0, 1}, v2(0, 0)}});
    CHECK(edge_valuation(x_plus_y, v2(2, 0), v2(1, 0)) == v2(1, 0));
    auto one_plus_x = poly(2, {{{0, 0}, v2(0, 0)}, {{1, 0}, v2(0, 0)}});
    CHECK(edge_valuation(one_plus_x, v2(2, 0), v2(0, 1)) == v2(0, 0));
    auto x = poly(2, {{{1, 0}, v2(0, 0)}});
    auto y = poly(2, {{{0, 1}, v2(0, 0)}});
    CHECK(edge_valuation(x, v2(2, 0), v2(0, 0)) == v2(0, 0));
    CHECK(edge_valuation(y, v2(2, 0), v2(0, 0)) == v2(2, 0));
    // val(x) + val(y) = length everywhere
    for (long i = 0; i <= 4; ++i) {
        LexValue omega = half(i);
        CHECK(edge_valuation(x, v2(2, 0), omega) + edge_valuation(y, v2(2, 0), omega) == v2(2, 0));
    }
    CHECK_THROWS_AS(edge_valuation(x, v2(2, 0), v2(3, 0)), DomainError);
    CHECK_THROWS_AS(edge_valuation(x, v2(2, 0), v2(-1, 5)), DomainError);
    CHECK(edge_valuation(ValuatedPolynomial(2, 2), v2(1, 0), v2(0, 0)).is_infinite());
}

TEST_CASE("x is strictly increasing along an edge") {
    auto x = poly(2, {{{1, 0}, v2(0, 0)}});
    LexValue prev = edge_valuation(x, v2(3, 1), v2(0, 0));
    for (long i = 1; i <= 12; ++i) {
        LexValue next = edge_valuation(x, v2(3, 1), scale(Rational(i, 12), v2(3, 1)));
        CHECK(prev < next);
        prev = next;
    }
}

TEST_CASE("marked edges") {
    auto one_plus_x = poly(1, {{{0}, v2(1, 0)}, {{1}, v2(0, 0)}});
    CHECK(marked_edge_valuation(one_plus_x, v2(0, 5)) == v2(0, 5));
    CHECK(marked_edge_valuation(one_plus_x, v2(3, 0)) == v2(1, 0));
    CHECK(marked_edge_valuation(one_plus_x, LexValue::infinity()) == v2(1, 0));
    auto x = poly(1, {{{1}, v2(0, 0)}});
    CHECK(marked_edge_valuation(x, LexValue::infinity()).is_infinite());
    CHECK_THROWS_AS(marked_edge_valuation(x, v2(-1, 0)), DomainError);
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(MetricGraph(2, {"a"}, {MetricEdge{0, 1, v2(1, 0)}}), DomainError);
    CHECK_THROWS_AS(MetricGraph(2, {"a", "b"}, {MetricEdge{0, 1, v2(0, 0)}}), DomainError);
    CHECK_THROWS_AS(MetricGraph(2, {"a", "b"}, {MetricEdge{0, 1, v2(-1, 3)}}), DomainError);
    CHECK_THROWS_AS(MetricGraph(2, {"a", "b"}, {MetricEdge{0, 1, LexValue{1, 0, 0}}}), RankMismatch);
    CHECK_THROWS_AS(MetricGraph(2, {"a", "m"}, {MetricEdge{0, 1, LexValue::infinity()}, MetricEdge{0, 1, v2(1, 0)}}),
                    DomainError);
    CHECK_THROWS_AS(MetricGraph(2, {"a", "a"}, {}), DomainError);
    CHECK_NOTHROW(fixtures::annulus_with_mark(v2(1, 1)));
}

TEST_CASE("skeleton paths") {
    MetricGraph g = triangle();
    SkeletonPoint mid0{0, half(1)}, mid1{1, half(1)};
    SkeletonPath path = skeleton_path(g, mid0, mid1);
    REQUIRE(path.edges.size() == 2);
    CHECK(path.edges == std::vector<std::size_t>{0, 1});
    CHECK(is_continuous(g, path, mid0, mid1));

    CHECK(skeleton_path(g, mid0, mid0).edges.empty());
    // the vertex b seen from two edges is the same point
    CHECK(skeleton_path(g, SkeletonPoint{0, v2(1, 0)}, SkeletonPoint{1, v2(0, 0)}).edges.empty());

    SkeletonPoint a_from_2{2, v2(1, 0)};
    SkeletonPath loop = skeleton_path(g, mid1, a_from_2);
    CHECK(loop.edges.size() == 2);
    CHECK(is_continuous(g, loop, mid1, a_from_2));

    SkeletonPath same_edge = skeleton_path(g, SkeletonPoint{0, half(1)}, SkeletonPoint{0, LexValue{Rational(1, 4), Rational(0)}});
    REQUIRE(same_edge.edges.size() == 1);
    CHECK(same_edge.interval.pieces.front().orientation == Orientation::Descending);

    MetricGraph two(2, {"a", "b", "c", "d"}, {MetricEdge{0, 1, v2(1, 0)}, MetricEdge{2, 3, v2(1, 0)}});
    CHECK_THROWS_AS(skeleton_path(two, SkeletonPoint{0, half(1)}, SkeletonPoint{1, half(1)}), Disconnected);
    CHECK_THROWS_AS(skeleton_path(g, SkeletonPoint{0, v2(2, 0)}, mid1), DomainError);
}

TEST_CASE("skeleton paths on random graphs are continuous and short") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng() % 5;
        std::vector<std::string> names;
        for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
        std::vector<MetricEdge> edges;
        for (std::size_t v = 1; v < n; ++v) edges.push_back({rng() % v, v, LexValue{Rational(1 + static_cast<long>(rng() % 3)), Rational(0)}});
        for (int extra = 0; extra < 2; ++extra) edges.push_back({rng() % n, rng() % n, LexValue{Rational(1), Rational(static_cast<long>(rng() % 3))}});
        MetricGraph g(2, names, edges);
        auto point = [&] {
            std::size_t e = rng() % edges.size();
            return SkeletonPoint{e, scale(Rational(static_cast<long>(rng() % 5), 4), edges[e].length)};
        };
        SkeletonPoint p = point(), q = point();
        SkeletonPath path = skeleton_path(g, p, q);
        CHECK(is_continuous(g, path, p, q));
        CHECK(path.edges.size() <= n);
    }
}

TEST_CASE("sample grid") {
    auto f = fixtures::two_cycle();
    auto grid = sample_grid(f.graph, 4);
    CHECK(grid.size() == 8);
    MetricGraph marked = fixtures::annulus_with_mark(v2(1, 0));
    auto mgrid = sample_grid(marked, 3);
    // annulus: 4 points; marked edge: 1, 2 times e1 and infinity (0 is the shared vertex)
    CHECK(mgrid.size() == 4 + 3);
    CHECK(mgrid.back().param.is_infinite());
    CHECK_THROWS_AS(sample_grid(marked, 0), DomainError);
}

TEST_CASE("chart functions agree at shared vertices") {
    auto f = fixtures::two_cycle();
    for (const auto& fn : f.functions) {
        CHECK(chart_valuation(f.graph, f.charts, fn, {0, v2(0, 0)}) == chart_valuation(f.graph, f.charts, fn, {1, v2(0, 0)}));
        CHECK(chart_valuation(f.graph, f.charts, fn, {0, v2(1, 0)}) == chart_valuation(f.graph, f.charts, fn, {1, v2(2, 0)}));
    }
}

TEST_CASE("faithful injectivity on the two-cycle") {
    auto full = fixtures::two_cycle();
    auto report = faithful_injectivity_check(full.graph, full.charts, full.functions, 4);
    CHECK(report.injective);
    CHECK(report.samples == 8);
    CHECK_FALSE(report.witness.has_value());

    auto partial = fixtures::two_cycle_degenerate();
    auto bad = faithful_injectivity_check(partial.graph, partial.charts, partial.functions, 4);
    CHECK_FALSE(bad.injective);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->first.edge == 1);
    CHECK(bad.witness->second.edge == 1);
    CHECK(bad.witness_value == std::vector<LexValue>{v2(1, 0), v2(1, 0)});

    // Reversing an edge together with its chart changes nothing.
    for (std::size_t e = 0; e < 2; ++e) {
        auto turned = flipped(full, e);
        CHECK(faithful_injectivity_check(turned.graph, turned.charts, turned.functions, 4).injective);
        auto turned_bad = flipped(partial, e);
        CHECK_FALSE(faithful_injectivity_check(turned_bad.graph, turned_bad.charts, turned_bad.functions, 4).injective);
        for (const auto& fn : full.functions)
            for (long i = 0; i <= 4; ++i) {
                LexValue len = full.graph.edges()[e].length;
                LexValue omega = scale(Rational(i, 4), len);
                CHECK(chart_valuation(full.graph, full.charts, fn, {e, omega}) ==
                      chart_valuation(turned.graph, turned.charts, fn, {e, len - omega}));
            }
    }
}

TEST_CASE("a single marked edge is separated by x") {
    MetricGraph g(2, {"p", "mark"}, {MetricEdge{0, 1, LexValue::infinity()}});
    std::vector<EdgeChart> charts = {EdgeChart{{{"x", poly(1, {{{1}, v2(0, 0)}})}}}};
    auto report = faithful_injectivity_check(g, charts, {"x"}, 5);
    CHECK(report.injective);
    CHECK(report.samples == 6);
}

TEST_CASE("malformed charts are rejected") {
    auto f = fixtures::two_cycle();
    auto charts = f.charts;
    charts[1].functions.erase("x1");
    CHECK_THROWS_AS(faithful_injectivity_check(f.graph, charts, f.functions, 4), DomainError);
    charts = f.charts;
    charts[0].functions.at("x1") = poly(1, {{{1}, v2(0, 0)}});
    CHECK_THROWS_AS(faithful_injectivity_check(f.graph, charts, f.functions, 4), DomainError);
    CHECK_THROWS_AS(faithful_injectivity_check(f.graph, {charts[0]}, f.functions, 4), DomainError);
}

TEST_CASE("edge valuation laws on Hahn polynomials") {
    std::mt19937_64 rng(67);
    auto random_hp = [&](std::size_t arity) {
        HahnPolynomial f;
        for (int t = 0; t < 3; ++t) {
            Exponent u(arity);
            for (auto& e : u) e = static_cast<std::int64_t>(rng() % 3);
            f = hp_add(f, HahnPolynomial{{u, random_hahn_series(rng, 2, 3)}});
        }
        return f;
    };
    for (const LexValue& len : {v2(1, 0), v2(2, 1), v2(0, 3)}) {
        for (int trial = 0; trial < 100; ++trial) {
            HahnPolynomial f = random_hp(2), g = random_hp(2);
            LexValue omega = scale(Rational(static_cast<long>(rng() % 9), 8), len);
            auto val = [&](const HahnPolynomial& q) { return edge_valuation(ValuatedPolynomial::from_hahn(2, 2, q), len, omega); };
            CHECK(val(hp_mul(f, g)) == val(f) + val(g));
            LexValue s = val(hp_add(f, g));
            CHECK(s >= lex_min(val(f), val(g)));
            if (val(f) != val(g)) CHECK(s == lex_min(val(f), val(g)));
        }
    }
}
