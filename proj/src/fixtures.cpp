#include "lextrop/fixtures.hpp"

namespace lextrop::fixtures {

namespace {

LexValue r2(long a, long b) { return LexValue{Rational(a), Rational(b)}; }

EdgeChart chart(std::map<std::string, ValuatedPolynomial> fns) { return EdgeChart{std::move(fns)}; }

ValuatedPolynomial poly2(std::initializer_list<std::pair<Exponent, LexValue>> terms) {
    ValuatedPolynomial p(2, 2);
    for (const auto& [u, v] : terms) p.set_term(u, v);
    return p;
}

} // namespace

ValuatedPolynomial tropical_line(std::size_t rank) {
    ValuatedPolynomial p(rank, 2);
    p.set_term({1, 0}, LexValue::zero(rank));
    p.set_term({0, 1}, LexValue::zero(rank));
    p.set_term({0, 0}, LexValue::zero(rank));
    return p;
}

SkeletonFixture two_cycle() {
    MetricGraph g(2, {"A", "B"}, {MetricEdge{0, 1, r2(1, 0)}, MetricEdge{0, 1, r2(2, 0)}});
    const LexValue zero = r2(0, 0);
    const LexValue small = r2(1, 0);
    EdgeChart e1 = chart({{"x1", poly2({{{1, 0}, zero}})},
                          {"y1", poly2({{{0, 1}, zero}})},
                          {"x2", poly2({{{2, 0}, zero}})},
                          {"y2", poly2({{{0, 2}, zero}})}});
    EdgeChart e2 = chart({{"x1", poly2({{{2, 0}, zero}, {{0, 0}, small}})},
                          {"y1", poly2({{{0, 2}, zero}, {{0, 0}, small}})},
                          {"x2", poly2({{{1, 0}, zero}})},
                          {"y2", poly2({{{0, 1}, zero}})}});
    return {std::move(g), {std::move(e1), std::move(e2)}, {"x1", "y1", "x2", "y2"}};
}

SkeletonFixture two_cycle_degenerate() {
    SkeletonFixture f = two_cycle();
    f.functions = {"x1", "y1"};
    return f;
}

MetricGraph annulus_with_mark(const LexValue& length) {
    return MetricGraph(length.rank(), {"P", "Q", "mark"},
                       {MetricEdge{0, 1, length}, MetricEdge{1, 2, LexValue::infinity()}});
}

} // namespace lextrop::fixtures
