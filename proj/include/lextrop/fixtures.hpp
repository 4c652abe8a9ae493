#pragma once

#include "lextrop/skeleton.hpp"

#include <string>
#include <vector>

namespace lextrop::fixtures {

// x + y + 1 at rank k with every coefficient of valuation zero.
ValuatedPolynomial tropical_line(std::size_t rank);

// Two vertices A, B joined by edges of lengths (1,0) and (2,0), with charts
// for the coordinate functions x1, y1, x2, y2: each pair restricts to the
// chart coordinates on its own edge and to squares (plus a higher-order
// perturbation for x1, y1) on the other.
struct SkeletonFixture {
    MetricGraph graph;
    std::vector<EdgeChart> charts;
    std::vector<std::string> functions;
};

// {x1, y1, x2, y2}: separates every point of the grid.
SkeletonFixture two_cycle();
// {x1, y1}: its valuations on the second edge fold the edge in half.
SkeletonFixture two_cycle_degenerate();

// A single annulus edge of the given length and a marked edge hanging off its
// head, used to exercise the valuation laws.
MetricGraph annulus_with_mark(const LexValue& length);

} // namespace lextrop::fixtures
