#pragma once

#include "lextrop/linear.hpp"

#include <string>
#include <vector>

namespace lextrop {

struct BoundingBox {
    double xmin = -3, ymin = -3, xmax = 3, ymax = 3;
};

// "xmin,ymin,xmax,ymax"
BoundingBox parse_bbox(const std::string& text);

// Draws pieces of the flattened space R^{2d} (rank 2, d <= 2), one panel per
// variable showing its two levels. Pieces are projected, clipped to the box
// and filled; strict edges dashed, closed edges solid.
std::string render_svg(const std::vector<EuclideanPiece>& pieces, std::size_t dim, const BoundingBox& box);

} // namespace lextrop
