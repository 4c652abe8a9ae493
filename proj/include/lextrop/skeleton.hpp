#pragma once

#include "lextrop/paths.hpp"
#include "lextrop/tropical.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lextrop {

// Edge tail -> head of lex length `length` (> 0). An infinite length marks a
// half-open edge whose head is the degree-one mark vertex.
struct MetricEdge {
    std::size_t tail = 0;
    std::size_t head = 0;
    LexValue length;

    bool marked() const noexcept { return length.is_infinite(); }
};

class MetricGraph {
public:
    MetricGraph(std::size_t rank, std::vector<std::string> vertices, std::vector<MetricEdge> edges);

    std::size_t rank() const noexcept { return rank_; }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<MetricEdge>& edges() const noexcept { return edges_; }
    std::optional<std::size_t> vertex_index(const std::string& name) const;
    std::size_t degree(std::size_t vertex) const;

private:
    std::size_t rank_;
    std::vector<std::string> vertices_;
    std::vector<MetricEdge> edges_;
};

// The point at parameter `param` along edge `edge`, measured from the tail.
struct SkeletonPoint {
    std::size_t edge = 0;
    LexValue param;
};

void check_point(const MetricGraph& g, const SkeletonPoint& p);
// The vertex the point sits on, if it is an edge endpoint.
std::optional<std::size_t> vertex_at(const MetricGraph& g, const SkeletonPoint& p);
bool same_point(const MetricGraph& g, const SkeletonPoint& a, const SkeletonPoint& b);

// Valuation of  g = sum a_jk x^j y^k  on an annulus chart with xy = f,
// nu(f) = length, at distance omega from the x = 0 end:
// min_jk nu(a_jk) + j omega + k (length - omega).
LexValue edge_valuation(const ValuatedPolynomial& g, const LexValue& length, const LexValue& omega);
// Valuation of g = sum a_j x^j on a punctured-disc chart at distance omega
// (possibly infinite) from the interior end: min_j nu(a_j) + j omega.
LexValue marked_edge_valuation(const ValuatedPolynomial& g, const LexValue& omega);

// Each edge carries, for every function of the collection, a representative
// in the edge's chart variables: (x, y) on finite edges, x on marked ones.
struct EdgeChart {
    std::map<std::string, ValuatedPolynomial> functions;
};

LexValue chart_valuation(const MetricGraph& g, const std::vector<EdgeChart>& charts, const std::string& function,
                         const SkeletonPoint& p);

// Sequence of edges with one oriented parameter interval per edge.
struct SkeletonPath {
    GeneralizedInterval interval;
    std::vector<std::size_t> edges;
};

// A path with the fewest edge traversals; throws Disconnected when the two
// points lie in different components.
SkeletonPath skeleton_path(const MetricGraph& g, const SkeletonPoint& from, const SkeletonPoint& to);
// Starts at `from`, ends at `to`, consecutive pieces meet at a shared vertex.
bool is_continuous(const MetricGraph& g, const SkeletonPath& path, const SkeletonPoint& from, const SkeletonPoint& to);

// Parameters i * length / n for i = 0..n on finite edges and 0..n-1 times the
// first unit vector plus infinity on marked edges; each vertex kept once.
std::vector<SkeletonPoint> sample_grid(const MetricGraph& g, std::size_t per_edge);

struct InjectivityReport {
    bool injective = true;
    std::size_t samples = 0;
    std::optional<std::pair<SkeletonPoint, SkeletonPoint>> witness;
    std::vector<LexValue> witness_value;
};

// Evaluates the valuations of `functions` on the sample grid and reports the
// first pair of distinct samples with identical value vectors.
InjectivityReport faithful_injectivity_check(const MetricGraph& g, const std::vector<EdgeChart>& charts,
                                             const std::vector<std::string>& functions, std::size_t per_edge);

} // namespace lextrop
