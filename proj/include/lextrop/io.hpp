#pragma once

#include "lextrop/paths.hpp"
#include "lextrop/skeleton.hpp"
#include "lextrop/tropical.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lextrop::io {

using Json = nlohmann::json;

// Parses JSON text; syntax errors become ParseError with the byte offset.
Json parse_json(std::string_view text);

Json to_json(const LexValue& v);
LexValue lexvalue_from_json(const Json& j);

Json to_json(const LexPoint& w);
LexPoint point_from_json(const Json& j, std::optional<std::size_t> rank = std::nullopt);

// ["u1,...,ud REL (d1,...,dk)", ...]
Json to_json(const LexPolyhedron& p);
LexPolyhedron polyhedron_from_json(const Json& j, std::optional<std::size_t> rank = std::nullopt,
                                   std::optional<std::size_t> dim = std::nullopt);

// An array of cells, each an array of halfspace strings.
Json to_json(const LexComplex& c);
LexComplex complex_from_json(const Json& j, std::optional<std::size_t> rank = std::nullopt,
                             std::optional<std::size_t> dim = std::nullopt);

// ["a1,...,an REL b", ...]
Json to_json(const EuclideanPiece& p);
EuclideanPiece piece_from_json(const Json& j);
Json to_json(const std::vector<EuclideanPiece>& pieces);
std::vector<EuclideanPiece> pieces_from_json(const Json& j);

Json to_json(const HahnSeries& f);

// {"e1,...,ed": coefficient, ...} or {"terms": {...}}. A coefficient is a
// valuation string "(v1,...,vk)" or a Hahn series such as "3*t^(0,1)+t^(1,0)";
// zero series are dropped. Keys are emitted in sorted order.
Json to_json(const ValuatedPolynomial& p);
ValuatedPolynomial polynomial_from_json(const Json& j, std::optional<std::size_t> rank = std::nullopt,
                                        std::optional<std::size_t> dim = std::nullopt);

Json to_json(const GeneralizedInterval& g);
GeneralizedInterval interval_from_json(const Json& j);

Json to_json(const PLPath& path);
PLPath path_from_json(const Json& j);

Json to_json(const SkeletonPoint& p);
SkeletonPoint skeleton_point_from_json(const Json& j);
Json to_json(const SkeletonPath& path);
Json to_json(const InjectivityReport& report);

struct SkeletonJob {
    MetricGraph graph;
    std::vector<EdgeChart> charts;
    std::vector<std::string> functions;
    std::vector<SkeletonPoint> evaluate;
    std::optional<std::pair<SkeletonPoint, SkeletonPoint>> path;
    std::size_t samples = 4;
};

// {"rank": k, "vertices": [...], "edges": [{"from", "to", "length", "chart"}],
//  "functions": [...], "samples": n, "evaluate": [...], "path": {"from", "to"}}
SkeletonJob skeleton_job_from_json(const Json& j);
Json graph_to_json(const MetricGraph& g, const std::vector<EdgeChart>& charts);

} // namespace lextrop::io
