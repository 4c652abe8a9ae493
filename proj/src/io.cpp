#include "lextrop/io.hpp"

#include "lextrop/error.hpp"

#include <algorithm>
#include <charconv>

namespace lextrop::io {

namespace {

const std::string& as_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError("expected a string at " + where, 0);
    return j.get_ref<const std::string&>();
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError("missing field '" + std::string(key) + "' at " + where, 0);
    return j.at(key);
}

template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(e.detail() + " in " + where, e.offset());
    }
}

Exponent parse_exponent(std::string_view key, const std::string& where) {
    Exponent out;
    std::size_t pos = 0;
    while (pos <= key.size()) {
        std::size_t comma = key.find(',', pos);
        std::size_t stop = comma == std::string_view::npos ? key.size() : comma;
        std::size_t b = pos, e = stop;
        while (b < e && key[b] == ' ') ++b;
        while (e > b && key[e - 1] == ' ') --e;
        if (b == e) {
            if (key.empty()) break;
            throw ParseError("empty exponent entry in " + where, pos);
        }
        std::int64_t value = 0;
        const char* first = key.data() + b;
        if (*first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, key.data() + e, value);
        if (ec != std::errc() || ptr != key.data() + e) throw ParseError("exponents must be integers in " + where, b);
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string exponent_key(const Exponent& u) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(u[i]);
    }
    return out;
}

bool looks_like_valuation(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    return !s.empty() && (s.front() == '(' || s.rfind("inf", 0) == 0);
}

// Number of exponent coordinates in the first "t^(...)" of a series.
std::optional<std::size_t> series_rank(std::string_view s) {
    std::size_t at = s.find("t^(");
    if (at == std::string_view::npos) return std::nullopt;
    std::size_t close = s.find(')', at);
    if (close == std::string_view::npos) return std::nullopt;
    std::string_view inner = s.substr(at + 3, close - at - 3);
    if (inner.find_first_not_of(' ') == std::string_view::npos) return 0;
    return static_cast<std::size_t>(std::count(inner.begin(), inner.end(), ',')) + 1;
}

std::string coefficient_text(const Json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    throw ParseError("coefficient must be a string or an integer at " + where, 0);
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError("expected an array at " + where, 0);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string w = where + "[" + std::to_string(i) + "]";
        if (j[i].is_number_integer()) {
            out.emplace_back(static_cast<long>(j[i].get<std::int64_t>()));
        } else {
            out.push_back(located(w, [&] { return parse_rational(as_string(j[i], w)); }));
        }
    }
    return out;
}

} // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

Json to_json(const LexValue& v) { return to_string(v); }

LexValue lexvalue_from_json(const Json& j) {
    return located("lex value", [&] { return parse_lexvalue(as_string(j, "lex value")); });
}

Json to_json(const LexPoint& w) {
    Json out = Json::array();
    for (const auto& x : w) out.push_back(to_string(x));
    return out;
}

LexPoint point_from_json(const Json& j, std::optional<std::size_t> rank) {
    if (!j.is_array()) throw ParseError("a point is an array of lex values", 0);
    LexPoint out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string where = "point[" + std::to_string(i) + "]";
        LexValue v = located(where, [&] { return parse_lexvalue(as_string(j[i], where)); });
        if (v.is_infinite()) throw DomainError("point coordinates must be finite");
        if (rank && v.rank() != *rank) throw RankMismatch(where + " has rank " + std::to_string(v.rank()) +
                                                          ", expected " + std::to_string(*rank));
        if (!out.empty() && v.rank() != out.front().rank()) throw RankMismatch(where + " has a different rank");
        out.push_back(std::move(v));
    }
    return out;
}

Json to_json(const LexPolyhedron& p) { return p.constraint_strings(); }

LexPolyhedron polyhedron_from_json(const Json& j, std::optional<std::size_t> rank, std::optional<std::size_t> dim) {
    if (!j.is_array()) throw ParseError("a polyhedron is an array of halfspace strings", 0);
    std::vector<LexHalfspace> hs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string where = "halfspace[" + std::to_string(i) + "]";
        hs.push_back(located(where, [&] { return parse_halfspace(as_string(j[i], where)); }));
        if (!dim) dim = hs.back().slope.size();
        if (!rank && hs.back().bound.is_finite()) rank = hs.back().bound.rank();
    }
    if (!rank || !dim) throw DomainError("rank and dimension cannot be inferred from an empty polyhedron; pass them explicitly");
    return LexPolyhedron(*rank, *dim, std::move(hs));
}

Json to_json(const LexComplex& c) {
    Json out = Json::array();
    for (const auto& cell : c.cells()) out.push_back(to_json(cell));
    return out;
}

LexComplex complex_from_json(const Json& j, std::optional<std::size_t> rank, std::optional<std::size_t> dim) {
    if (!j.is_array()) throw ParseError("a complex is an array of cells", 0);
    std::vector<LexPolyhedron> cells;
    for (std::size_t i = 0; i < j.size(); ++i) {
        cells.push_back(located("cell " + std::to_string(i), [&] { return polyhedron_from_json(j[i], rank, dim); }));
        rank = cells.back().rank();
        dim = cells.back().dim();
    }
    if (!rank || !dim) throw DomainError("rank and dimension cannot be inferred from an empty complex; pass them explicitly");
    return LexComplex(*rank, *dim, std::move(cells));
}

Json to_json(const EuclideanPiece& p) { return p.constraint_strings(); }

EuclideanPiece piece_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("a piece is an array of linear constraint strings", 0);
    std::vector<LinearConstraint> cs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string where = "constraint[" + std::to_string(i) + "]";
        cs.push_back(located(where, [&] { return parse_linear_constraint(as_string(j[i], where)); }));
        if (cs.back().coeffs.size() != cs.front().coeffs.size()) throw DomainError(where + " has a different dimension");
    }
    if (cs.empty()) throw DomainError("cannot infer the dimension of an unconstrained piece");
    std::size_t n = cs.front().coeffs.size();
    return EuclideanPiece(n, std::move(cs));
}

Json to_json(const std::vector<EuclideanPiece>& pieces) {
    Json out = Json::array();
    for (const auto& p : pieces) out.push_back(to_json(p));
    return out;
}

std::vector<EuclideanPiece> pieces_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of pieces", 0);
    std::vector<EuclideanPiece> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(located("piece " + std::to_string(i), [&] { return piece_from_json(j[i]); }));
    return out;
}

Json to_json(const HahnSeries& f) { return to_string(f); }

Json to_json(const ValuatedPolynomial& p) {
    Json out = Json::object();
    for (const auto& [u, v] : p.terms()) out[exponent_key(u)] = to_string(v);
    return out;
}

ValuatedPolynomial polynomial_from_json(const Json& j, std::optional<std::size_t> rank, std::optional<std::size_t> dim) {
    const Json& terms = j.is_object() && j.contains("terms") ? j.at("terms") : j;
    if (!terms.is_object()) throw ParseError("a polynomial is an object mapping exponents to coefficients", 0);
    std::vector<std::pair<Exponent, std::string>> raw;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        std::string where = "term '" + it.key() + "'";
        raw.emplace_back(parse_exponent(it.key(), where), coefficient_text(it.value(), where));
        if (!dim) dim = raw.back().first.size();
        if (!rank) {
            const std::string& text = raw.back().second;
            if (looks_like_valuation(text)) {
                LexValue v = located(where, [&] { return parse_lexvalue(text); });
                if (v.is_finite()) rank = v.rank();
            } else {
                rank = series_rank(text);
            }
        }
    }
    if (!dim) throw DomainError("cannot infer the number of variables of an empty polynomial; pass --dim");
    if (!rank) throw DomainError("cannot infer the rank from the coefficients; pass --rank");
    ValuatedPolynomial p(*rank, *dim);
    for (const auto& [u, text] : raw) {
        std::string where = "term '" + exponent_key(u) + "'";
        if (u.size() != *dim) throw DomainError(where + " has " + std::to_string(u.size()) + " exponents, expected " +
                                                std::to_string(*dim));
        if (looks_like_valuation(text)) {
            LexValue v = located(where, [&] { return parse_lexvalue(text); });
            if (v.is_infinite()) continue;
            p.set_term(u, std::move(v));
        } else {
            HahnSeries f = located(where, [&] { return parse_hahn_series(text, *rank); });
            if (f.is_zero()) continue;
            p.set_term(u, nu_mon(f));
        }
    }
    return p;
}

Json to_json(const GeneralizedInterval& g) {
    Json out = Json::array();
    for (const auto& piece : g.pieces)
        out.push_back({{"lo", to_string(piece.lo)},
                       {"hi", to_string(piece.hi)},
                       {"orientation", piece.orientation == Orientation::Ascending ? "ascending" : "descending"}});
    return out;
}

namespace {

OrientedInterval oriented_from_json(const Json& j, const std::string& where) {
    OrientedInterval piece;
    piece.lo = located(where, [&] { return parse_lexvalue(as_string(member(j, "lo", where), where + ".lo")); });
    piece.hi = located(where, [&] { return parse_lexvalue(as_string(member(j, "hi", where), where + ".hi")); });
    if (j.contains("orientation")) {
        const std::string& o = as_string(j.at("orientation"), where + ".orientation");
        if (o == "ascending") piece.orientation = Orientation::Ascending;
        else if (o == "descending") piece.orientation = Orientation::Descending;
        else throw ParseError("orientation must be 'ascending' or 'descending' at " + where, 0);
    }
    return piece;
}

} // namespace

GeneralizedInterval interval_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("an interval is an array of pieces", 0);
    GeneralizedInterval g;
    for (std::size_t i = 0; i < j.size(); ++i) g.pieces.push_back(oriented_from_json(j[i], "piece " + std::to_string(i)));
    return g;
}

Json to_json(const PLPath& path) {
    Json segs = Json::array();
    for (std::size_t m = 0; m < path.segments.size(); ++m) {
        const auto& s = path.segments[m];
        const auto& piece = path.interval.pieces[m];
        Json dir = Json::array();
        for (const auto& q : s.direction) dir.push_back(to_string(q));
        segs.push_back({{"cell", s.cell},
                        {"start", to_json(s.start)},
                        {"direction", dir},
                        {"lo", to_string(piece.lo)},
                        {"hi", to_string(piece.hi)},
                        {"orientation", piece.orientation == Orientation::Ascending ? "ascending" : "descending"}});
    }
    return {{"from", to_json(path.from)}, {"to", to_json(path.to)}, {"segments", segs}};
}

PLPath path_from_json(const Json& j) {
    PLPath path;
    path.from = located("from", [&] { return point_from_json(member(j, "from", "certificate")); });
    path.to = located("to", [&] { return point_from_json(member(j, "to", "certificate")); });
    const Json& segs = member(j, "segments", "certificate");
    if (!segs.is_array()) throw ParseError("segments must be an array", 0);
    for (std::size_t m = 0; m < segs.size(); ++m) {
        std::string where = "segment " + std::to_string(m);
        const Json& s = segs[m];
        const Json& cell = member(s, "cell", where);
        if (!cell.is_number_integer() || cell.get<std::int64_t>() < 0) throw ParseError("cell must be a non-negative integer at " + where, 0);
        PLSegment seg;
        seg.cell = cell.get<std::size_t>();
        seg.start = located(where, [&] { return point_from_json(member(s, "start", where)); });
        seg.direction = rationals_from_json(member(s, "direction", where), where + ".direction");
        path.interval.pieces.push_back(oriented_from_json(s, where));
        path.segments.push_back(std::move(seg));
    }
    return path;
}

Json to_json(const SkeletonPoint& p) { return {{"edge", p.edge}, {"param", to_string(p.param)}}; }

SkeletonPoint skeleton_point_from_json(const Json& j) {
    const Json& edge = member(j, "edge", "skeleton point");
    if (!edge.is_number_integer() || edge.get<std::int64_t>() < 0) throw ParseError("edge must be a non-negative integer", 0);
    SkeletonPoint p;
    p.edge = edge.get<std::size_t>();
    p.param = located("skeleton point", [&] { return parse_lexvalue(as_string(member(j, "param", "skeleton point"), "param")); });
    return p;
}

Json to_json(const SkeletonPath& path) {
    Json out = Json::array();
    for (std::size_t m = 0; m < path.edges.size(); ++m) {
        const auto& piece = path.interval.pieces[m];
        out.push_back({{"edge", path.edges[m]},
                       {"lo", to_string(piece.lo)},
                       {"hi", to_string(piece.hi)},
                       {"orientation", piece.orientation == Orientation::Ascending ? "ascending" : "descending"}});
    }
    return out;
}

Json to_json(const InjectivityReport& report) {
    Json out = {{"injective", report.injective}, {"samples", report.samples}};
    if (report.witness) {
        Json value = Json::array();
        for (const auto& v : report.witness_value) value.push_back(to_string(v));
        out["witness"] = {{"first", to_json(report.witness->first)},
                          {"second", to_json(report.witness->second)},
                          {"value", value}};
    }
    return out;
}

SkeletonJob skeleton_job_from_json(const Json& j) {
    const Json& rank_j = member(j, "rank", "graph");
    if (!rank_j.is_number_integer() || rank_j.get<std::int64_t>() <= 0) throw ParseError("rank must be a positive integer", 0);
    const std::size_t rank = rank_j.get<std::size_t>();
    const Json& vj = member(j, "vertices", "graph");
    if (!vj.is_array()) throw ParseError("vertices must be an array of names", 0);
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < vj.size(); ++i) vertices.push_back(as_string(vj[i], "vertices[" + std::to_string(i) + "]"));
    auto index_of = [&](const std::string& name) {
        for (std::size_t v = 0; v < vertices.size(); ++v)
            if (vertices[v] == name) return v;
        throw DomainError("unknown vertex '" + name + "'");
    };
    const Json& ej = member(j, "edges", "graph");
    if (!ej.is_array()) throw ParseError("edges must be an array", 0);
    std::vector<MetricEdge> edges;
    std::vector<EdgeChart> charts;
    for (std::size_t e = 0; e < ej.size(); ++e) {
        std::string where = "edge " + std::to_string(e);
        MetricEdge edge;
        edge.tail = index_of(as_string(member(ej[e], "from", where), where + ".from"));
        edge.head = index_of(as_string(member(ej[e], "to", where), where + ".to"));
        edge.length = located(where, [&] { return parse_lexvalue(as_string(member(ej[e], "length", where), where + ".length")); });
        edges.push_back(edge);
        EdgeChart chart;
        if (ej[e].contains("chart")) {
            const Json& cj = ej[e].at("chart");
            if (!cj.is_object()) throw ParseError("chart must map function names to polynomials at " + where, 0);
            const std::size_t arity = edge.marked() ? 1 : 2;
            for (auto it = cj.begin(); it != cj.end(); ++it)
                chart.functions.emplace(it.key(), located(where + " chart '" + it.key() + "'", [&] {
                                            return polynomial_from_json(it.value(), rank, arity);
                                        }));
        }
        charts.push_back(std::move(chart));
    }
    SkeletonJob job{MetricGraph(rank, std::move(vertices), std::move(edges)), std::move(charts), {}, {}, std::nullopt, 4};
    if (j.contains("functions")) {
        const Json& fj = j.at("functions");
        if (!fj.is_array()) throw ParseError("functions must be an array of names", 0);
        for (std::size_t i = 0; i < fj.size(); ++i) job.functions.push_back(as_string(fj[i], "functions[" + std::to_string(i) + "]"));
    }
    if (j.contains("samples")) {
        if (!j.at("samples").is_number_integer() || j.at("samples").get<std::int64_t>() <= 0) throw ParseError("samples must be a positive integer", 0);
        job.samples = j.at("samples").get<std::size_t>();
    }
    if (j.contains("evaluate")) {
        const Json& pj = j.at("evaluate");
        if (!pj.is_array()) throw ParseError("evaluate must be an array of points", 0);
        for (const auto& p : pj) job.evaluate.push_back(skeleton_point_from_json(p));
    }
    if (j.contains("path")) {
        const Json& pj = j.at("path");
        job.path = std::make_pair(skeleton_point_from_json(member(pj, "from", "path")),
                                  skeleton_point_from_json(member(pj, "to", "path")));
    }
    return job;
}

Json graph_to_json(const MetricGraph& g, const std::vector<EdgeChart>& charts) {
    Json edges = Json::array();
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& edge = g.edges()[e];
        Json item = {{"from", g.vertices()[edge.tail]}, {"to", g.vertices()[edge.head]}, {"length", to_string(edge.length)}};
        if (e < charts.size()) {
            Json chart = Json::object();
            for (const auto& [name, p] : charts[e].functions) chart[name] = to_json(p);
            item["chart"] = chart;
        }
        edges.push_back(item);
    }
    return {{"rank", g.rank()}, {"vertices", g.vertices()}, {"edges", edges}};
}

} // namespace lextrop::io
