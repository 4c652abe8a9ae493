#include "lextrop/skeleton.hpp"

#include "lextrop/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace lextrop {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Leg from an endpoint (or the point itself) to a vertex of its edge.
struct Leg {
    std::size_t vertex = kNone;
    bool has_piece = false;
    OrientedInterval piece;
    std::size_t edge = 0;
};

std::vector<Leg> legs_out(const MetricGraph& g, const SkeletonPoint& p) {
    if (auto v = vertex_at(g, p)) return {Leg{*v, false, {}, 0}};
    const auto& e = g.edges()[p.edge];
    return {Leg{e.tail, true, {LexValue::zero(g.rank()), p.param, Orientation::Descending}, p.edge},
            Leg{e.head, true, {p.param, e.length, Orientation::Ascending}, p.edge}};
}

std::vector<Leg> legs_in(const MetricGraph& g, const SkeletonPoint& p) {
    if (auto v = vertex_at(g, p)) return {Leg{*v, false, {}, 0}};
    const auto& e = g.edges()[p.edge];
    return {Leg{e.tail, true, {LexValue::zero(g.rank()), p.param, Orientation::Ascending}, p.edge},
            Leg{e.head, true, {p.param, e.length, Orientation::Descending}, p.edge}};
}

struct Search {
    std::vector<std::size_t> dist;
    std::vector<std::size_t> via_edge;
    std::vector<std::size_t> parent;
};

Search bfs(const MetricGraph& g, std::size_t start) {
    const std::size_t n = g.vertices().size();
    Search s{std::vector<std::size_t>(n, kNone), std::vector<std::size_t>(n, kNone), std::vector<std::size_t>(n, kNone)};
    s.dist[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            const auto& edge = g.edges()[e];
            std::size_t other;
            if (edge.tail == v) other = edge.head;
            else if (edge.head == v) other = edge.tail;
            else continue;
            if (s.dist[other] != kNone) continue;
            s.dist[other] = s.dist[v] + 1;
            s.via_edge[other] = e;
            s.parent[other] = v;
            queue.push_back(other);
        }
    }
    return s;
}

} // namespace

MetricGraph::MetricGraph(std::size_t rank, std::vector<std::string> vertices, std::vector<MetricEdge> edges)
    : rank_(rank), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t a = 0; a < vertices_.size(); ++a)
        for (std::size_t b = a + 1; b < vertices_.size(); ++b)
            if (vertices_[a] == vertices_[b]) throw DomainError("duplicate vertex name '" + vertices_[a] + "'");
    for (const auto& e : edges_) {
        if (e.tail >= vertices_.size() || e.head >= vertices_.size()) throw DomainError("edge endpoint out of range");
        if (e.marked()) {
            if (e.tail == e.head) throw DomainError("a marked edge cannot be a loop");
            continue;
        }
        if (e.length.rank() != rank_) throw RankMismatch("edge length " + to_string(e.length) + " has the wrong rank");
        if (e.length <= LexValue::zero(rank_)) throw DomainError("edge lengths must be positive");
    }
    for (const auto& e : edges_)
        if (e.marked() && degree(e.head) != 1) throw DomainError("the mark vertex of a marked edge must have degree one");
}

std::optional<std::size_t> MetricGraph::vertex_index(const std::string& name) const {
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (vertices_[v] == name) return v;
    return std::nullopt;
}

std::size_t MetricGraph::degree(std::size_t vertex) const {
    std::size_t d = 0;
    for (const auto& e : edges_) d += (e.tail == vertex) + (e.head == vertex);
    return d;
}

void check_point(const MetricGraph& g, const SkeletonPoint& p) {
    if (p.edge >= g.edges().size()) throw DomainError("skeleton point refers to a missing edge");
    const auto& e = g.edges()[p.edge];
    if (p.param.is_infinite()) {
        if (!e.marked()) throw DomainError("infinite parameter on a finite edge");
        return;
    }
    if (p.param.rank() != g.rank()) throw RankMismatch("skeleton parameter has the wrong rank");
    if (p.param < LexValue::zero(g.rank()) || p.param > e.length)
        throw DomainError("parameter " + to_string(p.param) + " lies outside [0, " + to_string(e.length) + "]");
}

std::optional<std::size_t> vertex_at(const MetricGraph& g, const SkeletonPoint& p) {
    check_point(g, p);
    const auto& e = g.edges()[p.edge];
    if (p.param == e.length) return e.head;
    if (p.param.is_zero()) return e.tail;
    return std::nullopt;
}

bool same_point(const MetricGraph& g, const SkeletonPoint& a, const SkeletonPoint& b) {
    auto va = vertex_at(g, a);
    auto vb = vertex_at(g, b);
    if (va || vb) return va == vb;
    return a.edge == b.edge && a.param == b.param;
}

LexValue edge_valuation(const ValuatedPolynomial& g, const LexValue& length, const LexValue& omega) {
    if (g.dim() != 2) throw DomainError("annulus chart functions take two variables");
    if (length.is_infinite() || omega.is_infinite()) throw DomainError("edge_valuation needs a finite edge and parameter");
    if (length.rank() != g.rank() || omega.rank() != g.rank()) throw RankMismatch("edge_valuation rank mismatch");
    if (omega < LexValue::zero(g.rank()) || omega > length) throw DomainError("parameter outside the edge");
    LexValue rest = length - omega;
    LexValue best = LexValue::infinity();
    for (const auto& [u, v] : g.terms()) best = lex_min(best, v + integer_scale(u[0], omega) + integer_scale(u[1], rest));
    return best;
}

LexValue marked_edge_valuation(const ValuatedPolynomial& g, const LexValue& omega) {
    if (g.dim() != 1) throw DomainError("punctured-disc chart functions take one variable");
    if (omega.is_finite()) {
        if (omega.rank() != g.rank()) throw RankMismatch("marked_edge_valuation rank mismatch");
        if (omega < LexValue::zero(g.rank())) throw DomainError("parameter outside the edge");
    }
    return monomial_valuation(g, {omega});
}

LexValue chart_valuation(const MetricGraph& g, const std::vector<EdgeChart>& charts, const std::string& function,
                         const SkeletonPoint& p) {
    check_point(g, p);
    if (charts.size() != g.edges().size()) throw DomainError("one chart per edge is required");
    const auto& fns = charts[p.edge].functions;
    auto it = fns.find(function);
    if (it == fns.end()) throw DomainError("function '" + function + "' has no representative on edge " + std::to_string(p.edge));
    const auto& e = g.edges()[p.edge];
    if (e.marked()) return marked_edge_valuation(it->second, p.param);
    return edge_valuation(it->second, e.length, p.param);
}

SkeletonPath skeleton_path(const MetricGraph& g, const SkeletonPoint& from, const SkeletonPoint& to) {
    check_point(g, from);
    check_point(g, to);
    SkeletonPath path;
    if (same_point(g, from, to)) return path;
    if (!vertex_at(g, from) && !vertex_at(g, to) && from.edge == to.edge) {
        bool up = from.param < to.param;
        path.interval.pieces.push_back({up ? from.param : to.param, up ? to.param : from.param,
                                        up ? Orientation::Ascending : Orientation::Descending});
        path.edges.push_back(from.edge);
        return path;
    }
    auto starts = legs_out(g, from);
    auto ends = legs_in(g, to);
    std::size_t best = kNone;
    const Leg* best_start = nullptr;
    const Leg* best_end = nullptr;
    Search best_search;
    for (const auto& s : starts) {
        Search search = bfs(g, s.vertex);
        for (const auto& e : ends) {
            if (search.dist[e.vertex] == kNone) continue;
            std::size_t cost = search.dist[e.vertex] + s.has_piece + e.has_piece;
            if (cost < best) {
                best = cost;
                best_start = &s;
                best_end = &e;
                best_search = search;
            }
        }
    }
    if (best == kNone) throw Disconnected("the two skeleton points lie in different components");

    if (best_start->has_piece) {
        path.interval.pieces.push_back(best_start->piece);
        path.edges.push_back(best_start->edge);
    }
    std::vector<std::pair<std::size_t, std::size_t>> hops;  // (edge, vertex entered)
    for (std::size_t v = best_end->vertex; v != best_start->vertex; v = best_search.parent[v])
        hops.emplace_back(best_search.via_edge[v], v);
    std::reverse(hops.begin(), hops.end());
    for (const auto& [edge, entered] : hops) {
        const auto& e = g.edges()[edge];
        bool forward = e.head == entered && e.tail != entered;
        path.interval.pieces.push_back({LexValue::zero(g.rank()), e.length,
                                        forward ? Orientation::Ascending : Orientation::Descending});
        path.edges.push_back(edge);
    }
    if (best_end->has_piece) {
        path.interval.pieces.push_back(best_end->piece);
        path.edges.push_back(best_end->edge);
    }
    return path;
}

bool is_continuous(const MetricGraph& g, const SkeletonPath& path, const SkeletonPoint& from, const SkeletonPoint& to) {
    if (path.edges.size() != path.interval.size()) return false;
    if (path.edges.empty()) return same_point(g, from, to);
    for (std::size_t m = 0; m < path.edges.size(); ++m) {
        const auto& piece = path.interval.pieces[m];
        if (path.edges[m] >= g.edges().size() || piece.hi < piece.lo) return false;
        SkeletonPoint entry{path.edges[m], piece.entry()};
        SkeletonPoint exit{path.edges[m], piece.exit()};
        if (m == 0 && !same_point(g, entry, from)) return false;
        if (m + 1 == path.edges.size() && !same_point(g, exit, to)) return false;
        if (m + 1 < path.edges.size()) {
            SkeletonPoint next{path.edges[m + 1], path.interval.pieces[m + 1].entry()};
            auto v = vertex_at(g, exit);
            if (!v || vertex_at(g, next) != v) return false;
        }
    }
    return true;
}

std::vector<SkeletonPoint> sample_grid(const MetricGraph& g, std::size_t per_edge) {
    if (per_edge == 0) throw DomainError("at least one sample interval per edge is required");
    std::vector<SkeletonPoint> out;
    std::vector<bool> vertex_taken(g.vertices().size(), false);
    auto push = [&](std::size_t edge, LexValue param) {
        SkeletonPoint p{edge, std::move(param)};
        if (auto v = vertex_at(g, p)) {
            if (vertex_taken[*v]) return;
            vertex_taken[*v] = true;
        }
        out.push_back(std::move(p));
    };
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& edge = g.edges()[e];
        if (edge.marked()) {
            for (std::size_t i = 0; i < per_edge; ++i)
                push(e, integer_scale(static_cast<std::int64_t>(i), LexValue::unit(g.rank(), 0)));
            push(e, LexValue::infinity());
        } else {
            for (std::size_t i = 0; i <= per_edge; ++i)
                push(e, scale(Rational(static_cast<long>(i), static_cast<unsigned long>(per_edge)), edge.length));
        }
    }
    return out;
}

InjectivityReport faithful_injectivity_check(const MetricGraph& g, const std::vector<EdgeChart>& charts,
                                             const std::vector<std::string>& functions, std::size_t per_edge) {
    if (charts.size() != g.edges().size()) throw DomainError("one chart per edge is required");
    if (functions.empty()) throw DomainError("the function collection is empty");
    for (std::size_t e = 0; e < charts.size(); ++e) {
        const std::size_t want = g.edges()[e].marked() ? 1 : 2;
        for (const auto& f : functions) {
            auto it = charts[e].functions.find(f);
            if (it == charts[e].functions.end())
                throw DomainError("function '" + f + "' has no representative on edge " + std::to_string(e));
            if (it->second.dim() != want) throw DomainError("chart of '" + f + "' on edge " + std::to_string(e) + " has the wrong arity");
            if (it->second.rank() != g.rank()) throw RankMismatch("chart of '" + f + "' has the wrong rank");
        }
    }
    InjectivityReport report;
    auto samples = sample_grid(g, per_edge);
    report.samples = samples.size();
    std::map<std::vector<LexValue>, std::size_t> seen;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        std::vector<LexValue> value;
        value.reserve(functions.size());
        for (const auto& f : functions) value.push_back(chart_valuation(g, charts, f, samples[i]));
        auto [it, fresh] = seen.emplace(value, i);
        if (!fresh) {
            report.injective = false;
            report.witness = std::make_pair(samples[it->second], samples[i]);
            report.witness_value = std::move(value);
            return report;
        }
    }
    return report;
}

} // namespace lextrop
