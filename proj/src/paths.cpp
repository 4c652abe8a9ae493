#include "lextrop/paths.hpp"

#include "lextrop/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace lextrop {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

LexPoint advance(const LexPoint& start, const std::vector<Rational>& direction, const LexValue& dt) {
    LexPoint out;
    out.reserve(start.size());
    for (std::size_t i = 0; i < start.size(); ++i) out.push_back(start[i] + scale(direction[i], dt));
    return out;
}

void append_segment(PLPath& path, const LexPoint& start, std::vector<Rational> direction, const LexValue& length,
                    std::size_t cell) {
    LexValue lo = path.interval.empty() ? LexValue::zero(length.rank()) : path.interval.pieces.back().exit();
    LexValue hi = lo + length;
    path.interval.pieces.push_back({std::move(lo), std::move(hi), Orientation::Ascending});
    path.segments.push_back({start, std::move(direction), cell});
}

// Straight move when B - A has the form T (x) v with T in R^(k), v in Q^d.
bool try_straight(PLPath& path, const LexPoint& a, const LexPoint& b, std::size_t cell) {
    const std::size_t d = a.size();
    const std::size_t k = d == 0 ? 0 : a.front().rank();
    std::vector<std::vector<Rational>> levels(k, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i) {
        LexValue diff = b[i] - a[i];
        for (std::size_t c = 0; c < k; ++c) levels[c][i] = diff[c];
    }
    std::size_t lead = kNone;
    std::size_t pivot = kNone;
    for (std::size_t c = 0; c < k && lead == kNone; ++c)
        for (std::size_t i = 0; i < d; ++i)
            if (levels[c][i] != 0) {
                lead = c;
                pivot = i;
                break;
            }
    if (lead == kNone) return true;
    std::vector<Rational> lambda(k);
    for (std::size_t c = 0; c < k; ++c) {
        lambda[c] = levels[c][pivot] / levels[lead][pivot];
        for (std::size_t i = 0; i < d; ++i)
            if (levels[c][i] != lambda[c] * levels[lead][i]) return false;
    }
    Rational s = primitive_scale(levels[lead]);
    std::vector<Rational> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = s * levels[lead][i];
    std::vector<Rational> t(k);
    for (std::size_t c = 0; c < k; ++c) t[c] = lambda[c] / s;
    append_segment(path, a, std::move(v), LexValue(std::move(t)), cell);
    return true;
}

LexPoint with_level(const LexPoint& w, const LexPoint& source, std::size_t level) {
    LexPoint out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::vector<Rational> coords = w[i].coords();
        coords[level] = source[i][level];
        out.emplace_back(std::move(coords));
    }
    return out;
}

// Moves from a to b inside one convex cell. Otherwise goes through the
// midpoint: top level first on the way there and bottom level first on the
// way out. Every intermediate corner agrees with the midpoint on a prefix of
// levels and with a or b on the rest, which keeps each constraint either at
// its common value or strictly past its bound.
void append_move(PLPath& path, const LexPoint& a, const LexPoint& b, std::size_t cell) {
    if (a == b || try_straight(path, a, b, cell)) return;
    const std::size_t k = a.front().rank();
    LexPoint mid;
    mid.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mid.push_back(scale(Rational(1, 2), a[i] + b[i]));
    LexPoint cur = a;
    for (std::size_t c = 0; c < k; ++c) {
        LexPoint next = with_level(cur, mid, c);
        if (next != cur) try_straight(path, cur, next, cell);
        cur = std::move(next);
    }
    for (std::size_t c = k; c-- > 0;) {
        LexPoint next = with_level(cur, b, c);
        if (next != cur) try_straight(path, cur, next, cell);
        cur = std::move(next);
    }
}

} // namespace

bool GeneralizedInterval::is_chained() const {
    for (std::size_t m = 0; m < pieces.size(); ++m) {
        if (pieces[m].hi < pieces[m].lo) return false;
        if (m + 1 < pieces.size() && pieces[m].exit() != pieces[m + 1].entry()) return false;
    }
    return true;
}

LexPoint PLPath::point_at(std::size_t segment, const LexValue& t) const {
    const auto& seg = segments.at(segment);
    return advance(seg.start, seg.direction, t - interval.pieces.at(segment).lo);
}

LexPoint PLPath::segment_start(std::size_t segment) const {
    const auto& piece = interval.pieces.at(segment);
    return point_at(segment, piece.entry());
}

LexPoint PLPath::segment_end(std::size_t segment) const {
    const auto& piece = interval.pieces.at(segment);
    return point_at(segment, piece.exit());
}

std::size_t CellAdjacency::edge_count() const {
    std::size_t twice = 0;
    for (const auto& n : neighbors) twice += n.size();
    return twice / 2;
}

bool CellAdjacency::is_connected() const {
    if (neighbors.empty()) return true;
    std::vector<bool> seen(neighbors.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        std::size_t c = queue.front();
        queue.pop_front();
        for (std::size_t n : neighbors[c])
            if (!seen[n]) {
                seen[n] = true;
                ++count;
                queue.push_back(n);
            }
    }
    return count == neighbors.size();
}

CellAdjacency build_adjacency(const LexComplex& complex) {
    const auto& cells = complex.cells();
    CellAdjacency adj;
    adj.neighbors.resize(cells.size());
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = a + 1; b < cells.size(); ++b)
            if (!cells[a].intersect(cells[b]).is_empty()) {
                adj.neighbors[a].push_back(b);
                adj.neighbors[b].push_back(a);
            }
    return adj;
}

PLPath connect(const LexComplex& complex, const LexPoint& w1, const LexPoint& w2) {
    return connect(complex, build_adjacency(complex), w1, w2);
}

PLPath connect(const LexComplex& complex, const CellAdjacency& adjacency, const LexPoint& w1, const LexPoint& w2) {
    const auto& cells = complex.cells();
    if (adjacency.neighbors.size() != cells.size()) throw DomainError("adjacency does not match complex");
    std::vector<bool> source(cells.size()), target(cells.size());
    bool any_source = false, any_target = false;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        source[c] = cells[c].contains(w1);
        target[c] = cells[c].contains(w2);
        any_source = any_source || source[c];
        any_target = any_target || target[c];
    }
    if (!any_source) throw PointNotInComplex("start point lies in no cell of the complex");
    if (!any_target) throw PointNotInComplex("end point lies in no cell of the complex");

    PLPath path{w1, w2, {}, {}};
    if (w1 == w2) return path;

    std::vector<std::size_t> parent(cells.size(), kNone);
    std::vector<bool> seen(cells.size(), false);
    std::deque<std::size_t> queue;
    for (std::size_t c = 0; c < cells.size(); ++c)
        if (source[c]) {
            seen[c] = true;
            queue.push_back(c);
        }
    std::size_t reached = kNone;
    while (!queue.empty() && reached == kNone) {
        std::size_t c = queue.front();
        queue.pop_front();
        if (target[c]) {
            reached = c;
            break;
        }
        for (std::size_t n : adjacency.neighbors[c])
            if (!seen[n]) {
                seen[n] = true;
                parent[n] = c;
                queue.push_back(n);
            }
    }
    if (reached == kNone) throw Disconnected("no chain of intersecting cells joins the two points");

    std::vector<std::size_t> chain;
    for (std::size_t c = reached; c != kNone; c = parent[c]) chain.push_back(c);
    std::reverse(chain.begin(), chain.end());

    LexPoint cur = w1;
    for (std::size_t m = 0; m < chain.size(); ++m) {
        LexPoint next;
        if (m + 1 < chain.size()) {
            auto waypoint = cells[chain[m]].intersect(cells[chain[m + 1]]).find_point();
            if (!waypoint) throw std::logic_error("adjacent cells with empty intersection");
            next = std::move(*waypoint);
        } else {
            next = w2;
        }
        append_move(path, cur, next, chain[m]);
        cur = std::move(next);
    }
    return path;
}

PathVerdict verify_path(const PLPath& path, const LexComplex& complex) {
    auto fail = [](std::string why, std::optional<std::size_t> seg = std::nullopt,
                   std::optional<std::size_t> con = std::nullopt) { return PathVerdict{false, std::move(why), seg, con}; };
    try {
        if (path.from.size() != complex.dim() || path.to.size() != complex.dim()) return fail("endpoint dimension mismatch");
        if (path.segments.size() != path.interval.size()) return fail("segment count does not match interval pieces");
        if (!path.interval.is_chained()) return fail("parameter intervals are not chained");
        if (path.segments.empty()) {
            if (path.from != path.to) return fail("empty path between distinct points");
            if (!complex.contains(path.from)) return fail("point is not in the complex");
            return {};
        }
        for (std::size_t m = 0; m < path.segments.size(); ++m) {
            const auto& seg = path.segments[m];
            if (seg.cell >= complex.size()) return fail("segment refers to a missing cell", m);
            if (seg.start.size() != complex.dim() || seg.direction.size() != complex.dim())
                return fail("segment dimension mismatch", m);
            const auto& piece = path.interval.pieces[m];
            if (piece.lo.rank() != complex.rank() || piece.hi.rank() != complex.rank())
                return fail("parameter rank mismatch", m);
            LexPoint entry = path.segment_start(m);
            LexPoint exit = path.segment_end(m);
            if (m == 0 && entry != path.from) return fail("path does not start at the declared point", m);
            if (m + 1 == path.segments.size() && exit != path.to) return fail("path does not end at the declared point", m);
            if (m + 1 < path.segments.size() && exit != path.segment_start(m + 1))
                return fail("segments do not meet at the junction", m);
            const auto& constraints = complex.cells()[seg.cell].constraints();
            for (std::size_t j = 0; j < constraints.size(); ++j) {
                if (!constraints[j].holds(entry)) return fail("segment start violates " + to_string(constraints[j]), m, j);
                if (!constraints[j].holds(exit)) return fail("segment end violates " + to_string(constraints[j]), m, j);
            }
        }
    } catch (const Error& e) {
        return fail(std::string("malformed certificate: ") + e.what());
    }
    return {};
}

} // namespace lextrop
