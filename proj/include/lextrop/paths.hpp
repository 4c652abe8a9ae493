#pragma once

#include "lextrop/polyhedron.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lextrop {

enum class Orientation { Ascending, Descending };

// One closed lex interval [lo, hi] traversed from lo to hi (ascending) or
// from hi to lo (descending).
struct OrientedInterval {
    LexValue lo;
    LexValue hi;
    Orientation orientation = Orientation::Ascending;

    const LexValue& entry() const { return orientation == Orientation::Ascending ? lo : hi; }
    const LexValue& exit() const { return orientation == Orientation::Ascending ? hi : lo; }
};

// A finite chain of closed lex intervals glued exit-to-entry.
struct GeneralizedInterval {
    std::vector<OrientedInterval> pieces;

    bool empty() const noexcept { return pieces.empty(); }
    std::size_t size() const noexcept { return pieces.size(); }
    // Every piece has lo <= hi and each exit equals the next entry.
    bool is_chained() const;
};

// t -> start + (t - lo) * direction for t in the matching interval piece,
// staying inside cell `cell` of the complex.
struct PLSegment {
    LexPoint start;
    std::vector<Rational> direction;
    std::size_t cell = 0;
};

struct PLPath {
    LexPoint from;
    LexPoint to;
    GeneralizedInterval interval;
    std::vector<PLSegment> segments;

    LexPoint point_at(std::size_t segment, const LexValue& t) const;
    LexPoint segment_start(std::size_t segment) const;
    LexPoint segment_end(std::size_t segment) const;
};

// Undirected graph on cell indices; an edge joins cells whose intersection is
// nonempty.
struct CellAdjacency {
    std::vector<std::vector<std::size_t>> neighbors;

    std::size_t edge_count() const;
    bool is_connected() const;
};

CellAdjacency build_adjacency(const LexComplex& complex);

// Piecewise-linear path from w1 to w2 inside the complex. Throws
// PointNotInComplex or Disconnected.
PLPath connect(const LexComplex& complex, const LexPoint& w1, const LexPoint& w2);
PLPath connect(const LexComplex& complex, const CellAdjacency& adjacency, const LexPoint& w1, const LexPoint& w2);

struct PathVerdict {
    bool ok = true;
    std::string diagnostic;
    std::optional<std::size_t> segment;
    std::optional<std::size_t> constraint;

    explicit operator bool() const noexcept { return ok; }
};

// Checks the certificate independently of how it was built: endpoints,
// chaining, continuity at junctions, and that every constraint of the
// segment's cell holds at both ends. Along a segment each constraint value is
// <u, start> + (t - lo) * (u . direction), monotone in t, so holding at both
// ends means holding throughout.
PathVerdict verify_path(const PLPath& path, const LexComplex& complex);

} // namespace lextrop
