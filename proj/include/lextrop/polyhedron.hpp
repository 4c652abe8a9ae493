#pragma once

#include "lextrop/lexvalue.hpp"
#include "lextrop/linear.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lextrop {

// A point of (R^(k))^d: one finite rank-k value per variable.
using LexPoint = std::vector<LexValue>;

// <w, u> = sum_i u_i w_i.
LexValue pairing(const LexPoint& w, std::span<const Integer> slope);

// Flattened coordinates: variable i, level c lives at index i*k + c.
std::vector<Rational> flatten_point(const LexPoint& w, std::size_t rank);
LexPoint unflatten_point(std::span<const Rational> x, std::size_t rank, std::size_t dim);

// { w : <w, slope> REL bound }, compared lexicographically. An infinite bound
// is only meaningful with Relation::Eq and describes an empty set of finite
// points.
struct LexHalfspace {
    std::vector<Integer> slope;
    Relation rel = Relation::Ge;
    LexValue bound;

    static LexHalfspace ge(std::vector<Integer> slope, LexValue bound);
    static LexHalfspace gt(std::vector<Integer> slope, LexValue bound);
    static LexHalfspace le(std::vector<Integer> slope, const LexValue& bound);
    static LexHalfspace lt(std::vector<Integer> slope, const LexValue& bound);
    static LexHalfspace eq(std::vector<Integer> slope, LexValue bound);

    bool holds(const LexPoint& w) const;
    LexHalfspace boundary() const { return {slope, Relation::Eq, bound}; }

    friend bool operator==(const LexHalfspace& a, const LexHalfspace& b);
};

std::string to_string(const LexHalfspace& h);
// `u1,...,ud REL (d1,...,dk)`; `<=` and `<` are normalized by negation.
LexHalfspace parse_halfspace(std::string_view text, std::size_t base_offset = 0);

class LexPolyhedron {
public:
    LexPolyhedron(std::size_t rank, std::size_t dim) : rank_(rank), dim_(dim) {}
    LexPolyhedron(std::size_t rank, std::size_t dim, std::vector<LexHalfspace> constraints);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<LexHalfspace>& constraints() const noexcept { return constraints_; }
    void add(LexHalfspace h);

    bool contains(const LexPoint& w) const;

    // Disjoint Euclidean pieces of R^{k*d} whose union is this set.
    std::vector<EuclideanPiece> flatten() const;
    // Canonical closed pieces whose union is the Euclidean closure.
    std::vector<EuclideanPiece> euclidean_closure() const;

    // Exact emptiness, decided one rank level at a time.
    bool is_empty() const;
    // Deterministic rational point (nearest-zero choices level by level).
    std::optional<LexPoint> find_point() const;
    // Random rational point from a random nonempty flattened piece; may land
    // on lower-dimensional strata.
    std::optional<LexPoint> sample_point(std::mt19937_64& rng) const;

    LexPolyhedron intersect(const LexPolyhedron& other) const;
    // P intersected with every subset of its inequality boundaries, empties
    // removed, canonicalized and deduplicated. Includes P itself.
    std::vector<LexPolyhedron> faces() const;
    bool is_subset_of(const LexPolyhedron& other) const;
    bool same_set(const LexPolyhedron& other) const { return is_subset_of(other) && other.is_subset_of(*this); }

    // Equations in reduced echelon form, inequalities reduced modulo the
    // equations, slopes scaled to primitive integers, trivially true
    // constraints dropped, sorted and deduplicated.
    LexPolyhedron canonical() const;

    std::vector<std::string> constraint_strings() const;

    friend bool operator==(const LexPolyhedron& a, const LexPolyhedron& b);

private:
    void check_point(const LexPoint& w) const;

    std::size_t rank_;
    std::size_t dim_;
    std::vector<LexHalfspace> constraints_;
};

bool contains(const LexPolyhedron& p, const LexPoint& w);
std::vector<EuclideanPiece> flatten(const LexPolyhedron& p);
std::vector<EuclideanPiece> euclidean_closure(const LexPolyhedron& p);
LexPolyhedron intersect(const LexPolyhedron& p, const LexPolyhedron& q);
std::vector<LexPolyhedron> faces(const LexPolyhedron& p);
bool is_empty(const LexPolyhedron& p);

// A finite collection of maximal cells. Faces and pairwise intersections are
// derived on demand.
class LexComplex {
public:
    LexComplex(std::size_t rank, std::size_t dim) : rank_(rank), dim_(dim) {}
    LexComplex(std::size_t rank, std::size_t dim, std::vector<LexPolyhedron> cells);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<LexPolyhedron>& cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }

    std::optional<std::size_t> locate(const LexPoint& w) const;
    bool contains(const LexPoint& w) const { return locate(w).has_value(); }

    // Checks that cells are nonempty and that every nonempty pairwise
    // intersection is a face of both cells. Returns a diagnostic on failure.
    std::optional<std::string> validate() const;

    friend bool operator==(const LexComplex& a, const LexComplex& b);

private:
    std::size_t rank_;
    std::size_t dim_;
    std::vector<LexPolyhedron> cells_;
};

} // namespace lextrop
