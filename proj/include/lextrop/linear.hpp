#pragma once

#include "lextrop/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lextrop {

enum class Relation { Ge, Gt, Eq };

std::string to_string(Relation rel);

// coeffs . x  REL  rhs  over Q^n.
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Relation rel = Relation::Ge;
    Rational rhs;

    bool holds(std::span<const Rational> x) const;
    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

std::string to_string(const LinearConstraint& c);
// `a1,...,an REL b` with REL one of >=, >, =, <=, <; the last two are
// normalized by negation.
LinearConstraint parse_linear_constraint(std::string_view text, std::size_t base_offset = 0);

struct Bound {
    Rational value;
    bool strict = false;
};

// Picks a value for one variable during back-substitution, given the tightest
// lower and upper bounds implied by the variables already fixed. The bounds
// are always jointly satisfiable when a chooser is called.
using Chooser = std::function<Rational(const std::optional<Bound>& lo, const std::optional<Bound>& hi)>;

// Zero when admissible, otherwise the closed bound nearest zero, otherwise a
// point strictly inside the admissible interval.
Rational choose_near_zero(const std::optional<Bound>& lo, const std::optional<Bound>& hi);
// Midpoints and unit offsets; never lands on a bound unless forced.
Rational choose_interior(const std::optional<Bound>& lo, const std::optional<Bound>& hi);
// Random small-denominator choices; closed bounds are hit with positive
// probability so that boundary strata get sampled too.
Chooser make_random_chooser(std::mt19937_64& rng);

// Exact feasibility for a conjunction of linear constraints with strictness
// bookkeeping: Gaussian elimination of equations followed by Fourier-Motzkin
// elimination of the remaining inequalities. Returns a witness point on
// success.
std::optional<std::vector<Rational>> solve_linear(std::size_t dim, std::span<const LinearConstraint> constraints,
                                                  const Chooser& chooser = choose_near_zero);

// A convex subset of Q^n cut out by finitely many linear constraints, each
// strict or non-strict.
class EuclideanPiece {
public:
    EuclideanPiece() = default;
    explicit EuclideanPiece(std::size_t dim) : dim_(dim) {}
    EuclideanPiece(std::size_t dim, std::vector<LinearConstraint> constraints);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<LinearConstraint>& constraints() const noexcept { return constraints_; }
    void add(LinearConstraint c);

    bool contains(std::span<const Rational> x) const;
    bool is_empty() const;
    std::optional<std::vector<Rational>> find_point(const Chooser& chooser = choose_near_zero) const;

    // Strict constraints relaxed to non-strict; the Euclidean closure of a
    // nonempty piece.
    EuclideanPiece closure() const;
    bool is_closed() const;

    // Unique representation of the point set: implicit equations made
    // explicit and put in reduced row echelon form, inequalities reduced
    // modulo the equations, scaled to primitive integers, stripped of
    // redundancy and sorted. The empty set canonicalizes to {0 >= 1}.
    EuclideanPiece canonical() const;

    bool is_subset_of(const EuclideanPiece& other) const;

    // Projection onto the listed coordinates, in that order.
    EuclideanPiece project(std::span<const std::size_t> keep) const;

    std::vector<std::string> constraint_strings() const;

    friend bool operator==(const EuclideanPiece&, const EuclideanPiece&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<LinearConstraint> constraints_;
};

// Canonical pieces with empties and pieces contained in another piece
// removed, sorted by their constraint strings.
std::vector<EuclideanPiece> canonical_union(std::vector<EuclideanPiece> pieces);

} // namespace lextrop
