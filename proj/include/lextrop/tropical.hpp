#pragma once

#include "lextrop/hahn_series.hpp"
#include "lextrop/polyhedron.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace lextrop {

using Exponent = std::vector<std::int64_t>;

// A Laurent polynomial sum_u a_u x^u remembered only through the valuations
// nu(a_u) of its nonzero coefficients.
class ValuatedPolynomial {
public:
    ValuatedPolynomial(std::size_t rank, std::size_t dim) : rank_(rank), dim_(dim) {}
    ValuatedPolynomial(std::size_t rank, std::size_t dim, const std::map<Exponent, LexValue>& terms);

    // Valuations taken as nu_mon of each coefficient; zero coefficients are
    // dropped.
    static ValuatedPolynomial from_hahn(std::size_t rank, std::size_t dim, const std::map<Exponent, HahnSeries>& coeffs);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::map<Exponent, LexValue>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    void set_term(Exponent exponent, LexValue valuation);
    bool has_nonnegative_exponents() const;

    // All coefficient valuations projected to their first j coordinates.
    ValuatedPolynomial truncated(std::size_t j) const;

    friend bool operator==(const ValuatedPolynomial& a, const ValuatedPolynomial& b);

private:
    std::size_t rank_;
    std::size_t dim_;
    std::map<Exponent, LexValue> terms_;
};

// A polynomial with Hahn series coefficients, for computing products and sums
// before passing to valuations. Zero coefficients are not stored.
using HahnPolynomial = std::map<Exponent, HahnSeries>;

HahnPolynomial hp_add(const HahnPolynomial& f, const HahnPolynomial& g);
HahnPolynomial hp_mul(const HahnPolynomial& f, const HahnPolynomial& g);

// nu(a_u) + <u, w> for every term, in exponent order.
std::vector<LexValue> term_weights(const ValuatedPolynomial& p, const LexPoint& w);

// True iff the lex-minimum term weight at w is attained by at least two terms.
bool trop_membership(const ValuatedPolynomial& p, const LexPoint& w);

// Cells { w : weight_u = weight_v <= weight_m for all m } over term pairs,
// empties and non-maximal cells dropped, canonicalized and sorted.
LexComplex trop_hypersurface(const ValuatedPolynomial& p);

// Euclidean closure of the flattened tropical hypersurface.
std::vector<EuclideanPiece> banerjee_trop(const ValuatedPolynomial& p);

// (hypersurface at rank k, hypersurface of the rank-j truncation)
std::pair<LexComplex, LexComplex> trop_project(const ValuatedPolynomial& p, std::size_t j);

LexPoint project_point(const LexPoint& w, std::size_t j);

// Given a member w_low of the rank-j truncation's hypersurface, finds w with
// project_point(w, j) == w_low that is a member at rank k: the minimizing
// terms at rank j are tied again in the trailing coordinates by solving for a
// point of their rank-(k-j) hypersurface.
std::optional<LexPoint> lift_point(const ValuatedPolynomial& p, const LexPoint& w_low);

// A point of N(sigma) for the standard orthant: coordinates may be infinite.
using ExtendedPoint = std::vector<LexValue>;

// Terms with a positive exponent on an infinite coordinate are dropped; an
// empty restriction vanishes identically and counts as a member; otherwise
// the finite tie criterion applies to the remaining terms.
bool extended_trop_membership(const ValuatedPolynomial& p, const ExtendedPoint& w);

// min_u nu(a_u) + <u, omega> with infinity absorbing; inf for p = 0.
LexValue monomial_valuation(const ValuatedPolynomial& p, const ExtendedPoint& omega);

} // namespace lextrop
