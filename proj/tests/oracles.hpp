#pragma once

// Reference implementations used only by tests. They recompute answers from
// raw rational vectors instead of going through the library's own
// comparison, flattening and elimination code.

#include "lextrop/polyhedron.hpp"
#include "lextrop/tropical.hpp"

#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using lextrop::Integer;
using lextrop::LexPoint;
using lextrop::LexPolyhedron;
using lextrop::Rational;
using Vec = std::vector<Rational>;

inline int lex_compare(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

inline Vec raw(const lextrop::LexValue& v) { return v.coords(); }

// sum_i u_i w_i, level by level.
inline Vec pair_raw(const LexPoint& w, const std::vector<Integer>& u, std::size_t rank) {
    Vec out(rank);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t c = 0; c < rank; ++c) out[c] += Rational(u[i]) * w[i].coords()[c];
    return out;
}

inline bool halfspace_raw(const lextrop::LexHalfspace& h, const LexPoint& w, std::size_t rank) {
    if (h.bound.is_infinite()) return false;
    int c = lex_compare(pair_raw(w, h.slope, rank), raw(h.bound));
    switch (h.rel) {
    case lextrop::Relation::Ge: return c >= 0;
    case lextrop::Relation::Gt: return c > 0;
    case lextrop::Relation::Eq: return c == 0;
    }
    return false;
}

inline bool contains_raw(const LexPolyhedron& p, const LexPoint& w) {
    for (const auto& h : p.constraints())
        if (!halfspace_raw(h, w, p.rank())) return false;
    return true;
}

// Minimum of the term weights attained at least twice, on raw vectors.
inline bool membership(const lextrop::ValuatedPolynomial& p, const LexPoint& w) {
    std::vector<Vec> weights;
    for (const auto& [u, v] : p.terms()) {
        Vec x = raw(v);
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t c = 0; c < p.rank(); ++c) x[c] += Rational(static_cast<long>(u[i])) * w[i].coords()[c];
        weights.push_back(std::move(x));
    }
    if (weights.size() < 2) return false;
    std::size_t best = 0;
    for (std::size_t i = 1; i < weights.size(); ++i)
        if (lex_compare(weights[i], weights[best]) < 0) best = i;
    std::size_t ties = 0;
    for (const auto& x : weights) ties += lex_compare(x, weights[best]) == 0;
    return ties >= 2;
}

inline LexPoint unflatten(const Vec& x, std::size_t rank, std::size_t dim) {
    LexPoint w;
    for (std::size_t i = 0; i < dim; ++i) w.emplace_back(Vec(x.begin() + i * rank, x.begin() + (i + 1) * rank));
    return w;
}

inline Vec flatten(const LexPoint& w) {
    Vec x;
    for (const auto& v : w) x.insert(x.end(), v.coords().begin(), v.coords().end());
    return x;
}

// Exhaustive search of the grid (Z/den)^n within [-box, box]^n in flattened
// coordinates.
inline std::optional<LexPoint> grid_point(const LexPolyhedron& p, long box, long den) {
    const std::size_t n = p.rank() * p.dim();
    const long steps = 2 * box * den + 1;
    std::vector<long> idx(n, 0);
    while (true) {
        Vec x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = Rational(idx[i] - box * den, den);
        LexPoint w = unflatten(x, p.rank(), p.dim());
        if (contains_raw(p, w)) return w;
        std::size_t i = 0;
        while (i < n && ++idx[i] == steps) idx[i++] = 0;
        if (i == n) return std::nullopt;
    }
}

inline Rational squared_distance(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

// Looks for a point of P within distance eps of x along the segments from x
// to the anchors (points of P), at parameters 2^-m. When an anchor lies in
// the relative interior of the convex set P and x is in its closure, the
// whole half-open segment (x, anchor] lies in P, so some step succeeds.
inline std::optional<LexPoint> approximate(const LexPolyhedron& p, const Vec& x, const std::vector<LexPoint>& anchors,
                                           const Rational& eps) {
    const Rational eps2 = eps * eps;
    for (const auto& anchor : anchors) {
        Vec a = flatten(anchor);
        if (squared_distance(a, x) <= eps2) return anchor;
        Rational t = 1;
        for (int m = 0; m < 64; ++m, t /= 2) {
            Vec y(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + t * (a[i] - x[i]);
            if (squared_distance(y, x) > eps2) continue;
            LexPoint w = unflatten(y, p.rank(), p.dim());
            if (contains_raw(p, w)) return w;
            if (m > 40) break;
        }
    }
    return std::nullopt;
}

} // namespace oracle
