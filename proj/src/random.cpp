#include "lextrop/random.hpp"

#include <set>

namespace lextrop {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

LexValue integer_lexvalue(std::mt19937_64& rng, std::size_t rank, int span) {
    std::vector<Rational> c(rank);
    for (auto& x : c) x = uniform(rng, -span, span);
    return LexValue(std::move(c));
}

} // namespace

LexValue random_lexvalue(std::mt19937_64& rng, std::size_t rank, int span) {
    std::vector<Rational> c(rank);
    for (auto& x : c) {
        int den = uniform(rng, 1, 2);
        x = make_rational(uniform(rng, -span * den, span * den), den);
    }
    return LexValue(std::move(c));
}

HahnSeries random_hahn_series(std::mt19937_64& rng, std::size_t rank, std::size_t max_terms) {
    HahnSeries f(rank);
    std::size_t n = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_terms)));
    for (std::size_t i = 0; i < n; ++i) {
        int c = uniform(rng, -4, 4);
        if (c == 0) c = 1;
        f += HahnSeries::monomial(make_rational(c, uniform(rng, 1, 3)), random_lexvalue(rng, rank, 2));
    }
    return f;
}

LexPoint random_point(std::mt19937_64& rng, std::size_t rank, std::size_t dim, int span) {
    LexPoint w;
    for (std::size_t i = 0; i < dim; ++i) w.push_back(random_lexvalue(rng, rank, span));
    return w;
}

ValuatedPolynomial random_polynomial(std::mt19937_64& rng, std::size_t rank, std::size_t dim, std::size_t max_terms,
                                     int max_degree) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 2, static_cast<int>(std::max<std::size_t>(max_terms, 2))));
    std::set<Exponent> used;
    ValuatedPolynomial p(rank, dim);
    std::size_t attempts = 0;
    while (used.size() < n && attempts++ < 100) {
        Exponent u(dim);
        for (auto& e : u) e = uniform(rng, 0, max_degree);
        if (!used.insert(u).second) continue;
        p.set_term(u, integer_lexvalue(rng, rank, 2));
    }
    return p;
}

LexPolyhedron random_polyhedron(std::mt19937_64& rng, std::size_t rank, std::size_t dim, std::size_t constraints) {
    LexPolyhedron p(rank, dim);
    for (std::size_t m = 0; m < constraints; ++m) {
        std::vector<Integer> slope(dim);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& s : slope) {
                s = uniform(rng, -1, 1);
                nonzero = nonzero || s != 0;
            }
        }
        LexValue bound = integer_lexvalue(rng, rank, 2);
        switch (uniform(rng, 0, 5)) {
        case 0: p.add(LexHalfspace::eq(slope, bound)); break;
        case 1:
        case 2: p.add(LexHalfspace::gt(slope, bound)); break;
        default: p.add(LexHalfspace::ge(slope, bound)); break;
        }
    }
    return p;
}

} // namespace lextrop
