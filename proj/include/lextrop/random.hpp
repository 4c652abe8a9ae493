#pragma once

#include "lextrop/hahn_series.hpp"
#include "lextrop/polyhedron.hpp"
#include "lextrop/tropical.hpp"

#include <random>

namespace lextrop {

// Small random instances for property suites and benchmarks.

// Coordinates p/q with |p| <= span*q and q in {1, 2}.
LexValue random_lexvalue(std::mt19937_64& rng, std::size_t rank, int span = 3);
HahnSeries random_hahn_series(std::mt19937_64& rng, std::size_t rank, std::size_t max_terms = 5);
LexPoint random_point(std::mt19937_64& rng, std::size_t rank, std::size_t dim, int span = 3);

// Between 2 and max_terms distinct exponents in [0, max_degree]^dim with
// integer valuations in [-2, 2]^rank.
ValuatedPolynomial random_polynomial(std::mt19937_64& rng, std::size_t rank, std::size_t dim, std::size_t max_terms = 4,
                                     int max_degree = 2);

// Slopes in [-1, 1]^dim (nonzero), integer bounds in [-2, 2]^rank, mixed
// relations.
LexPolyhedron random_polyhedron(std::mt19937_64& rng, std::size_t rank, std::size_t dim, std::size_t constraints);

} // namespace lextrop
