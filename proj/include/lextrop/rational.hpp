#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lextrop {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Parses `p` or `p/q` (optional leading sign, q > 0). `base_offset` is added
// to error offsets so callers can report positions within a larger buffer.
Rational parse_rational(std::string_view text, std::size_t base_offset = 0);

std::string to_string(const Rational& q);

// Smallest positive rational c such that c * v is an integer vector with
// coprime entries. Returns 1 for the zero vector.
Rational primitive_scale(std::span<const Rational> v);

std::vector<Integer> to_primitive_integers(std::span<const Rational> v);

} // namespace lextrop
