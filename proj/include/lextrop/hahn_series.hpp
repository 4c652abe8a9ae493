#pragma once

#include "lextrop/lexvalue.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

namespace lextrop {

// A finite sum  sum_r a_r t^r  with exponents r in R^(k) and rational
// coefficients. The rationals are trivially valued, so the monomial valuation
// is the lex-least exponent in the support.
class HahnSeries {
public:
    using TermMap = std::map<LexValue, Rational>;

    explicit HahnSeries(std::size_t rank) : rank_(rank) {}
    HahnSeries(std::size_t rank, const TermMap& terms);

    static HahnSeries monomial(const Rational& coeff, const LexValue& exponent);
    static HahnSeries constant(std::size_t rank, const Rational& c);

    std::size_t rank() const noexcept { return rank_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const LexValue& exponent) const;

    // Truncates every exponent to its first j coordinates and collects like
    // terms (which may cancel).
    HahnSeries truncate(std::size_t j) const;

    HahnSeries& operator+=(const HahnSeries& other);
    friend HahnSeries operator+(HahnSeries f, const HahnSeries& g) { return f += g; }
    friend HahnSeries operator-(const HahnSeries& f);
    friend HahnSeries operator-(const HahnSeries& f, const HahnSeries& g) { return f + (-g); }
    friend HahnSeries operator*(const HahnSeries& f, const HahnSeries& g);
    friend bool operator==(const HahnSeries& f, const HahnSeries& g);

private:
    void add_term(const LexValue& exponent, const Rational& coeff);

    std::size_t rank_;
    TermMap terms_;
};

HahnSeries hs_add(const HahnSeries& f, const HahnSeries& g);
HahnSeries hs_mul(const HahnSeries& f, const HahnSeries& g);

// inf for the zero series, otherwise min over the support of the exponent.
LexValue nu_mon(const HahnSeries& f);

// Accepts sums of `c*t^(e1,...,ek)`, `t^(...)`, and bare rational constants,
// e.g. `3*t^(0,1)+5*t^(1,0)` or `-1/2*t^(1,-1) + 7`.
HahnSeries parse_hahn_series(std::string_view text, std::size_t rank, std::size_t base_offset = 0);
std::string to_string(const HahnSeries& f);

} // namespace lextrop
