#pragma once

#include "lextrop/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lextrop {

// An element of R^(k) with lexicographic order, or the global maximum
// infinity. Rank-0 finite values (the empty tuple) arise only as projection
// targets; together with infinity they form the two-point space {0, inf}.
class LexValue {
public:
    LexValue() = default;
    explicit LexValue(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    LexValue(std::initializer_list<Rational> coords) : coords_(coords) {}

    static LexValue infinity();
    static LexValue zero(std::size_t rank);
    // The value with 1 in coordinate `level` and 0 elsewhere.
    static LexValue unit(std::size_t rank, std::size_t level);

    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }
    bool is_zero() const;
    // Number of coordinates; 0 for infinity, which is rank-agnostic.
    std::size_t rank() const noexcept { return coords_.size(); }
    const std::vector<Rational>& coords() const noexcept { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_.at(i); }

    friend std::strong_ordering operator<=>(const LexValue& a, const LexValue& b);
    friend bool operator==(const LexValue& a, const LexValue& b);

private:
    std::vector<Rational> coords_;
    bool infinite_ = false;
};

// Throws RankMismatch when both values are finite with different ranks.
std::strong_ordering lex_cmp(const LexValue& a, const LexValue& b);

LexValue operator+(const LexValue& a, const LexValue& b);
LexValue operator-(const LexValue& a);
LexValue operator-(const LexValue& a, const LexValue& b);
LexValue integer_scale(std::int64_t n, const LexValue& a);
LexValue scale(const Rational& c, const LexValue& a);

// Truncation to the first j coordinates (the order-preserving projection to
// R^(j)). Infinity is fixed; j = 0 collapses finite values to the empty tuple.
LexValue project(const LexValue& a, std::int64_t j);

const LexValue& lex_min(const LexValue& a, const LexValue& b);

// `inf`, or `(p1/q1,...,pk/qk)`; `()` denotes the rank-0 zero.
LexValue parse_lexvalue(std::string_view text, std::size_t base_offset = 0);
std::string to_string(const LexValue& v);
std::ostream& operator<<(std::ostream& os, const LexValue& v);

enum class CoefficientField { TriviallyValuedRationals, HahnCoefficients };

struct RankContext {
    std::size_t rank = 1;
    CoefficientField field = CoefficientField::TriviallyValuedRationals;

    // Throws RankMismatch unless v is infinite or has this context's rank.
    void check(const LexValue& v) const;
};

} // namespace lextrop
