#include "lextrop/error.hpp"
#include "lextrop/lexvalue.hpp"
#include "lextrop/random.hpp"

#include <doctest.h>

#include <sstream>

using namespace lextrop;

namespace {

LexValue v2(long a, long b) { return LexValue{Rational(a), Rational(b)}; }

} // namespace

TEST_CASE("first coordinate dominates") {
    CHECK(lex_cmp(v2(1, -100), v2(0, 100)) == std::strong_ordering::greater);
    CHECK(lex_cmp(v2(0, 0), v2(0, 0)) == std::strong_ordering::equal);
    CHECK(lex_cmp(v2(0, -5), LexValue::infinity()) == std::strong_ordering::less);
    CHECK(lex_cmp(LexValue::infinity(), LexValue::infinity()) == std::strong_ordering::equal);
}

TEST_CASE("comparing different finite ranks is an error") {
    CHECK_THROWS_AS(lex_cmp(v2(0, 0), LexValue{Rational(0)}), RankMismatch);
    CHECK_THROWS_AS((void)(v2(0, 0) + LexValue{Rational(0)}), RankMismatch);
}

TEST_CASE("addition and scaling") {
    CHECK(v2(1, 2) + v2(3, -4) == v2(4, -2));
    CHECK((v2(5, 1) + LexValue::infinity()).is_infinite());
    CHECK(integer_scale(3, LexValue{Rational(0), Rational(1, 2)}) == LexValue{Rational(0), Rational(3, 2)});
    CHECK(integer_scale(2, LexValue::infinity()).is_infinite());
    CHECK_THROWS_AS(integer_scale(0, LexValue::infinity()), DomainError);
    CHECK_THROWS_AS(integer_scale(-1, LexValue::infinity()), DomainError);
    CHECK_THROWS_AS(-LexValue::infinity(), DomainError);
    CHECK(scale(Rational(1, 2), v2(3, -1)) == LexValue{Rational(3, 2), Rational(-1, 2)});
}

TEST_CASE("projection truncates") {
    CHECK(project(v2(3, -7), 1) == LexValue{Rational(3)});
    LexValue empty = project(v2(3, -7), 0);
    CHECK(empty.is_finite());
    CHECK(empty.rank() == 0);
    CHECK(to_string(empty) == "()");
    CHECK(project(LexValue::infinity(), 0).is_infinite());
    CHECK(project(LexValue{1, 2, 3}, 2) == v2(1, 2));
    CHECK_THROWS_AS(project(v2(1, 2), 3), DomainError);
    CHECK_THROWS_AS(project(v2(1, 2), -1), DomainError);
}

TEST_CASE("parsing and printing") {
    CHECK(parse_lexvalue("(0,1)") == v2(0, 1));
    CHECK(parse_lexvalue("inf").is_infinite());
    CHECK(parse_lexvalue(" ( 1/2 , -3 ) ") == LexValue{Rational(1, 2), Rational(-3)});
    CHECK(parse_lexvalue("()").rank() == 0);
    CHECK(to_string(LexValue{Rational(1, 2), Rational(-3)}) == "(1/2,-3)");
    CHECK(to_string(LexValue::infinity()) == "inf");
    std::ostringstream os;
    os << v2(4, 2);
    CHECK(os.str() == "(4,2)");
}

TEST_CASE("parse errors carry byte offsets") {
    try {
        parse_lexvalue("(1,x)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS(parse_lexvalue("(1,2"), ParseError);
    CHECK_THROWS_AS(parse_lexvalue("1,2"), ParseError);
    CHECK_THROWS_AS(parse_lexvalue("(1/0)"), ParseError);
}

TEST_CASE("rank context validates values") {
    RankContext ctx{2};
    CHECK_NOTHROW(ctx.check(v2(1, 1)));
    CHECK_NOTHROW(ctx.check(LexValue::infinity()));
    CHECK_THROWS_AS(ctx.check(LexValue{1, 2, 3}), RankMismatch);
}

TEST_CASE("order and group laws on random values") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        std::size_t k = 1 + rng() % 3;
        LexValue a = random_lexvalue(rng, k), b = random_lexvalue(rng, k), c = random_lexvalue(rng, k);
        // totality, antisymmetry, transitivity
        CHECK(((a <= b) || (b <= a)));
        if (a <= b && b <= a) CHECK(a == b);
        if (a <= b && b <= c) CHECK(a <= c);
        // group laws
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a + LexValue::zero(k) == a);
        CHECK(a + (-a) == LexValue::zero(k));
        // translation invariance of the order
        if (a < b) CHECK(a + c < b + c);
        // projection is order preserving and compatible with composition
        for (std::int64_t j = 0; j <= static_cast<std::int64_t>(k); ++j) {
            if (a < b) CHECK(project(a, j) <= project(b, j));
            for (std::int64_t i2 = 0; i2 <= j; ++i2) CHECK(project(project(a, j), i2) == project(a, i2));
        }
        CHECK(project(a, static_cast<std::int64_t>(k)) == a);
        CHECK(parse_lexvalue(to_string(a)) == a);
    }
}
