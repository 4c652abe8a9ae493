#include "lextrop/rational.hpp"

#include "lextrop/error.hpp"

#include <cctype>

namespace lextrop {

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text, std::size_t base_offset) {
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> Rational {
        throw ParseError(msg + " in rational '" + std::string(text) + "'", base_offset + i);
    };
    if (text.empty()) return fail("empty rational");
    std::string num;
    if (text[i] == '+' || text[i] == '-') {
        if (text[i] == '-') num.push_back('-');
        ++i;
    }
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num.push_back(text[i++]);
    if (i == digits_start) return fail("expected digits");
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        den.clear();
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den.push_back(text[i++]);
        if (i == den_start) return fail("expected denominator digits");
    }
    if (i != text.size()) return fail("unexpected character");
    Integer d(den);
    if (d == 0) {
        i = text.size();
        return fail("zero denominator");
    }
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational primitive_scale(std::span<const Rational> v) {
    Integer lcm_den = 1;
    for (const auto& x : v) {
        if (x != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    }
    Integer g = 0;
    for (const auto& x : v) {
        if (x == 0) continue;
        Integer scaled = x.get_num() * (lcm_den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    if (g == 0) return Rational(1);
    Rational c(lcm_den, g);
    c.canonicalize();
    return c;
}

std::vector<Integer> to_primitive_integers(std::span<const Rational> v) {
    Rational c = primitive_scale(v);
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        Rational y = c * x;
        out.push_back(y.get_num());
    }
    return out;
}

} // namespace lextrop
