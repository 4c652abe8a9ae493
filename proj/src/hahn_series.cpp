#include "lextrop/hahn_series.hpp"

#include "lextrop/error.hpp"

#include <cctype>

namespace lextrop {

namespace {

void require_rank(std::size_t expected, const LexValue& e) {
    if (e.is_infinite()) throw DomainError("Hahn series exponents must be finite");
    if (e.rank() != expected) {
        throw RankMismatch("exponent " + to_string(e) + " does not have rank " + std::to_string(expected));
    }
}

} // namespace

HahnSeries::HahnSeries(std::size_t rank, const TermMap& terms) : rank_(rank) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

HahnSeries HahnSeries::monomial(const Rational& coeff, const LexValue& exponent) {
    if (exponent.is_infinite()) throw DomainError("Hahn series exponents must be finite");
    HahnSeries f(exponent.rank());
    f.add_term(exponent, coeff);
    return f;
}

HahnSeries HahnSeries::constant(std::size_t rank, const Rational& c) { return monomial(c, LexValue::zero(rank)); }

Rational HahnSeries::coefficient(const LexValue& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HahnSeries::add_term(const LexValue& exponent, const Rational& coeff) {
    require_rank(rank_, exponent);
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

HahnSeries HahnSeries::truncate(std::size_t j) const {
    if (j > rank_) throw DomainError("truncate: target rank exceeds series rank");
    HahnSeries out(j);
    for (const auto& [e, c] : terms_) out.add_term(project(e, static_cast<std::int64_t>(j)), c);
    return out;
}

HahnSeries& HahnSeries::operator+=(const HahnSeries& other) {
    if (other.rank_ != rank_) throw RankMismatch("hs_add: rank mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

HahnSeries operator-(const HahnSeries& f) {
    HahnSeries out(f.rank_);
    for (const auto& [e, c] : f.terms_) out.terms_.emplace(e, -c);
    return out;
}

HahnSeries operator*(const HahnSeries& f, const HahnSeries& g) {
    if (f.rank_ != g.rank_) throw RankMismatch("hs_mul: rank mismatch");
    HahnSeries out(f.rank_);
    for (const auto& [e1, c1] : f.terms_)
        for (const auto& [e2, c2] : g.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

bool operator==(const HahnSeries& f, const HahnSeries& g) { return f.rank_ == g.rank_ && f.terms_ == g.terms_; }

HahnSeries hs_add(const HahnSeries& f, const HahnSeries& g) { return f + g; }
HahnSeries hs_mul(const HahnSeries& f, const HahnSeries& g) { return f * g; }

LexValue nu_mon(const HahnSeries& f) {
    if (f.is_zero()) return LexValue::infinity();
    // Coefficients are trivially valued; terms are kept lex-sorted.
    return f.terms().begin()->first;
}

HahnSeries parse_hahn_series(std::string_view text, std::size_t rank, std::size_t base_offset) {
    HahnSeries out(rank);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& msg) { throw ParseError(msg, base_offset + i); };
    skip_ws();
    if (i == text.size()) fail("empty Hahn series");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) {
            if (first) fail("empty Hahn series");
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-' between terms");
        }
        first = false;
        Rational coeff = 1;
        bool has_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t start = i;
            while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
            coeff = parse_rational(text.substr(start, i - start), base_offset + start);
            has_coeff = true;
            skip_ws();
        }
        LexValue exponent = LexValue::zero(rank);
        bool has_t = false;
        if (has_coeff && i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
            if (i >= text.size() || text[i] != 't') fail("expected 't' after '*'");
        }
        if (i < text.size() && text[i] == 't') {
            has_t = true;
            ++i;
            skip_ws();
            if (i >= text.size() || text[i] != '^') fail("expected '^' after 't'");
            ++i;
            skip_ws();
            std::size_t open = i;
            std::size_t close = text.find(')', open);
            if (open >= text.size() || text[open] != '(' || close == std::string_view::npos) fail("expected '(...)' exponent");
            exponent = parse_lexvalue(text.substr(open, close - open + 1), base_offset + open);
            if (exponent.is_infinite() || exponent.rank() != rank) {
                throw ParseError("exponent rank does not match " + std::to_string(rank), base_offset + open);
            }
            i = close + 1;
        }
        if (!has_coeff && !has_t) fail("expected a coefficient or 't^(...)'");
        HahnSeries term = HahnSeries::monomial(sign * coeff, exponent);
        out += term;
    }
    return out;
}

std::string to_string(const HahnSeries& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Rational mag = abs(c);
        if (c < 0) out += "-";
        else if (!first) out += "+";
        first = false;
        if (e.is_zero()) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "t^" + to_string(e);
    }
    return out;
}

} // namespace lextrop
