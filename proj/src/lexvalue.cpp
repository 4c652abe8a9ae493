#include "lextrop/lexvalue.hpp"

#include "lextrop/error.hpp"

#include <cctype>
#include <ostream>

namespace lextrop {

namespace {

void require_same_rank(const LexValue& a, const LexValue& b, const char* op) {
    if (a.rank() != b.rank()) {
        throw RankMismatch(std::string(op) + ": rank " + std::to_string(a.rank()) + " vs rank " +
                           std::to_string(b.rank()));
    }
}

} // namespace

LexValue LexValue::infinity() {
    LexValue v;
    v.infinite_ = true;
    return v;
}

LexValue LexValue::zero(std::size_t rank) { return LexValue(std::vector<Rational>(rank)); }

LexValue LexValue::unit(std::size_t rank, std::size_t level) {
    if (level >= rank) throw DomainError("unit: level out of range");
    std::vector<Rational> c(rank);
    c[level] = 1;
    return LexValue(std::move(c));
}

bool LexValue::is_zero() const {
    if (infinite_) return false;
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

std::strong_ordering operator<=>(const LexValue& a, const LexValue& b) {
    if (a.infinite_ || b.infinite_) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    require_same_rank(a, b, "lex_cmp");
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        int c = cmp(a.coords_[i], b.coords_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool operator==(const LexValue& a, const LexValue& b) { return (a <=> b) == 0; }

std::strong_ordering lex_cmp(const LexValue& a, const LexValue& b) { return a <=> b; }

LexValue operator+(const LexValue& a, const LexValue& b) {
    if (a.is_infinite() || b.is_infinite()) return LexValue::infinity();
    require_same_rank(a, b, "lex_add");
    std::vector<Rational> c(a.rank());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return LexValue(std::move(c));
}

LexValue operator-(const LexValue& a) {
    if (a.is_infinite()) throw DomainError("cannot negate infinity");
    std::vector<Rational> c(a.rank());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a[i];
    return LexValue(std::move(c));
}

LexValue operator-(const LexValue& a, const LexValue& b) { return a + (-b); }

LexValue integer_scale(std::int64_t n, const LexValue& a) {
    if (a.is_infinite()) {
        if (n <= 0) throw DomainError("integer_scale: non-positive multiple of infinity");
        return a;
    }
    return scale(Rational(static_cast<long>(n)), a);
}

LexValue scale(const Rational& c, const LexValue& a) {
    if (a.is_infinite()) {
        if (c <= 0) throw DomainError("scale: non-positive multiple of infinity");
        return a;
    }
    std::vector<Rational> out(a.rank());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * a[i];
    return LexValue(std::move(out));
}

LexValue project(const LexValue& a, std::int64_t j) {
    if (j < 0) throw DomainError("project: negative target rank");
    if (a.is_infinite()) return a;
    if (static_cast<std::size_t>(j) > a.rank()) {
        throw DomainError("project: target rank " + std::to_string(j) + " exceeds rank " + std::to_string(a.rank()));
    }
    return LexValue(std::vector<Rational>(a.coords().begin(), a.coords().begin() + j));
}

const LexValue& lex_min(const LexValue& a, const LexValue& b) { return (b < a) ? b : a; }

LexValue parse_lexvalue(std::string_view text, std::size_t base_offset) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string_view body = text.substr(begin, end - begin);
    if (body == "inf") return LexValue::infinity();
    if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
        throw ParseError("expected 'inf' or '(q1,...,qk)'", base_offset + begin);
    }
    std::vector<Rational> coords;
    std::string_view inner = body.substr(1, body.size() - 2);
    std::size_t inner_offset = base_offset + begin + 1;
    bool blank = true;
    for (char ch : inner)
        if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) return LexValue(std::move(coords));
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = inner.find(',', pos);
        std::size_t stop = comma == std::string_view::npos ? inner.size() : comma;
        std::string_view field = inner.substr(pos, stop - pos);
        std::size_t lead = 0;
        while (lead < field.size() && std::isspace(static_cast<unsigned char>(field[lead]))) ++lead;
        std::size_t trail = field.size();
        while (trail > lead && std::isspace(static_cast<unsigned char>(field[trail - 1]))) --trail;
        coords.push_back(parse_rational(field.substr(lead, trail - lead), inner_offset + pos + lead));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return LexValue(std::move(coords));
}

std::string to_string(const LexValue& v) {
    if (v.is_infinite()) return "inf";
    std::string out = "(";
    for (std::size_t i = 0; i < v.rank(); ++i) {
        if (i) out += ',';
        out += v[i].get_str();
    }
    out += ')';
    return out;
}

std::ostream& operator<<(std::ostream& os, const LexValue& v) { return os << to_string(v); }

void RankContext::check(const LexValue& v) const {
    if (v.is_finite() && v.rank() != rank) {
        throw RankMismatch("value " + to_string(v) + " does not have context rank " + std::to_string(rank));
    }
}

} // namespace lextrop
