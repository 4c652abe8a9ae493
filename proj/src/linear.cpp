#include "lextrop/linear.hpp"

#include "lextrop/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace lextrop {

namespace {

// a . x >= b, or > b when strict.
struct Row {
    std::vector<Rational> a;
    Rational b;
    bool strict = false;
};

Rational floor_q(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(r);
}

Rational ceil_q(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(r);
}

bool is_zero_vector(std::span<const Rational> a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

Rational dot(std::span<const Rational> a, std::span<const Rational> x) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += a[i] * x[i];
    return s;
}

// Normalizes, merges parallel rows keeping the tightest, drops trivially true
// constant rows. Returns false when a constant row is violated.
bool tidy(std::vector<Row>& rows) {
    std::map<std::vector<Rational>, Row> best;
    for (auto& r : rows) {
        auto lead = std::find_if(r.a.begin(), r.a.end(), [](const Rational& x) { return x != 0; });
        if (lead == r.a.end()) {
            bool ok = r.strict ? (r.b < 0) : (r.b <= 0);
            if (!ok) return false;
            continue;
        }
        Rational scale = abs(*lead);
        if (scale != 1) {
            for (auto& x : r.a) x /= scale;
            r.b /= scale;
        }
        auto [it, inserted] = best.try_emplace(r.a, r);
        if (!inserted) {
            Row& cur = it->second;
            if (r.b > cur.b || (r.b == cur.b && r.strict)) {
                cur.b = r.b;
                cur.strict = r.strict;
            }
        }
    }
    rows.clear();
    rows.reserve(best.size());
    for (auto& [key, r] : best) rows.push_back(std::move(r));
    return true;
}

// Fourier-Motzkin step removing variable v.
std::vector<Row> eliminate(const std::vector<Row>& rows, std::size_t v) {
    std::vector<Row> out;
    std::vector<const Row*> pos, neg;
    for (const auto& r : rows) {
        if (r.a[v] > 0) pos.push_back(&r);
        else if (r.a[v] < 0) neg.push_back(&r);
        else out.push_back(r);
    }
    for (const Row* p : pos) {
        for (const Row* n : neg) {
            Rational sp = 1 / p->a[v];
            Rational sn = -1 / n->a[v];
            Row r;
            r.a.resize(p->a.size());
            for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] = sp * p->a[j] + sn * n->a[j];
            r.a[v] = 0;
            r.b = sp * p->b + sn * n->b;
            r.strict = p->strict || n->strict;
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::optional<std::size_t> pick_variable(const std::vector<Row>& rows, std::size_t dim) {
    std::optional<std::size_t> best;
    long best_cost = 0;
    for (std::size_t j = 0; j < dim; ++j) {
        long pos = 0, neg = 0;
        for (const auto& r : rows) {
            if (r.a[j] > 0) ++pos;
            else if (r.a[j] < 0) ++neg;
        }
        if (pos + neg == 0) continue;
        long cost = pos * neg - pos - neg;
        if (!best || cost < best_cost) {
            best = j;
            best_cost = cost;
        }
    }
    return best;
}

// x_var = constant + coeffs . x
struct Substitution {
    std::size_t var;
    Rational constant;
    std::vector<Rational> coeffs;
};

void apply(const Substitution& s, std::vector<Rational>& a, Rational& rhs) {
    Rational f = a[s.var];
    if (f == 0) return;
    a[s.var] = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (s.coeffs[j] != 0) a[j] += f * s.coeffs[j];
    rhs -= f * s.constant;
}

void tighten(std::optional<Bound>& slot, const Rational& value, bool strict, bool lower) {
    if (!slot) {
        slot = Bound{value, strict};
        return;
    }
    bool better = lower ? value > slot->value : value < slot->value;
    if (better) *slot = Bound{value, strict};
    else if (value == slot->value && strict) slot->strict = true;
}

std::vector<Row> to_rows(std::span<const LinearConstraint> constraints) {
    std::vector<Row> rows;
    for (const auto& c : constraints) {
        switch (c.rel) {
        case Relation::Ge: rows.push_back({c.coeffs, c.rhs, false}); break;
        case Relation::Gt: rows.push_back({c.coeffs, c.rhs, true}); break;
        case Relation::Eq: {
            rows.push_back({c.coeffs, c.rhs, false});
            Row neg{c.coeffs, -c.rhs, false};
            for (auto& x : neg.a) x = -x;
            rows.push_back(std::move(neg));
            break;
        }
        }
    }
    return rows;
}

LinearConstraint negate_rel(const std::vector<Rational>& a, const Rational& b, Relation rel) {
    // not (a.x >= b)  <=>  -a.x > -b ;  not (a.x > b)  <=>  -a.x >= -b
    LinearConstraint out{a, rel == Relation::Ge ? Relation::Gt : Relation::Ge, -b};
    for (auto& x : out.coeffs) x = -x;
    return out;
}

// The complement of one constraint as a union of at most two constraints.
std::vector<LinearConstraint> complement(const LinearConstraint& c) {
    switch (c.rel) {
    case Relation::Ge:
    case Relation::Gt: return {negate_rel(c.coeffs, c.rhs, c.rel)};
    case Relation::Eq: {
        LinearConstraint above{c.coeffs, Relation::Gt, c.rhs};
        return {above, negate_rel(c.coeffs, c.rhs, Relation::Ge)};
    }
    }
    return {};
}

int relation_rank(Relation rel) {
    switch (rel) {
    case Relation::Eq: return 0;
    case Relation::Ge: return 1;
    case Relation::Gt: return 2;
    }
    return 3;
}

bool constraint_less(const LinearConstraint& x, const LinearConstraint& y) {
    if (x.rel != y.rel) return relation_rank(x.rel) < relation_rank(y.rel);
    if (x.coeffs != y.coeffs) return x.coeffs < y.coeffs;
    return x.rhs < y.rhs;
}

} // namespace

std::string to_string(Relation rel) {
    switch (rel) {
    case Relation::Ge: return ">=";
    case Relation::Gt: return ">";
    case Relation::Eq: return "=";
    }
    return "?";
}

bool LinearConstraint::holds(std::span<const Rational> x) const {
    Rational lhs = dot(coeffs, x);
    switch (rel) {
    case Relation::Ge: return lhs >= rhs;
    case Relation::Gt: return lhs > rhs;
    case Relation::Eq: return lhs == rhs;
    }
    return false;
}

std::string to_string(const LinearConstraint& c) {
    std::string out;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        if (i) out += ',';
        out += c.coeffs[i].get_str();
    }
    out += ' ' + to_string(c.rel) + ' ' + c.rhs.get_str();
    return out;
}

LinearConstraint parse_linear_constraint(std::string_view text, std::size_t base_offset) {
    std::size_t op = text.find_first_of("<>=");
    if (op == std::string_view::npos) throw ParseError("expected a relation (>=, >, =, <=, <)", base_offset);
    std::size_t op_end = op + 1;
    if (op_end < text.size() && text[op_end] == '=' && text[op] != '=') ++op_end;
    std::string_view rel_text = text.substr(op, op_end - op);
    LinearConstraint c;
    std::size_t pos = 0;
    std::string_view lhs = text.substr(0, op);
    while (true) {
        std::size_t comma = lhs.find(',', pos);
        std::size_t stop = comma == std::string_view::npos ? lhs.size() : comma;
        std::string_view field = lhs.substr(pos, stop - pos);
        std::size_t lead = 0, trail = field.size();
        while (lead < trail && std::isspace(static_cast<unsigned char>(field[lead]))) ++lead;
        while (trail > lead && std::isspace(static_cast<unsigned char>(field[trail - 1]))) --trail;
        c.coeffs.push_back(parse_rational(field.substr(lead, trail - lead), base_offset + pos + lead));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    std::string_view rhs = text.substr(op_end);
    std::size_t lead = 0, trail = rhs.size();
    while (lead < trail && std::isspace(static_cast<unsigned char>(rhs[lead]))) ++lead;
    while (trail > lead && std::isspace(static_cast<unsigned char>(rhs[trail - 1]))) --trail;
    c.rhs = parse_rational(rhs.substr(lead, trail - lead), base_offset + op_end + lead);
    bool flip = false;
    if (rel_text == ">=") c.rel = Relation::Ge;
    else if (rel_text == ">") c.rel = Relation::Gt;
    else if (rel_text == "=") c.rel = Relation::Eq;
    else if (rel_text == "<=") c.rel = Relation::Ge, flip = true;
    else if (rel_text == "<") c.rel = Relation::Gt, flip = true;
    else throw ParseError("unknown relation '" + std::string(rel_text) + "'", base_offset + op);
    if (flip) {
        for (auto& x : c.coeffs) x = -x;
        c.rhs = -c.rhs;
    }
    return c;
}

Rational choose_near_zero(const std::optional<Bound>& lo, const std::optional<Bound>& hi) {
    if (lo && hi && lo->value == hi->value) return lo->value;
    bool above_lo = !lo || lo->value < 0 || (lo->value == 0 && !lo->strict);
    bool below_hi = !hi || hi->value > 0 || (hi->value == 0 && !hi->strict);
    if (above_lo && below_hi) return 0;
    if (!above_lo) {
        if (!lo->strict) return lo->value;
        if (hi) return (lo->value + hi->value) / 2;
        return floor_q(lo->value) + 1;
    }
    if (!hi->strict) return hi->value;
    if (lo) return (lo->value + hi->value) / 2;
    return ceil_q(hi->value) - 1;
}

Rational choose_interior(const std::optional<Bound>& lo, const std::optional<Bound>& hi) {
    if (lo && hi) return (lo->value + hi->value) / 2;
    if (lo) return floor_q(lo->value) + 1;
    if (hi) return ceil_q(hi->value) - 1;
    return 0;
}

Chooser make_random_chooser(std::mt19937_64& rng) {
    return [&rng](const std::optional<Bound>& lo, const std::optional<Bound>& hi) -> Rational {
        if (lo && hi && lo->value == hi->value) return lo->value;
        std::uniform_int_distribution<int> pick(0, 7);
        int roll = pick(rng);
        if (roll == 0 && lo && !lo->strict) return lo->value;
        if (roll == 1 && hi && !hi->strict) return hi->value;
        if (lo && hi) {
            std::uniform_int_distribution<long> frac(1, 7);
            return lo->value + (hi->value - lo->value) * make_rational(frac(rng), 8);
        }
        std::uniform_int_distribution<long> step(1, 16);
        if (lo) return lo->value + make_rational(step(rng), 4);
        if (hi) return hi->value - make_rational(step(rng), 4);
        std::uniform_int_distribution<long> free(-10, 10);
        return make_rational(free(rng), 2);
    };
}

std::optional<std::vector<Rational>> solve_linear(std::size_t dim, std::span<const LinearConstraint> constraints,
                                                  const Chooser& chooser) {
    std::vector<Substitution> subs;
    std::vector<Row> rows;
    std::vector<bool> is_pivot(dim, false);

    for (const auto& c : constraints) {
        if (c.coeffs.size() != dim) throw DomainError("linear constraint dimension mismatch");
        if (c.rel != Relation::Eq) continue;
        std::vector<Rational> a = c.coeffs;
        Rational rhs = c.rhs;
        for (const auto& s : subs) apply(s, a, rhs);
        auto lead = std::find_if(a.begin(), a.end(), [](const Rational& x) { return x != 0; });
        if (lead == a.end()) {
            if (rhs != 0) return std::nullopt;
            continue;
        }
        std::size_t p = static_cast<std::size_t>(lead - a.begin());
        Substitution s{p, rhs / a[p], std::vector<Rational>(dim)};
        for (std::size_t j = 0; j < dim; ++j)
            if (j != p && a[j] != 0) s.coeffs[j] = -a[j] / a[p];
        is_pivot[p] = true;
        subs.push_back(std::move(s));
    }
    for (const auto& c : constraints) {
        if (c.rel == Relation::Eq) continue;
        Row r{c.coeffs, c.rhs, c.rel == Relation::Gt};
        for (const auto& s : subs) apply(s, r.a, r.b);
        rows.push_back(std::move(r));
    }

    if (!tidy(rows)) return std::nullopt;
    std::vector<std::vector<Row>> stages;
    std::vector<std::size_t> order;
    while (auto v = pick_variable(rows, dim)) {
        std::vector<Row> next = eliminate(rows, *v);
        stages.push_back(std::move(rows));
        order.push_back(*v);
        if (!tidy(next)) return std::nullopt;
        rows = std::move(next);
    }

    // Variables that never get eliminated are unconstrained by the projected
    // system; fix them before back-substitution reads them.
    std::vector<Rational> x(dim);
    std::vector<bool> assigned(dim, false);
    for (std::size_t v : order) assigned[v] = true;
    for (std::size_t j = 0; j < dim; ++j)
        if (!assigned[j] && !is_pivot[j]) x[j] = chooser(std::nullopt, std::nullopt);
    for (std::size_t s = stages.size(); s-- > 0;) {
        std::size_t v = order[s];
        std::optional<Bound> lo, hi;
        for (const auto& r : stages[s]) {
            if (r.a[v] == 0) continue;
            Rational rest = r.b;
            for (std::size_t j = 0; j < dim; ++j)
                if (j != v && r.a[j] != 0) rest -= r.a[j] * x[j];
            Rational bound = rest / r.a[v];
            tighten(r.a[v] > 0 ? lo : hi, bound, r.strict, r.a[v] > 0);
        }
        x[v] = chooser(lo, hi);
    }
    for (std::size_t s = subs.size(); s-- > 0;) {
        const auto& sub = subs[s];
        Rational val = sub.constant;
        for (std::size_t j = 0; j < dim; ++j)
            if (sub.coeffs[j] != 0) val += sub.coeffs[j] * x[j];
        x[sub.var] = val;
    }
    for (const auto& c : constraints) {
        if (!c.holds(x)) throw std::logic_error("solve_linear produced a point violating " + to_string(c));
    }
    return x;
}

EuclideanPiece::EuclideanPiece(std::size_t dim, std::vector<LinearConstraint> constraints) : dim_(dim) {
    for (auto& c : constraints) add(std::move(c));
}

void EuclideanPiece::add(LinearConstraint c) {
    if (c.coeffs.size() != dim_) throw DomainError("constraint dimension does not match piece dimension");
    constraints_.push_back(std::move(c));
}

bool EuclideanPiece::contains(std::span<const Rational> x) const {
    if (x.size() != dim_) throw DomainError("point dimension does not match piece dimension");
    return std::all_of(constraints_.begin(), constraints_.end(), [&](const LinearConstraint& c) { return c.holds(x); });
}

bool EuclideanPiece::is_empty() const { return !solve_linear(dim_, constraints_).has_value(); }

std::optional<std::vector<Rational>> EuclideanPiece::find_point(const Chooser& chooser) const {
    return solve_linear(dim_, constraints_, chooser);
}

EuclideanPiece EuclideanPiece::closure() const {
    EuclideanPiece out = *this;
    for (auto& c : out.constraints_)
        if (c.rel == Relation::Gt) c.rel = Relation::Ge;
    return out;
}

bool EuclideanPiece::is_closed() const {
    return std::none_of(constraints_.begin(), constraints_.end(),
                        [](const LinearConstraint& c) { return c.rel == Relation::Gt; });
}

EuclideanPiece EuclideanPiece::canonical() const {
    if (is_empty()) {
        return EuclideanPiece(dim_, {LinearConstraint{std::vector<Rational>(dim_), Relation::Ge, Rational(1)}});
    }
    std::vector<LinearConstraint> cs = constraints_;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].rel != Relation::Ge) continue;
        std::vector<LinearConstraint> probe = cs;
        probe[i].rel = Relation::Gt;
        if (!solve_linear(dim_, probe)) cs[i].rel = Relation::Eq;
    }

    std::vector<LinearConstraint> eqs, ineqs;
    for (auto& c : cs) (c.rel == Relation::Eq ? eqs : ineqs).push_back(std::move(c));

    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim_ && rank < eqs.size(); ++col) {
        std::size_t r = rank;
        while (r < eqs.size() && eqs[r].coeffs[col] == 0) ++r;
        if (r == eqs.size()) continue;
        std::swap(eqs[r], eqs[rank]);
        Rational p = eqs[rank].coeffs[col];
        for (auto& x : eqs[rank].coeffs) x /= p;
        eqs[rank].rhs /= p;
        for (std::size_t o = 0; o < eqs.size(); ++o) {
            if (o == rank || eqs[o].coeffs[col] == 0) continue;
            Rational f = eqs[o].coeffs[col];
            for (std::size_t j = 0; j < dim_; ++j) eqs[o].coeffs[j] -= f * eqs[rank].coeffs[j];
            eqs[o].rhs -= f * eqs[rank].rhs;
        }
        pivots.push_back(col);
        ++rank;
    }
    eqs.resize(rank);

    std::vector<LinearConstraint> reduced;
    for (auto& c : ineqs) {
        for (std::size_t r = 0; r < rank; ++r) {
            Rational f = c.coeffs[pivots[r]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) c.coeffs[j] -= f * eqs[r].coeffs[j];
            c.rhs -= f * eqs[r].rhs;
        }
        if (is_zero_vector(c.coeffs)) continue;
        Rational s = primitive_scale(c.coeffs);
        for (auto& x : c.coeffs) x *= s;
        c.rhs *= s;
        reduced.push_back(std::move(c));
    }
    for (auto& e : eqs) {
        Rational s = primitive_scale(e.coeffs);
        for (auto& x : e.coeffs) x *= s;
        e.rhs *= s;
    }
    std::sort(reduced.begin(), reduced.end(), constraint_less);
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

    std::vector<bool> kept(reduced.size(), true);
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<LinearConstraint> probe = eqs;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i && kept[j]) probe.push_back(reduced[j]);
        probe.push_back(complement(reduced[i]).front());
        if (!solve_linear(dim_, probe)) kept[i] = false;
    }

    std::sort(eqs.begin(), eqs.end(), constraint_less);
    EuclideanPiece out(dim_);
    for (auto& e : eqs) out.constraints_.push_back(std::move(e));
    for (std::size_t i = 0; i < reduced.size(); ++i)
        if (kept[i]) out.constraints_.push_back(std::move(reduced[i]));
    return out;
}

bool EuclideanPiece::is_subset_of(const EuclideanPiece& other) const {
    if (other.dim_ != dim_) throw DomainError("is_subset_of: dimension mismatch");
    for (const auto& c : other.constraints_) {
        for (auto& neg : complement(c)) {
            std::vector<LinearConstraint> probe = constraints_;
            probe.push_back(std::move(neg));
            if (solve_linear(dim_, probe)) return false;
        }
    }
    return true;
}

EuclideanPiece EuclideanPiece::project(std::span<const std::size_t> keep) const {
    std::vector<bool> keep_mask(dim_, false);
    for (auto k : keep) {
        if (k >= dim_) throw DomainError("project: coordinate out of range");
        keep_mask[k] = true;
    }
    std::vector<Row> rows = to_rows(constraints_);
    bool feasible = tidy(rows);
    for (std::size_t v = 0; v < dim_ && feasible; ++v) {
        if (keep_mask[v]) continue;
        rows = eliminate(rows, v);
        feasible = tidy(rows);
    }
    EuclideanPiece out(keep.size());
    if (!feasible) {
        out.add(LinearConstraint{std::vector<Rational>(keep.size()), Relation::Ge, Rational(1)});
        return out;
    }
    for (const auto& r : rows) {
        std::vector<Rational> a(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) a[i] = r.a[keep[i]];
        out.add(LinearConstraint{std::move(a), r.strict ? Relation::Gt : Relation::Ge, r.b});
    }
    return out;
}

std::vector<std::string> EuclideanPiece::constraint_strings() const {
    std::vector<std::string> out;
    out.reserve(constraints_.size());
    for (const auto& c : constraints_) out.push_back(to_string(c));
    return out;
}

std::vector<EuclideanPiece> canonical_union(std::vector<EuclideanPiece> pieces) {
    std::vector<EuclideanPiece> canon;
    for (const auto& p : pieces) {
        if (p.is_empty()) continue;
        canon.push_back(p.canonical());
    }
    std::sort(canon.begin(), canon.end(), [](const EuclideanPiece& a, const EuclideanPiece& b) {
        return a.constraint_strings() < b.constraint_strings();
    });
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    std::vector<bool> removed(canon.size(), false);
    for (std::size_t i = 0; i < canon.size(); ++i) {
        for (std::size_t j = 0; j < canon.size(); ++j) {
            if (i == j || removed[j]) continue;
            if (canon[i].is_subset_of(canon[j])) {
                removed[i] = true;
                break;
            }
        }
    }
    std::vector<EuclideanPiece> out;
    for (std::size_t i = 0; i < canon.size(); ++i)
        if (!removed[i]) out.push_back(std::move(canon[i]));
    return out;
}

} // namespace lextrop
