#include "lextrop/tropical.hpp"

#include "lextrop/error.hpp"

#include <algorithm>

namespace lextrop {

namespace {

std::vector<Integer> exponent_difference(const Exponent& a, const Exponent& b) {
    std::vector<Integer> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = Integer(static_cast<long>(a[i] - b[i]));
    return out;
}

std::vector<Integer> to_slope(const Exponent& u) {
    std::vector<Integer> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = Integer(static_cast<long>(u[i]));
    return out;
}

void check_point(const ValuatedPolynomial& p, const LexPoint& w) {
    if (w.size() != p.dim()) throw DomainError("point has " + std::to_string(w.size()) + " coordinates, polynomial has " +
                                               std::to_string(p.dim()) + " variables");
    for (const auto& x : w) {
        if (x.is_infinite()) throw DomainError("point coordinates must be finite");
        if (x.rank() != p.rank()) throw RankMismatch("point coordinate " + to_string(x) + " does not have rank " + std::to_string(p.rank()));
    }
}

bool min_attained_twice(const std::vector<LexValue>& weights) {
    if (weights.size() < 2) return false;
    const LexValue* best = &weights.front();
    std::size_t count = 1;
    for (std::size_t i = 1; i < weights.size(); ++i) {
        auto c = weights[i] <=> *best;
        if (c < 0) {
            best = &weights[i];
            count = 1;
        } else if (c == 0) {
            ++count;
        }
    }
    return count >= 2;
}

// Any point of P; used to reject containment cheaply before the exact test.
std::optional<LexPoint> probe_point(const LexPolyhedron& p) { return p.find_point(); }

} // namespace

HahnPolynomial hp_add(const HahnPolynomial& f, const HahnPolynomial& g) {
    HahnPolynomial out = f;
    for (const auto& [u, c] : g) {
        auto it = out.find(u);
        if (it == out.end()) {
            if (!c.is_zero()) out.emplace(u, c);
            continue;
        }
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
    return out;
}

HahnPolynomial hp_mul(const HahnPolynomial& f, const HahnPolynomial& g) {
    HahnPolynomial out;
    for (const auto& [u, a] : f) {
        for (const auto& [v, b] : g) {
            if (u.size() != v.size()) throw DomainError("hp_mul: exponent length mismatch");
            Exponent w(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
            HahnPolynomial term{{w, a * b}};
            out = hp_add(out, term);
        }
    }
    return out;
}

ValuatedPolynomial::ValuatedPolynomial(std::size_t rank, std::size_t dim, const std::map<Exponent, LexValue>& terms)
    : rank_(rank), dim_(dim) {
    for (const auto& [u, v] : terms) set_term(u, v);
}

ValuatedPolynomial ValuatedPolynomial::from_hahn(std::size_t rank, std::size_t dim,
                                                 const std::map<Exponent, HahnSeries>& coeffs) {
    ValuatedPolynomial p(rank, dim);
    for (const auto& [u, c] : coeffs) {
        if (c.rank() != rank) throw RankMismatch("Hahn coefficient rank does not match polynomial rank");
        if (c.is_zero()) continue;
        p.set_term(u, nu_mon(c));
    }
    return p;
}

void ValuatedPolynomial::set_term(Exponent exponent, LexValue valuation) {
    if (exponent.size() != dim_) throw DomainError("exponent has " + std::to_string(exponent.size()) + " entries, expected " +
                                                   std::to_string(dim_));
    if (valuation.is_infinite()) throw DomainError("coefficient valuations must be finite (zero terms are omitted)");
    if (valuation.rank() != rank_) throw RankMismatch("valuation " + to_string(valuation) + " does not have rank " + std::to_string(rank_));
    terms_[std::move(exponent)] = std::move(valuation);
}

bool ValuatedPolynomial::has_nonnegative_exponents() const {
    for (const auto& [u, v] : terms_)
        for (auto e : u)
            if (e < 0) return false;
    return true;
}

ValuatedPolynomial ValuatedPolynomial::truncated(std::size_t j) const {
    if (j > rank_) throw DomainError("truncated: target rank exceeds polynomial rank");
    ValuatedPolynomial out(j, dim_);
    for (const auto& [u, v] : terms_) out.terms_[u] = project(v, static_cast<std::int64_t>(j));
    return out;
}

bool operator==(const ValuatedPolynomial& a, const ValuatedPolynomial& b) {
    return a.rank_ == b.rank_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

std::vector<LexValue> term_weights(const ValuatedPolynomial& p, const LexPoint& w) {
    check_point(p, w);
    std::vector<LexValue> out;
    out.reserve(p.size());
    for (const auto& [u, v] : p.terms()) out.push_back(v + pairing(w, to_slope(u)));
    return out;
}

bool trop_membership(const ValuatedPolynomial& p, const LexPoint& w) { return min_attained_twice(term_weights(p, w)); }

LexComplex trop_hypersurface(const ValuatedPolynomial& p) {
    const std::size_t k = p.rank();
    const std::size_t d = p.dim();
    std::vector<std::pair<Exponent, LexValue>> terms(p.terms().begin(), p.terms().end());
    std::vector<LexPolyhedron> candidates;
    for (std::size_t a = 0; a < terms.size(); ++a) {
        for (std::size_t b = a + 1; b < terms.size(); ++b) {
            const auto& [u, nu_u] = terms[a];
            const auto& [v, nu_v] = terms[b];
            LexPolyhedron cell(k, d);
            cell.add(LexHalfspace::eq(exponent_difference(u, v), nu_v - nu_u));
            for (std::size_t m = 0; m < terms.size(); ++m) {
                if (m == a || m == b) continue;
                cell.add(LexHalfspace::ge(exponent_difference(terms[m].first, u), nu_u - terms[m].second));
            }
            if (cell.is_empty()) continue;
            candidates.push_back(cell.canonical());
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const LexPolyhedron& x, const LexPolyhedron& y) {
        return x.constraint_strings() < y.constraint_strings();
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<std::optional<LexPoint>> probes;
    probes.reserve(candidates.size());
    for (const auto& c : candidates) probes.push_back(probe_point(c));
    std::vector<bool> dropped(candidates.size(), false);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = 0; j < candidates.size(); ++j) {
            if (i == j || dropped[j]) continue;
            if (probes[i] && !candidates[j].contains(*probes[i])) continue;
            if (candidates[i].is_subset_of(candidates[j])) {
                dropped[i] = true;
                break;
            }
        }
    }
    std::vector<LexPolyhedron> cells;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (!dropped[i]) cells.push_back(std::move(candidates[i]));
    return LexComplex(k, d, std::move(cells));
}

std::vector<EuclideanPiece> banerjee_trop(const ValuatedPolynomial& p) {
    std::vector<EuclideanPiece> pieces;
    const LexComplex complex = trop_hypersurface(p);
    for (const auto& cell : complex.cells())
        for (auto& piece : cell.euclidean_closure()) pieces.push_back(std::move(piece));
    return canonical_union(std::move(pieces));
}

std::pair<LexComplex, LexComplex> trop_project(const ValuatedPolynomial& p, std::size_t j) {
    if (j == 0 || j > p.rank()) throw DomainError("trop_project: j must satisfy 0 < j <= rank");
    return {trop_hypersurface(p), trop_hypersurface(p.truncated(j))};
}

LexPoint project_point(const LexPoint& w, std::size_t j) {
    LexPoint out;
    out.reserve(w.size());
    for (const auto& x : w) out.push_back(project(x, static_cast<std::int64_t>(j)));
    return out;
}

std::optional<LexPoint> lift_point(const ValuatedPolynomial& p, const LexPoint& w_low) {
    const std::size_t k = p.rank();
    if (w_low.size() != p.dim()) throw DomainError("lift_point: dimension mismatch");
    const std::size_t j = w_low.empty() ? 0 : w_low.front().rank();
    if (j == 0 || j > k) throw DomainError("lift_point: point rank must satisfy 0 < j <= rank");
    ValuatedPolynomial low = p.truncated(j);
    std::vector<LexValue> weights = term_weights(low, w_low);
    if (!min_attained_twice(weights)) return std::nullopt;
    if (j == k) return w_low;

    LexValue best = weights.front();
    for (const auto& x : weights) best = lex_min(best, x);
    // Minimizing terms at rank j; their tails decide the tie at rank k.
    ValuatedPolynomial tail(k - j, p.dim());
    std::size_t idx = 0;
    for (const auto& [u, v] : p.terms()) {
        if (weights[idx++] == best) {
            tail.set_term(u, LexValue(std::vector<Rational>(v.coords().begin() + j, v.coords().end())));
        }
    }
    std::optional<LexPoint> tail_point;
    const LexComplex tail_complex = trop_hypersurface(tail);
    for (const auto& cell : tail_complex.cells()) {
        tail_point = cell.find_point();
        if (tail_point) break;
    }
    if (!tail_point) return std::nullopt;
    LexPoint w;
    w.reserve(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) {
        std::vector<Rational> coords = w_low[i].coords();
        const auto& rest = (*tail_point)[i].coords();
        coords.insert(coords.end(), rest.begin(), rest.end());
        w.emplace_back(std::move(coords));
    }
    return w;
}

bool extended_trop_membership(const ValuatedPolynomial& p, const ExtendedPoint& w) {
    if (w.size() != p.dim()) throw DomainError("extended point dimension mismatch");
    if (p.empty()) throw DomainError("extended_trop_membership: polynomial is zero");
    if (!p.has_nonnegative_exponents()) throw DomainError("extended_trop_membership: negative exponent on the orthant patch");
    for (const auto& x : w)
        if (x.is_finite() && x.rank() != p.rank()) throw RankMismatch("extended point coordinate has wrong rank");
    std::vector<LexValue> weights;
    for (const auto& [u, v] : p.terms()) {
        bool on_stratum = true;
        LexValue acc = v;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] == 0) continue;
            if (w[i].is_infinite()) {
                on_stratum = false;
                break;
            }
            acc = acc + integer_scale(u[i], w[i]);
        }
        if (on_stratum) weights.push_back(std::move(acc));
    }
    if (weights.empty()) return true;
    return min_attained_twice(weights);
}

LexValue monomial_valuation(const ValuatedPolynomial& p, const ExtendedPoint& omega) {
    if (omega.size() != p.dim()) throw DomainError("monomial_valuation: dimension mismatch");
    if (!p.has_nonnegative_exponents()) throw DomainError("monomial_valuation: negative exponent on the orthant patch");
    LexValue best = LexValue::infinity();
    for (const auto& [u, v] : p.terms()) {
        LexValue acc = v;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] == 0) continue;
            acc = acc + integer_scale(u[i], omega[i]);
        }
        best = lex_min(best, acc);
    }
    return best;
}

} // namespace lextrop
