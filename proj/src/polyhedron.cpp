#include "lextrop/polyhedron.hpp"

#include "lextrop/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace lextrop {

namespace {

std::vector<Integer> negated(std::vector<Integer> v) {
    for (auto& x : v) x = -x;
    return v;
}

bool relation_holds(const LexValue& lhs, Relation rel, const LexValue& rhs) {
    switch (rel) {
    case Relation::Ge: return lhs >= rhs;
    case Relation::Gt: return lhs > rhs;
    case Relation::Eq: return lhs == rhs;
    }
    return false;
}

// The coefficient vector of the level-c coordinate form of <w, u> in the
// flattened space.
std::vector<Rational> level_form(const std::vector<Integer>& u, std::size_t rank, std::size_t level) {
    std::vector<Rational> a(u.size() * rank);
    for (std::size_t i = 0; i < u.size(); ++i) a[i * rank + level] = Rational(u[i]);
    return a;
}

// The lex constraint as a disjunction of conjunctions of linear constraints.
std::vector<std::vector<LinearConstraint>> expand(const LexHalfspace& h, std::size_t rank) {
    if (h.bound.is_infinite()) throw DomainError("cannot flatten a constraint with an infinite bound");
    std::vector<std::vector<LinearConstraint>> out;
    auto prefix_equal = [&](std::size_t upto) {
        std::vector<LinearConstraint> conj;
        for (std::size_t c = 0; c < upto; ++c) conj.push_back({level_form(h.slope, rank, c), Relation::Eq, h.bound[c]});
        return conj;
    };
    if (h.rel == Relation::Eq) {
        out.push_back(prefix_equal(rank));
        return out;
    }
    for (std::size_t j = 0; j < rank; ++j) {
        auto conj = prefix_equal(j);
        conj.push_back({level_form(h.slope, rank, j), Relation::Gt, h.bound[j]});
        out.push_back(std::move(conj));
    }
    if (h.rel == Relation::Ge) out.push_back(prefix_equal(rank));
    return out;
}

// Depth-first enumeration of nonempty flattened pieces. The visitor returns
// false to stop early.
void enumerate_pieces(const LexPolyhedron& p, const std::function<bool(const EuclideanPiece&)>& visit,
                      std::mt19937_64* shuffle_rng = nullptr) {
    const std::size_t n = p.rank() * p.dim();
    std::vector<std::vector<std::vector<LinearConstraint>>> options;
    options.reserve(p.constraints().size());
    for (const auto& h : p.constraints()) options.push_back(expand(h, p.rank()));

    std::vector<LinearConstraint> current;
    bool stop = false;
    std::function<void(std::size_t)> descend = [&](std::size_t idx) {
        if (stop) return;
        if (idx == options.size()) {
            if (!visit(EuclideanPiece(n, current))) stop = true;
            return;
        }
        std::vector<std::size_t> order(options[idx].size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        if (shuffle_rng) std::shuffle(order.begin(), order.end(), *shuffle_rng);
        for (std::size_t o : order) {
            const auto& conj = options[idx][o];
            std::size_t mark = current.size();
            current.insert(current.end(), conj.begin(), conj.end());
            if (solve_linear(n, current)) descend(idx + 1);
            current.resize(mark);
            if (stop) return;
        }
    };
    if (options.empty()) {
        visit(EuclideanPiece(n));
        return;
    }
    descend(0);
}

// The complement of a lex halfspace as a union of halfspaces.
std::vector<LexHalfspace> complement(const LexHalfspace& h) {
    switch (h.rel) {
    case Relation::Ge: return {LexHalfspace::lt(h.slope, h.bound)};
    case Relation::Gt: return {LexHalfspace::le(h.slope, h.bound)};
    case Relation::Eq: return {LexHalfspace::gt(h.slope, h.bound), LexHalfspace::lt(h.slope, h.bound)};
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

bool halfspace_less(const LexHalfspace& a, const LexHalfspace& b) {
    if (a.rel != b.rel) return relation_rank(a.rel) < relation_rank(b.rel);
    if (a.slope != b.slope) return a.slope < b.slope;
    return a.bound < b.bound;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
    std::size_t lead = 0, trail = s.size();
    while (lead < trail && std::isspace(static_cast<unsigned char>(s[lead]))) ++lead;
    while (trail > lead && std::isspace(static_cast<unsigned char>(s[trail - 1]))) --trail;
    offset += lead;
    return s.substr(lead, trail - lead);
}

} // namespace

LexValue pairing(const LexPoint& w, std::span<const Integer> slope) {
    if (w.size() != slope.size()) throw DomainError("pairing: dimension mismatch");
    std::optional<LexValue> acc;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (slope[i] == 0) continue;
        if (w[i].is_infinite()) {
            if (slope[i] < 0) throw DomainError("pairing: negative multiple of infinity");
            return LexValue::infinity();
        }
        LexValue term = scale(Rational(slope[i]), w[i]);
        acc = acc ? *acc + term : term;
    }
    if (acc) return *acc;
    for (const auto& x : w)
        if (x.is_finite()) return LexValue::zero(x.rank());
    return LexValue::zero(0);
}

std::vector<Rational> flatten_point(const LexPoint& w, std::size_t rank) {
    std::vector<Rational> x(w.size() * rank);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_infinite() || w[i].rank() != rank) throw DomainError("flatten_point: expected finite rank-k values");
        for (std::size_t c = 0; c < rank; ++c) x[i * rank + c] = w[i][c];
    }
    return x;
}

LexPoint unflatten_point(std::span<const Rational> x, std::size_t rank, std::size_t dim) {
    if (x.size() != rank * dim) throw DomainError("unflatten_point: size mismatch");
    LexPoint w;
    w.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) w.emplace_back(std::vector<Rational>(x.begin() + i * rank, x.begin() + (i + 1) * rank));
    return w;
}

LexHalfspace LexHalfspace::ge(std::vector<Integer> slope, LexValue bound) { return {std::move(slope), Relation::Ge, std::move(bound)}; }
LexHalfspace LexHalfspace::gt(std::vector<Integer> slope, LexValue bound) { return {std::move(slope), Relation::Gt, std::move(bound)}; }
LexHalfspace LexHalfspace::le(std::vector<Integer> slope, const LexValue& bound) {
    return {negated(std::move(slope)), Relation::Ge, -bound};
}
LexHalfspace LexHalfspace::lt(std::vector<Integer> slope, const LexValue& bound) {
    return {negated(std::move(slope)), Relation::Gt, -bound};
}
LexHalfspace LexHalfspace::eq(std::vector<Integer> slope, LexValue bound) { return {std::move(slope), Relation::Eq, std::move(bound)}; }

bool LexHalfspace::holds(const LexPoint& w) const { return relation_holds(pairing(w, slope), rel, bound); }

bool operator==(const LexHalfspace& a, const LexHalfspace& b) {
    return a.rel == b.rel && a.slope == b.slope && a.bound.is_infinite() == b.bound.is_infinite() &&
           a.bound.rank() == b.bound.rank() && a.bound == b.bound;
}

std::string to_string(const LexHalfspace& h) {
    std::string out;
    for (std::size_t i = 0; i < h.slope.size(); ++i) {
        if (i) out += ',';
        out += h.slope[i].get_str();
    }
    return out + ' ' + to_string(h.rel) + ' ' + to_string(h.bound);
}

LexHalfspace parse_halfspace(std::string_view text, std::size_t base_offset) {
    std::size_t op = text.find_first_of("<>=");
    if (op == std::string_view::npos) throw ParseError("expected a relation (>=, >, =, <=, <)", base_offset);
    std::size_t op_end = op + 1;
    if (op_end < text.size() && text[op_end] == '=' && text[op] != '=') ++op_end;
    std::string rel(text.substr(op, op_end - op));
    std::vector<Integer> slope;
    std::string_view lhs = text.substr(0, op);
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = lhs.find(',', pos);
        std::size_t stop = comma == std::string_view::npos ? lhs.size() : comma;
        std::size_t off = base_offset + pos;
        std::string_view field = trim(lhs.substr(pos, stop - pos), off);
        Rational q = parse_rational(field, off);
        if (q.get_den() != 1) throw ParseError("slope entries must be integers", off);
        slope.push_back(q.get_num());
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    std::size_t off = base_offset + op_end;
    LexValue bound = parse_lexvalue(trim(text.substr(op_end), off), off);
    if (rel == ">=") return LexHalfspace::ge(std::move(slope), std::move(bound));
    if (rel == ">") return LexHalfspace::gt(std::move(slope), std::move(bound));
    if (rel == "=") return LexHalfspace::eq(std::move(slope), std::move(bound));
    if (bound.is_infinite()) throw ParseError("infinite bounds are only allowed with '='", off);
    if (rel == "<=") return LexHalfspace::le(std::move(slope), bound);
    if (rel == "<") return LexHalfspace::lt(std::move(slope), bound);
    throw ParseError("unknown relation '" + rel + "'", base_offset + op);
}

LexPolyhedron::LexPolyhedron(std::size_t rank, std::size_t dim, std::vector<LexHalfspace> constraints)
    : rank_(rank), dim_(dim) {
    for (auto& h : constraints) add(std::move(h));
}

void LexPolyhedron::add(LexHalfspace h) {
    if (h.slope.size() != dim_) throw DomainError("halfspace slope has length " + std::to_string(h.slope.size()) +
                                                  ", expected " + std::to_string(dim_));
    if (h.bound.is_infinite()) {
        if (h.rel != Relation::Eq) throw DomainError("infinite bounds are only allowed on equality halfspaces");
    } else if (h.bound.rank() != rank_) {
        throw RankMismatch("halfspace bound " + to_string(h.bound) + " does not have rank " + std::to_string(rank_));
    }
    constraints_.push_back(std::move(h));
}

void LexPolyhedron::check_point(const LexPoint& w) const {
    if (w.size() != dim_) throw DomainError("point has " + std::to_string(w.size()) + " coordinates, expected " + std::to_string(dim_));
    for (const auto& x : w) {
        if (x.is_infinite()) throw DomainError("point coordinates must be finite");
        if (x.rank() != rank_) throw RankMismatch("point coordinate " + to_string(x) + " does not have rank " + std::to_string(rank_));
    }
}

bool LexPolyhedron::contains(const LexPoint& w) const {
    check_point(w);
    return std::all_of(constraints_.begin(), constraints_.end(), [&](const LexHalfspace& h) { return h.holds(w); });
}

std::vector<EuclideanPiece> LexPolyhedron::flatten() const {
    std::vector<EuclideanPiece> out;
    enumerate_pieces(*this, [&](const EuclideanPiece& piece) {
        out.push_back(piece);
        return true;
    });
    return out;
}

std::vector<EuclideanPiece> LexPolyhedron::euclidean_closure() const {
    std::vector<EuclideanPiece> closed;
    for (const auto& piece : flatten()) closed.push_back(piece.closure());
    return canonical_union(std::move(closed));
}

namespace {

// Level-by-level search. At each level the active constraints (those tight on
// every earlier level) form an ordinary linear system over Q^d. Constraints
// that can be strict are made strict together (possible by convexity), which
// retires them; the implicit equations stay active for the next level.
std::optional<LexPoint> solve_levels(const LexPolyhedron& p, const Chooser& chooser) {
    const std::size_t k = p.rank();
    const std::size_t d = p.dim();
    const auto& cs = p.constraints();
    for (const auto& h : cs)
        if (h.bound.is_infinite()) return std::nullopt;
    std::vector<std::size_t> active(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) active[i] = i;
    std::vector<std::vector<Rational>> levels;
    auto row = [&](std::size_t i, std::size_t c, Relation rel) {
        std::vector<Rational> a(d);
        for (std::size_t j = 0; j < d; ++j) a[j] = Rational(cs[i].slope[j]);
        return LinearConstraint{std::move(a), rel, cs[i].bound[c]};
    };
    for (std::size_t c = 0; c < k; ++c) {
        const bool last = c + 1 == k;
        std::vector<LinearConstraint> sys;
        for (std::size_t i : active) {
            Relation rel = cs[i].rel;
            if (rel == Relation::Gt && !last) rel = Relation::Ge;
            sys.push_back(row(i, c, rel));
        }
        if (last) {
            auto x = solve_linear(d, sys, chooser);
            if (!x) return std::nullopt;
            levels.push_back(std::move(*x));
            break;
        }
        if (!solve_linear(d, sys)) return std::nullopt;
        std::vector<std::size_t> tight;
        std::vector<LinearConstraint> strict_sys;
        for (std::size_t a = 0; a < active.size(); ++a) {
            std::size_t i = active[a];
            if (cs[i].rel == Relation::Eq) {
                tight.push_back(i);
                strict_sys.push_back(sys[a]);
                continue;
            }
            std::vector<LinearConstraint> probe = sys;
            probe[a].rel = Relation::Gt;
            if (solve_linear(d, probe)) {
                strict_sys.push_back(probe[a]);
            } else {
                tight.push_back(i);
                strict_sys.push_back(row(i, c, Relation::Eq));
            }
        }
        auto x = solve_linear(d, strict_sys, chooser);
        if (!x) throw std::logic_error("level system lost feasibility after strict relaxation");
        levels.push_back(std::move(*x));
        active = std::move(tight);
    }
    LexPoint w;
    w.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rational> coords(k);
        for (std::size_t c = 0; c < k; ++c) coords[c] = levels[c][i];
        w.emplace_back(std::move(coords));
    }
    return w;
}

} // namespace

bool LexPolyhedron::is_empty() const { return !solve_levels(*this, choose_near_zero).has_value(); }

std::optional<LexPoint> LexPolyhedron::find_point() const {
    if (rank_ == 0) throw DomainError("find_point: rank must be positive");
    auto w = solve_levels(*this, choose_near_zero);
    if (w && !contains(*w)) throw std::logic_error("find_point produced a point outside the polyhedron");
    return w;
}

std::optional<LexPoint> LexPolyhedron::sample_point(std::mt19937_64& rng) const {
    std::optional<LexPoint> result;
    Chooser chooser = make_random_chooser(rng);
    enumerate_pieces(
        *this,
        [&](const EuclideanPiece& piece) {
            auto x = piece.find_point(chooser);
            if (x) result = unflatten_point(*x, rank_, dim_);
            return !result.has_value();
        },
        &rng);
    return result;
}

LexPolyhedron LexPolyhedron::intersect(const LexPolyhedron& other) const {
    if (other.rank_ != rank_ || other.dim_ != dim_) throw DomainError("intersect: ambient mismatch");
    LexPolyhedron out = *this;
    for (const auto& h : other.constraints_) out.constraints_.push_back(h);
    return out;
}

std::vector<LexPolyhedron> LexPolyhedron::faces() const {
    std::vector<std::size_t> ineq;
    for (std::size_t i = 0; i < constraints_.size(); ++i)
        if (constraints_[i].rel != Relation::Eq) ineq.push_back(i);
    if (ineq.size() > 20) throw DomainError("faces: too many inequality constraints to enumerate");
    std::vector<LexPolyhedron> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ineq.size()); ++mask) {
        LexPolyhedron f = *this;
        for (std::size_t b = 0; b < ineq.size(); ++b)
            if (mask & (std::uint64_t{1} << b)) {
                // P meets the boundary; strict constraints make this empty.
                LexHalfspace boundary = constraints_[ineq[b]];
                boundary.rel = Relation::Eq;
                f.constraints_.push_back(std::move(boundary));
            }
        if (f.is_empty()) continue;
        out.push_back(f.canonical());
    }
    std::sort(out.begin(), out.end(),
              [](const LexPolyhedron& a, const LexPolyhedron& b) { return a.constraint_strings() < b.constraint_strings(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool LexPolyhedron::is_subset_of(const LexPolyhedron& other) const {
    if (other.rank_ != rank_ || other.dim_ != dim_) throw DomainError("is_subset_of: ambient mismatch");
    if (is_empty()) return true;
    for (const auto& h : other.constraints_) {
        // No finite point meets an infinite bound.
        if (h.bound.is_infinite()) return false;
        for (auto& neg : complement(h)) {
            LexPolyhedron probe = *this;
            probe.constraints_.push_back(std::move(neg));
            if (!probe.is_empty()) return false;
        }
    }
    return true;
}

LexPolyhedron LexPolyhedron::canonical() const {
    struct Work {
        std::vector<Rational> slope;
        Relation rel;
        LexValue bound;
    };
    std::vector<Work> eqs, ineqs;
    std::vector<LexHalfspace> infinite;
    for (const auto& h : constraints_) {
        if (h.bound.is_infinite()) {
            infinite.push_back(h);
            continue;
        }
        std::vector<Rational> s(h.slope.begin(), h.slope.end());
        (h.rel == Relation::Eq ? eqs : ineqs).push_back({std::move(s), h.rel, h.bound});
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim_ && rank < eqs.size(); ++col) {
        std::size_t r = rank;
        while (r < eqs.size() && eqs[r].slope[col] == 0) ++r;
        if (r == eqs.size()) continue;
        std::swap(eqs[r], eqs[rank]);
        Rational p = eqs[rank].slope[col];
        for (auto& x : eqs[rank].slope) x /= p;
        eqs[rank].bound = scale(1 / p, eqs[rank].bound);
        for (std::size_t o = 0; o < eqs.size(); ++o) {
            if (o == rank || eqs[o].slope[col] == 0) continue;
            Rational f = eqs[o].slope[col];
            for (std::size_t j = 0; j < dim_; ++j) eqs[o].slope[j] -= f * eqs[rank].slope[j];
            eqs[o].bound = eqs[o].bound - scale(f, eqs[rank].bound);
        }
        pivots.push_back(col);
        ++rank;
    }
    LexPolyhedron out(rank_, dim_);
    auto emit = [&](const Work& w) {
        bool zero = std::all_of(w.slope.begin(), w.slope.end(), [](const Rational& x) { return x == 0; });
        if (zero) {
            LexValue z = LexValue::zero(rank_);
            if (relation_holds(z, w.rel, w.bound)) return;
            out.constraints_.push_back({std::vector<Integer>(dim_), w.rel, w.bound});
            return;
        }
        Rational s = primitive_scale(w.slope);
        std::vector<Integer> slope;
        for (const auto& x : w.slope) {
            Rational y = s * x;
            slope.push_back(y.get_num());
        }
        out.constraints_.push_back({std::move(slope), w.rel, scale(s, w.bound)});
    };
    for (std::size_t r = 0; r < eqs.size(); ++r) emit(eqs[r]);
    for (auto& w : ineqs) {
        for (std::size_t r = 0; r < rank; ++r) {
            Rational f = w.slope[pivots[r]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) w.slope[j] -= f * eqs[r].slope[j];
            w.bound = w.bound - scale(f, eqs[r].bound);
        }
        emit(w);
    }
    for (auto h : infinite) {
        auto lead = std::find_if(h.slope.begin(), h.slope.end(), [](const Integer& x) { return x != 0; });
        if (lead != h.slope.end() && *lead < 0) h.slope = negated(std::move(h.slope));
        Integer g = 0;
        for (const auto& x : h.slope) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1)
            for (auto& x : h.slope) x /= g;
        out.constraints_.push_back(std::move(h));
    }
    std::sort(out.constraints_.begin(), out.constraints_.end(), halfspace_less);
    out.constraints_.erase(std::unique(out.constraints_.begin(), out.constraints_.end()), out.constraints_.end());
    return out;
}

std::vector<std::string> LexPolyhedron::constraint_strings() const {
    std::vector<std::string> out;
    out.reserve(constraints_.size());
    for (const auto& h : constraints_) out.push_back(to_string(h));
    return out;
}

bool operator==(const LexPolyhedron& a, const LexPolyhedron& b) {
    return a.rank_ == b.rank_ && a.dim_ == b.dim_ && a.constraints_ == b.constraints_;
}

bool contains(const LexPolyhedron& p, const LexPoint& w) { return p.contains(w); }
std::vector<EuclideanPiece> flatten(const LexPolyhedron& p) { return p.flatten(); }
std::vector<EuclideanPiece> euclidean_closure(const LexPolyhedron& p) { return p.euclidean_closure(); }
LexPolyhedron intersect(const LexPolyhedron& p, const LexPolyhedron& q) { return p.intersect(q); }
std::vector<LexPolyhedron> faces(const LexPolyhedron& p) { return p.faces(); }
bool is_empty(const LexPolyhedron& p) { return p.is_empty(); }

LexComplex::LexComplex(std::size_t rank, std::size_t dim, std::vector<LexPolyhedron> cells) : rank_(rank), dim_(dim) {
    for (auto& c : cells) {
        if (c.rank() != rank || c.dim() != dim) throw DomainError("complex cell has mismatched ambient data");
        cells_.push_back(std::move(c));
    }
}

std::optional<std::size_t> LexComplex::locate(const LexPoint& w) const {
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i].contains(w)) return i;
    return std::nullopt;
}

namespace {

// Whether `face` (nonempty, inside p) equals p cut by the boundaries of every
// p-inequality that is tight on all of `face`.
bool is_face_of(const LexPolyhedron& face, const LexPolyhedron& p) {
    std::vector<LexHalfspace> hs = p.constraints();
    for (auto& h : hs) {
        if (h.rel == Relation::Eq) continue;
        LexPolyhedron probe = face;
        probe.add(LexHalfspace::gt(h.slope, h.bound));
        if (probe.is_empty()) h.rel = Relation::Eq;
    }
    LexPolyhedron candidate(p.rank(), p.dim(), hs);
    return candidate.is_subset_of(face);
}

} // namespace

std::optional<std::string> LexComplex::validate() const {
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i].is_empty()) return "cell " + std::to_string(i) + " is empty";
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        for (std::size_t j = i + 1; j < cells_.size(); ++j) {
            LexPolyhedron meet = cells_[i].intersect(cells_[j]);
            if (meet.is_empty()) continue;
            if (!is_face_of(meet, cells_[i]))
                return "intersection of cells " + std::to_string(i) + " and " + std::to_string(j) + " is not a face of cell " + std::to_string(i);
            if (!is_face_of(meet, cells_[j]))
                return "intersection of cells " + std::to_string(i) + " and " + std::to_string(j) + " is not a face of cell " + std::to_string(j);
        }
    }
    return std::nullopt;
}

bool operator==(const LexComplex& a, const LexComplex& b) {
    return a.rank_ == b.rank_ && a.dim_ == b.dim_ && a.cells_ == b.cells_;
}

} // namespace lextrop
