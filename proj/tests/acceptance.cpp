// Acceptance gate: each criterion prints one PASS/FAIL line with its runtime.
#include "oracles.hpp"

#include "lextrop/fixtures.hpp"
#include "lextrop/io.hpp"
#include "lextrop/random.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace lextrop;
using io::Json;

namespace {

struct Outcome {
    std::size_t failures = 0;
    std::string note;
    void fail(const std::string& why) {
        if (failures++ == 0) note = why;
    }
};

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool run(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = out.failures == 0 && secs < limit_s;
    std::printf("%s %d %s: %zu failures, %.3f s (limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), out.failures,
                secs, limit_s, out.note.empty() ? "" : " first: ", out.note.c_str());
    std::fflush(stdout);
    return ok;
}

const char* kLine = R"j({"1,0": "(0,0)", "0,1": "(0,0)", "0,0": "(0,0)"})j";

// Canonical JSON of the three glued copies of {w >= (0,0)} on the tropical line.
const char* kLineCells =
    R"j([["0,1 = (0,0)","1,0 >= (0,0)"],["1,-1 = (0,0)","0,-1 >= (0,0)"],["1,0 = (0,0)","0,1 >= (0,0)"]])j";
const char* kLineClosure =
    R"j([["0,0,0,1 = 0","0,0,1,0 = 0","1,0,0,0 >= 0"],["0,1,0,-1 = 0","1,0,-1,0 = 0","0,0,-1,0 >= 0"],["0,1,0,0 = 0","1,0,0,0 = 0","0,0,1,0 >= 0"]])j";

void tropical_line_golden(Outcome& out) {
    LexComplex c = trop_hypersurface(io::polynomial_from_json(io::parse_json(kLine)));
    if (io::to_json(c) != io::parse_json(kLineCells)) out.fail("cells: " + io::to_json(c).dump());
}

void closure_golden(Outcome& out) {
    auto pieces = banerjee_trop(io::polynomial_from_json(io::parse_json(kLine)));
    Json got = io::to_json(pieces);
    if (got != io::parse_json(kLineClosure)) out.fail("pieces: " + got.dump());
    std::vector<Rational> origin(4, Rational(0));
    for (const auto& p : pieces)
        if (!p.is_closed() || !p.contains(origin)) out.fail("piece not closed or misses the origin");
}

HahnSeries integer_series(std::mt19937_64& rng, std::size_t rank) {
    HahnSeries f(rank);
    std::size_t terms = pick(rng, 1, 6);
    for (std::size_t t = 0; t < terms; ++t) {
        long c = static_cast<long>(pick(rng, 0, 17)) - 9;
        if (c >= 0) ++c; // [-9, 9] without zero
        f += HahnSeries::monomial(Rational(c), random_lexvalue(rng, rank));
    }
    return f;
}

void valuation_axioms(Outcome& out) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        std::size_t k = pick(rng, 1, 3);
        HahnSeries f = integer_series(rng, k), g = integer_series(rng, k);
        LexValue vf = nu_mon(f), vg = nu_mon(g);
        if (nu_mon(f * g) != vf + vg) out.fail("product: " + to_string(f) + " ; " + to_string(g));
        LexValue vs = nu_mon(f + g), lo = lex_min(vf, vg);
        if (vs < lo) out.fail("sum below min: " + to_string(f) + " ; " + to_string(g));
        if (vf != vg && vs != lo) out.fail("sum not equal to min: " + to_string(f) + " ; " + to_string(g));
    }
}

struct Sampled {
    ValuatedPolynomial poly;
    LexComplex complex;
    std::vector<LexPoint> members;
};

std::vector<Sampled> corpus;

void oracle_equivalence(Outcome& out) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        std::size_t k = pick(rng, 1, 3), d = pick(rng, 1, 3);
        Sampled s{random_polynomial(rng, k, d, 6), LexComplex(k, d), {}};
        s.complex = trop_hypersurface(s.poly);
        for (int m = 0; m < 50; ++m) {
            LexPoint w = random_point(rng, k, d);
            // Half the samples are drawn from cells so both answers occur.
            if (m % 2 == 0 && !s.complex.empty()) w = *s.complex.cells()[pick(rng, 0, s.complex.size() - 1)].sample_point(rng);
            bool cellwise = s.complex.locate(w).has_value();
            bool member = trop_membership(s.poly, w);
            if (member != cellwise || member != oracle::membership(s.poly, w))
                out.fail(io::to_json(s.poly).dump() + " at " + io::to_json(w).dump());
            if (member) s.members.push_back(w);
        }
        corpus.push_back(std::move(s));
    }
}

void path_connectivity(Outcome& out) {
    std::mt19937_64 rng(5);
    std::size_t done = 0;
    for (std::size_t attempt = 0; done < 50 && attempt < 5000; ++attempt) {
        std::size_t k = pick(rng, 1, 3), d = pick(rng, 1, 3);
        ValuatedPolynomial p = random_polynomial(rng, k, d, 6);
        LexComplex c = trop_hypersurface(p);
        if (c.size() < 2) continue;
        CellAdjacency adj = build_adjacency(c);
        if (!adj.is_connected()) continue;
        ++done;
        for (int m = 0; m < 20; ++m) {
            LexPoint a = *c.cells()[pick(rng, 0, c.size() - 1)].sample_point(rng);
            LexPoint b = *c.cells()[pick(rng, 0, c.size() - 1)].sample_point(rng);
            PLPath path = connect(c, adj, a, b);
            PathVerdict v = verify_path(path, c);
            if (!v.ok || path.from != a || path.to != b) out.fail(v.diagnostic + " for " + io::to_json(p).dump());
        }
    }
    if (done < 50) out.fail("only " + std::to_string(done) + " connected instances");
}

void projection_tower(Outcome& out) {
    std::mt19937_64 rng(6);
    std::size_t lifts = 0;
    for (const auto& s : corpus) {
        std::size_t k = s.poly.rank();
        for (std::size_t j = 1; j < k; ++j) {
            ValuatedPolynomial low = s.poly.truncated(j);
            for (const auto& w : s.members)
                if (!oracle::membership(low, project_point(w, j))) out.fail("projection of " + io::to_json(w).dump());
        }
    }
    for (std::size_t round = 0; lifts < 100 && round < 20; ++round) {
        for (const auto& s : corpus) {
            if (lifts >= 100) break;
            std::size_t k = s.poly.rank();
            if (k < 2) continue;
            std::size_t j = pick(rng, 1, k - 1);
            ValuatedPolynomial low = s.poly.truncated(j);
            LexComplex lc = trop_hypersurface(low);
            if (lc.empty()) continue;
            LexPoint w = *lc.cells()[pick(rng, 0, lc.size() - 1)].sample_point(rng);
            ++lifts;
            auto up = lift_point(s.poly, w);
            if (!up || !oracle::membership(s.poly, *up) || project_point(*up, j) != w)
                out.fail("lift of " + io::to_json(w).dump() + " for " + io::to_json(s.poly).dump());
        }
    }
    if (lifts < 100) out.fail("only " + std::to_string(lifts) + " lifts sampled");
}

void closure_limit_points(Outcome& out) {
    std::mt19937_64 rng(8);
    std::size_t done = 0;
    while (done < 20) {
        std::size_t k = pick(rng, 1, 2), d = pick(rng, 1, 2);
        LexPolyhedron p = random_polyhedron(rng, k, d, pick(rng, 1, 4));
        if (p.is_empty()) continue;
        ++done;
        auto closure = p.euclidean_closure();
        std::vector<LexPoint> anchors;
        for (int a = 0; a < 30; ++a) anchors.push_back(*p.sample_point(rng));
        auto chooser = make_random_chooser(rng);
        for (int m = 0; m < 30; ++m) {
            const auto& piece = closure[pick(rng, 0, closure.size() - 1)];
            auto x = piece.find_point(chooser);
            if (!x) {
                out.fail("closure piece without a point");
                continue;
            }
            Rational eps = 1;
            for (int e = 0; e <= 10; ++e, eps /= 2)
                if (!oracle::approximate(p, *x, anchors, eps)) {
                    out.fail("no point within 2^-" + std::to_string(e));
                    break;
                }
        }
    }
}

HahnPolynomial chart_function(std::mt19937_64& rng, std::size_t arity) {
    HahnPolynomial f;
    std::size_t terms = pick(rng, 1, 4);
    for (std::size_t t = 0; t < terms; ++t) {
        Exponent u(arity);
        for (auto& e : u) e = static_cast<std::int64_t>(pick(rng, 0, 3));
        HahnSeries c = integer_series(rng, 2);
        f = hp_add(f, HahnPolynomial{{u, c}});
    }
    return f;
}

// Direct evaluation of the edge valuation: min over monomials of
// val(c) + j*omega + k*(length - omega); on a marked edge only x appears.
LexValue oracle_valuation(const HahnPolynomial& f, const LexValue& length, const LexValue& omega) {
    LexValue best = LexValue::infinity();
    for (const auto& [u, c] : f) {
        if (c.is_zero()) continue;
        LexValue v = nu_mon(c);
        if (u[0] != 0) v = v + integer_scale(u[0], omega);
        if (u.size() > 1 && u[1] != 0) v = v + integer_scale(u[1], length - omega);
        best = lex_min(best, v);
    }
    return best;
}

void skeleton_suite(Outcome& out) {
    std::mt19937_64 rng(9);
    std::vector<MetricGraph> graphs = {fixtures::two_cycle().graph, fixtures::annulus_with_mark(LexValue{2, 1})};
    for (const auto& g : graphs) {
        for (int i = 0; i < 200; ++i) {
            const MetricEdge& e = g.edges()[pick(rng, 0, g.edges().size() - 1)];
            LexValue omega;
            if (e.marked())
                omega = pick(rng, 0, 4) == 0 ? LexValue::infinity() : scale(Rational(static_cast<long>(pick(rng, 0, 12)), 4u), LexValue{1, 0});
            else
                omega = scale(Rational(static_cast<long>(pick(rng, 0, 16)), 16u), e.length);
            std::size_t arity = e.marked() ? 1 : 2;
            HahnPolynomial f = chart_function(rng, arity), h = chart_function(rng, arity);
            auto val = [&](const HahnPolynomial& q) {
                ValuatedPolynomial vp = ValuatedPolynomial::from_hahn(2, arity, q);
                LexValue v = e.marked() ? marked_edge_valuation(vp, omega) : edge_valuation(vp, e.length, omega);
                if (!q.empty() && v != oracle_valuation(q, e.length, omega)) out.fail("valuation differs from direct evaluation");
                return v;
            };
            LexValue vf = val(f), vh = val(h);
            if (val(hp_mul(f, h)) != vf + vh) out.fail("product law at " + to_string(omega));
            LexValue vs = val(hp_add(f, h)), lo = lex_min(vf, vh);
            if (vs < lo || (vf != vh && vs != lo)) out.fail("sum law at " + to_string(omega));
        }
    }
    auto full = fixtures::two_cycle();
    if (!faithful_injectivity_check(full.graph, full.charts, full.functions, 4).injective)
        out.fail("two-cycle collection not injective on the grid");
    auto degenerate = fixtures::two_cycle_degenerate();
    auto report = faithful_injectivity_check(degenerate.graph, degenerate.charts, degenerate.functions, 4);
    if (report.injective || !report.witness) out.fail("degenerate collection reported no witness");
}

} // namespace

int main() {
    bool ok = true;
    ok &= run(1, "tropical line cells", 1, tropical_line_golden);
    ok &= run(2, "tropical line closure", 1, closure_golden);
    ok &= run(3, "valuation axioms", 5, valuation_axioms);
    ok &= run(4, "membership oracle equivalence", 30, oracle_equivalence);
    ok &= run(5, "path certificates", 60, path_connectivity);
    ok &= run(6, "projection tower", 30, projection_tower);
    ok &= run(7, "closure limit points", 30, closure_limit_points);
    ok &= run(8, "skeleton valuations", 10, skeleton_suite);
    std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILED");
    return ok ? 0 : 1;
}
