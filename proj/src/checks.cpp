#include "lextrop/checks.hpp"

#include "lextrop/error.hpp"
#include "lextrop/fixtures.hpp"
#include "lextrop/io.hpp"
#include "lextrop/paths.hpp"
#include "lextrop/random.hpp"

#include <functional>
#include <random>

namespace lextrop {

namespace {

constexpr std::size_t kMaxReported = 5;

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++result_.total;
        if (ok) {
            ++result_.passed;
        } else if (result_.failures.size() < kMaxReported) {
            result_.failures.push_back(describe());
        }
    }

    // Runs one case; an exception counts as a failure.
    void run(const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            expect(false, [&] { return std::string("exception: ") + e.what(); });
        }
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string show(const LexPoint& w) { return io::to_json(w).dump(); }

SuiteResult lex_order(std::mt19937_64& rng, std::size_t n) {
    Suite s("lex-order");
    for (std::size_t i = 0; i < 10 * n; ++i) {
        s.run([&] {
            std::size_t k = pick(rng, 1, 3);
            LexValue a = random_lexvalue(rng, k), b = random_lexvalue(rng, k), c = random_lexvalue(rng, k);
            auto desc = [&] { return to_string(a) + ", " + to_string(b) + ", " + to_string(c); };
            s.expect((a <= b) || (b <= a), desc);
            s.expect(!(a <= b && b <= c) || a <= c, desc);
            s.expect(!(a <= b) || a + c <= b + c, desc);
            s.expect(a + LexValue::infinity() == LexValue::infinity(), desc);
            std::int64_t j = static_cast<std::int64_t>(pick(rng, 0, k));
            s.expect(!(a <= b) || project(a, j) <= project(b, j), desc);
        });
    }
    return s.take();
}

SuiteResult hahn_valuation(std::mt19937_64& rng, std::size_t n) {
    Suite s("hahn-valuation");
    for (std::size_t i = 0; i < 10 * n; ++i) {
        s.run([&] {
            std::size_t k = pick(rng, 1, 3);
            HahnSeries f = random_hahn_series(rng, k, 6), g = random_hahn_series(rng, k, 6);
            LexValue vf = nu_mon(f), vg = nu_mon(g);
            auto desc = [&] { return to_string(f) + " ; " + to_string(g); };
            s.expect(nu_mon(f * g) == vf + vg, desc);
            LexValue vs = nu_mon(f + g);
            s.expect(vs >= lex_min(vf, vg), desc);
            s.expect(vf == vg || vs == lex_min(vf, vg), desc);
        });
    }
    return s.take();
}

SuiteResult trop_oracle(std::mt19937_64& rng, std::size_t n) {
    Suite s("trop-membership");
    for (std::size_t i = 0; i < n; ++i) {
        s.run([&] {
            std::size_t k = pick(rng, 1, 3), d = pick(rng, 1, 3);
            ValuatedPolynomial p = random_polynomial(rng, k, d, 6);
            LexComplex c = trop_hypersurface(p);
            for (std::size_t m = 0; m < 20; ++m) {
                LexPoint w;
                if (m % 2 == 0 && !c.empty()) w = *c.cells()[pick(rng, 0, c.size() - 1)].sample_point(rng);
                else w = random_point(rng, k, d);
                s.expect(trop_membership(p, w) == c.contains(w),
                         [&] { return io::to_json(p).dump() + " at " + show(w); });
            }
        });
    }
    return s.take();
}

SuiteResult emptiness(std::mt19937_64& rng, std::size_t n) {
    Suite s("emptiness");
    for (std::size_t i = 0; i < 5 * n; ++i) {
        s.run([&] {
            LexPolyhedron p = random_polyhedron(rng, pick(rng, 1, 3), pick(rng, 1, 3), pick(rng, 1, 5));
            bool by_levels = p.is_empty();
            s.expect(by_levels == p.flatten().empty(), [&] { return io::to_json(p).dump(); });
            if (auto w = p.find_point()) s.expect(p.contains(*w), [&] { return io::to_json(p).dump(); });
        });
    }
    return s.take();
}

SuiteResult closure(std::mt19937_64& rng, std::size_t n) {
    Suite s("closure-contains-set");
    for (std::size_t i = 0; i < 2 * n; ++i) {
        s.run([&] {
            std::size_t k = pick(rng, 1, 2);
            LexPolyhedron p = random_polyhedron(rng, k, pick(rng, 1, 2), pick(rng, 1, 4));
            auto pieces = p.euclidean_closure();
            for (std::size_t m = 0; m < 10; ++m) {
                auto w = p.sample_point(rng);
                if (!w) break;
                auto x = flatten_point(*w, k);
                bool inside = false;
                for (const auto& piece : pieces) inside = inside || piece.contains(x);
                s.expect(inside, [&] { return io::to_json(p).dump() + " at " + show(*w); });
            }
        });
    }
    return s.take();
}

SuiteResult paths(std::mt19937_64& rng, std::size_t n) {
    Suite s("path-certificates");
    std::size_t done = 0;
    for (std::size_t attempt = 0; done < n && attempt < 10 * n; ++attempt) {
        std::size_t k = pick(rng, 1, 3), d = pick(rng, 1, 3);
        ValuatedPolynomial p = random_polynomial(rng, k, d, 6);
        LexComplex c = trop_hypersurface(p);
        if (c.empty()) continue;
        CellAdjacency adj = build_adjacency(c);
        if (!adj.is_connected()) continue;
        ++done;
        s.run([&] {
            for (std::size_t m = 0; m < 5; ++m) {
                auto a = *c.cells()[pick(rng, 0, c.size() - 1)].sample_point(rng);
                auto b = *c.cells()[pick(rng, 0, c.size() - 1)].sample_point(rng);
                PathVerdict v = verify_path(connect(c, adj, a, b), c);
                s.expect(v.ok, [&] { return v.diagnostic + " for " + io::to_json(p).dump(); });
            }
        });
    }
    return s.take();
}

SuiteResult projection(std::mt19937_64& rng, std::size_t n) {
    Suite s("projection-tower");
    for (std::size_t i = 0; i < n; ++i) {
        s.run([&] {
            std::size_t k = pick(rng, 2, 3), d = pick(rng, 1, 3);
            ValuatedPolynomial p = random_polynomial(rng, k, d, 6);
            LexComplex c = trop_hypersurface(p);
            for (std::size_t j = 1; j < k; ++j) {
                ValuatedPolynomial low = p.truncated(j);
                for (std::size_t m = 0; m < 5 && !c.empty(); ++m) {
                    auto w = *c.cells()[pick(rng, 0, c.size() - 1)].sample_point(rng);
                    s.expect(trop_membership(low, project_point(w, j)), [&] { return "projection of " + show(w); });
                }
                LexComplex lc = trop_hypersurface(low);
                for (std::size_t m = 0; m < 5 && !lc.empty(); ++m) {
                    auto w = *lc.cells()[pick(rng, 0, lc.size() - 1)].sample_point(rng);
                    auto up = lift_point(p, w);
                    s.expect(up && trop_membership(p, *up) && project_point(*up, j) == w,
                             [&] { return "lift of " + show(w) + " for " + io::to_json(p).dump(); });
                }
            }
        });
    }
    return s.take();
}

SuiteResult round_trip(std::mt19937_64& rng, std::size_t n) {
    Suite s("json-round-trip");
    for (std::size_t i = 0; i < n; ++i) {
        s.run([&] {
            std::size_t k = pick(rng, 1, 3), d = pick(rng, 1, 3);
            ValuatedPolynomial p = random_polynomial(rng, k, d, 6);
            s.expect(io::polynomial_from_json(io::parse_json(io::to_json(p).dump())) == p, [&] { return io::to_json(p).dump(); });
            LexComplex c = trop_hypersurface(p);
            if (!c.empty()) {
                LexComplex back = io::complex_from_json(io::parse_json(io::to_json(c).dump()));
                s.expect(back == c, [&] { return io::to_json(c).dump(); });
                auto a = *c.cells().front().sample_point(rng);
                auto b = *c.cells().back().sample_point(rng);
                CellAdjacency adj = build_adjacency(c);
                if (adj.is_connected()) {
                    PLPath path = connect(c, adj, a, b);
                    std::string text = io::to_json(path).dump();
                    s.expect(io::to_json(io::path_from_json(io::parse_json(text))).dump() == text, [&] { return text; });
                }
            }
            HahnSeries f = random_hahn_series(rng, k, 6);
            s.expect(parse_hahn_series(to_string(f), k) == f, [&] { return to_string(f); });
            LexValue v = random_lexvalue(rng, k);
            s.expect(parse_lexvalue(to_string(v)) == v, [&] { return to_string(v); });
        });
    }
    return s.take();
}

HahnPolynomial random_chart_function(std::mt19937_64& rng, std::size_t rank, std::size_t arity) {
    HahnPolynomial f;
    std::size_t terms = pick(rng, 1, 3);
    for (std::size_t t = 0; t < terms; ++t) {
        Exponent u(arity);
        for (auto& e : u) e = static_cast<std::int64_t>(pick(rng, 0, 2));
        HahnSeries c = random_hahn_series(rng, rank, 3);
        if (c.is_zero()) c = HahnSeries::constant(rank, 1);
        f = hp_add(f, HahnPolynomial{{u, c}});
    }
    return f;
}

SuiteResult skeleton(std::mt19937_64& rng, std::size_t n) {
    Suite s("skeleton");
    const std::vector<LexValue> lengths = {LexValue{1, 0}, LexValue{2, 1}, LexValue{0, 3}};
    for (const auto& length : lengths) {
        for (std::size_t i = 0; i < 5 * n; ++i) {
            s.run([&] {
                bool marked = pick(rng, 0, 1) == 1;
                std::size_t arity = marked ? 1 : 2;
                HahnPolynomial f = random_chart_function(rng, 2, arity), h = random_chart_function(rng, 2, arity);
                LexValue omega;
                if (marked) {
                    omega = pick(rng, 0, 3) == 0 ? LexValue::infinity() : scale(Rational(static_cast<long>(pick(rng, 0, 8)), 2u), LexValue{1, 0});
                } else {
                    omega = scale(Rational(static_cast<long>(pick(rng, 0, 8)), 8u), length);
                }
                auto val = [&](const HahnPolynomial& q) {
                    ValuatedPolynomial vp = ValuatedPolynomial::from_hahn(2, arity, q);
                    return marked ? marked_edge_valuation(vp, omega) : edge_valuation(vp, length, omega);
                };
                LexValue vf = val(f), vh = val(h);
                s.expect(val(hp_mul(f, h)) == vf + vh, [&] { return "product law at " + to_string(omega); });
                LexValue vs = val(hp_add(f, h));
                s.expect(vs >= lex_min(vf, vh) && (vf == vh || vs == lex_min(vf, vh)),
                         [&] { return "sum law at " + to_string(omega); });
            });
        }
    }
    s.run([&] {
        auto f = fixtures::two_cycle();
        s.expect(faithful_injectivity_check(f.graph, f.charts, f.functions, 4).injective,
                 [] { return std::string("two-cycle collection should separate the grid"); });
        auto d = fixtures::two_cycle_degenerate();
        auto report = faithful_injectivity_check(d.graph, d.charts, d.functions, 4);
        s.expect(!report.injective && report.witness.has_value(),
                 [] { return std::string("degenerate collection should collide"); });
    });
    return s.take();
}

} // namespace

std::vector<SuiteResult> run_property_suites(const CheckOptions& options) {
    std::mt19937_64 rng(options.seed);
    const std::size_t n = std::max<std::size_t>(options.samples, 1);
    std::vector<SuiteResult> out;
    out.push_back(lex_order(rng, n));
    out.push_back(hahn_valuation(rng, n));
    out.push_back(trop_oracle(rng, n));
    out.push_back(emptiness(rng, n));
    out.push_back(closure(rng, n));
    out.push_back(paths(rng, n));
    out.push_back(projection(rng, n));
    out.push_back(round_trip(rng, n));
    out.push_back(skeleton(rng, n));
    return out;
}

} // namespace lextrop
