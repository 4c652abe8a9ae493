// lextrop: command-line front end for the lex tropical geometry library.

#include "lextrop/checks.hpp"
#include "lextrop/error.hpp"
#include "lextrop/io.hpp"
#include "lextrop/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lextrop;
using io::Json;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitProperty = 3;

struct Options {
    std::string in = "-";
    std::string out = "-";
    std::optional<std::size_t> rank;
    std::optional<std::size_t> dim;
    std::uint64_t seed = 7;
    std::size_t samples = 20;
    std::string bbox = "-3,-3,3,3";
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open input file '" + path + "'");
    buf << f.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open output file '" + path + "'");
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool is_halfspace_text(const std::string& s) { return s.find('(') != std::string::npos || s.find("inf") != std::string::npos; }

// Classifies a JSON input as polynomial, polyhedron, complex, or pieces.
enum class Shape { Polynomial, Polyhedron, Complex, Pieces };

Shape classify(const Json& j) {
    if (j.is_object()) return Shape::Polynomial;
    if (!j.is_array()) throw ParseError("expected a polynomial object or an array of constraints", 0);
    if (j.empty()) return Shape::Complex;
    if (j.front().is_string()) return Shape::Polyhedron;
    if (j.front().is_array()) {
        for (const auto& cell : j)
            for (const auto& s : cell)
                if (s.is_string()) return is_halfspace_text(s.get<std::string>()) ? Shape::Complex : Shape::Pieces;
        return Shape::Complex;
    }
    throw ParseError("unrecognized input shape", 0);
}

LexComplex complex_of_job(const Json& job, const Options& opt) {
    if (job.contains("complex")) return io::complex_from_json(job.at("complex"), opt.rank, opt.dim);
    if (job.contains("polynomial")) return trop_hypersurface(io::polynomial_from_json(job.at("polynomial"), opt.rank, opt.dim));
    throw ParseError("job needs a 'complex' or a 'polynomial' field", 0);
}

int run_trop(const Options& opt) {
    ValuatedPolynomial p = io::polynomial_from_json(io::parse_json(read_input(opt.in)), opt.rank, opt.dim);
    write_output(opt.out, dump(io::to_json(trop_hypersurface(p))));
    return 0;
}

int run_closure(const Options& opt) {
    Json j = io::parse_json(read_input(opt.in));
    std::vector<EuclideanPiece> pieces;
    switch (classify(j)) {
    case Shape::Polynomial: pieces = banerjee_trop(io::polynomial_from_json(j, opt.rank, opt.dim)); break;
    case Shape::Polyhedron: pieces = io::polyhedron_from_json(j, opt.rank, opt.dim).euclidean_closure(); break;
    case Shape::Complex: {
        for (const auto& cell : io::complex_from_json(j, opt.rank, opt.dim).cells())
            for (auto& piece : cell.euclidean_closure()) pieces.push_back(std::move(piece));
        pieces = canonical_union(std::move(pieces));
        break;
    }
    case Shape::Pieces: {
        for (const auto& piece : io::pieces_from_json(j)) pieces.push_back(piece.closure());
        pieces = canonical_union(std::move(pieces));
        break;
    }
    }
    write_output(opt.out, dump(io::to_json(pieces)));
    return 0;
}

int run_path(const Options& opt) {
    Json job = io::parse_json(read_input(opt.in));
    LexComplex c = complex_of_job(job, opt);
    if (!job.contains("from") || !job.contains("to")) throw ParseError("path job needs 'from' and 'to' points", 0);
    LexPoint from = io::point_from_json(job.at("from"), c.rank());
    LexPoint to = io::point_from_json(job.at("to"), c.rank());
    write_output(opt.out, dump(io::to_json(connect(c, from, to))));
    return 0;
}

int run_verify(const Options& opt) {
    Json job = io::parse_json(read_input(opt.in));
    LexComplex c = complex_of_job(job, opt);
    if (!job.contains("certificate")) throw ParseError("verify job needs a 'certificate'", 0);
    PathVerdict v = verify_path(io::path_from_json(job.at("certificate")), c);
    Json out = {{"valid", v.ok}};
    if (!v.ok) {
        out["diagnostic"] = v.diagnostic;
        if (v.segment) out["segment"] = *v.segment;
        if (v.constraint) out["constraint"] = *v.constraint;
    }
    write_output(opt.out, dump(out));
    return v.ok ? 0 : kExitProperty;
}

int run_skeleton(const Options& opt) {
    io::SkeletonJob job = io::skeleton_job_from_json(io::parse_json(read_input(opt.in)));
    Json out = Json::object();
    if (!job.evaluate.empty()) {
        Json evals = Json::array();
        for (const auto& p : job.evaluate) {
            Json values = Json::object();
            for (const auto& f : job.functions) values[f] = to_string(chart_valuation(job.graph, job.charts, f, p));
            evals.push_back({{"point", io::to_json(p)}, {"values", values}});
        }
        out["evaluations"] = evals;
    }
    if (!job.functions.empty())
        out["injectivity"] = io::to_json(faithful_injectivity_check(job.graph, job.charts, job.functions, job.samples));
    if (job.path) out["path"] = io::to_json(skeleton_path(job.graph, job.path->first, job.path->second));
    write_output(opt.out, dump(out));
    return 0;
}

int run_check(const Options& opt) {
    auto results = run_property_suites({opt.seed, opt.samples});
    std::ostringstream text;
    bool ok = true;
    for (const auto& r : results) {
        text << (r.ok() ? "PASS " : "FAIL ") << r.name << " " << r.passed << "/" << r.total << "\n";
        for (const auto& f : r.failures) text << "  " << f << "\n";
        ok = ok && r.ok();
    }
    text << (ok ? "all suites passed" : "property suite failure") << " (seed " << opt.seed << ")\n";
    write_output(opt.out, text.str());
    return ok ? 0 : kExitProperty;
}

int run_render(const Options& opt) {
    Json j = io::parse_json(read_input(opt.in));
    BoundingBox box = parse_bbox(opt.bbox);
    std::vector<EuclideanPiece> pieces;
    std::size_t dim = 0;
    auto take_cells = [&](const std::vector<LexPolyhedron>& cells, std::size_t rank, std::size_t d) {
        if (rank != 2) throw DomainError("render draws rank-2 inputs only");
        dim = d;
        for (const auto& cell : cells)
            for (auto& piece : cell.flatten()) pieces.push_back(std::move(piece));
    };
    switch (classify(j)) {
    case Shape::Polynomial: {
        LexComplex c = trop_hypersurface(io::polynomial_from_json(j, opt.rank, opt.dim));
        take_cells(c.cells(), c.rank(), c.dim());
        break;
    }
    case Shape::Polyhedron: {
        LexPolyhedron p = io::polyhedron_from_json(j, opt.rank, opt.dim);
        take_cells({p}, p.rank(), p.dim());
        break;
    }
    case Shape::Complex: {
        LexComplex c = io::complex_from_json(j, opt.rank, opt.dim);
        take_cells(c.cells(), c.rank(), c.dim());
        break;
    }
    case Shape::Pieces: {
        pieces = io::pieces_from_json(j);
        if (pieces.empty()) throw DomainError("nothing to render");
        if (pieces.front().dim() % 2 != 0) throw DomainError("render draws rank-2 flattenings (even dimension)");
        dim = pieces.front().dim() / 2;
        break;
    }
    }
    write_output(opt.out, render_svg(pieces, dim, box));
    return 0;
}

void diagnose(const char* category, const std::exception& e) {
    Json d = {{"error", category}, {"message", e.what()}};
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) d["offset"] = pe->offset();
    else if (dynamic_cast<const RankMismatch*>(&e)) d["kind"] = "rank_mismatch";
    else if (dynamic_cast<const PointNotInComplex*>(&e)) d["kind"] = "point_not_in_complex";
    else if (dynamic_cast<const Disconnected*>(&e)) d["kind"] = "disconnected";
    else if (dynamic_cast<const DomainError*>(&e)) d["kind"] = "domain";
    std::cerr << d.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lexicographic tropical geometry: hypersurfaces, closures, paths and skeletons"};
    app.require_subcommand(1);
    Options opt;
    std::size_t rank = 0, dim = 0;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--in", opt.in, "input JSON file ('-' for stdin)");
        sub->add_option("--out", opt.out, "output file ('-' for stdout)");
        sub->add_option("--rank", rank, "rank k of the value group R^(k)")->check(CLI::PositiveNumber);
        sub->add_option("--dim", dim, "number of variables d")->check(CLI::PositiveNumber);
    };
    std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands = {
        {app.add_subcommand("trop", "maximal cells of the tropical hypersurface"), run_trop},
        {app.add_subcommand("closure", "Euclidean closure of the flattened set"), run_closure},
        {app.add_subcommand("path", "piecewise-linear path certificate between two points"), run_path},
        {app.add_subcommand("verify", "check a path certificate against a complex"), run_verify},
        {app.add_subcommand("skeleton", "edge valuations, injectivity and paths on a skeleton"), run_skeleton},
        {app.add_subcommand("check", "randomized property suites"), run_check},
        {app.add_subcommand("render", "SVG of a rank-2 flattening"), run_render},
    };
    for (auto& [sub, fn] : commands) add_io(sub);
    auto* check = commands[5].first;
    check->add_option("--seed", opt.seed, "random seed");
    check->add_option("--samples", opt.samples, "instances per suite")->check(CLI::PositiveNumber);
    commands[6].first->add_option("--bbox", opt.bbox, "xmin,ymin,xmax,ymax");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }
    if (rank) opt.rank = rank;
    if (dim) opt.dim = dim;

    try {
        for (auto& [sub, fn] : commands)
            if (sub->parsed()) return fn(opt);
    } catch (const ParseError& e) {
        diagnose("parse", e);
        return kExitParse;
    } catch (const InputError& e) {
        diagnose("input", e);
        return kExitParse;
    } catch (const Error& e) {
        diagnose("precondition", e);
        return kExitPrecondition;
    }
    return 0;
}
