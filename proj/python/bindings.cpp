// Python module: JSON text in, JSON text out, mirroring the CLI subcommands.
#include "lextrop/checks.hpp"
#include "lextrop/error.hpp"
#include "lextrop/io.hpp"
#include "lextrop/render.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace lextrop;
using io::Json;

namespace {

ValuatedPolynomial polynomial(const std::string& text) { return io::polynomial_from_json(io::parse_json(text)); }

std::string trop(const std::string& poly) { return io::to_json(trop_hypersurface(polynomial(poly))).dump(); }

std::string closure(const std::string& poly) { return io::to_json(banerjee_trop(polynomial(poly))).dump(); }

bool membership(const std::string& poly, const std::string& point) {
    ValuatedPolynomial p = polynomial(poly);
    return trop_membership(p, io::point_from_json(io::parse_json(point), p.rank()));
}

std::string path(const std::string& poly, const std::string& from, const std::string& to) {
    LexComplex c = trop_hypersurface(polynomial(poly));
    return io::to_json(connect(c, io::point_from_json(io::parse_json(from), c.rank()),
                               io::point_from_json(io::parse_json(to), c.rank())))
        .dump();
}

py::tuple verify(const std::string& poly, const std::string& certificate) {
    PathVerdict v = verify_path(io::path_from_json(io::parse_json(certificate)), trop_hypersurface(polynomial(poly)));
    return py::make_tuple(v.ok, v.diagnostic);
}

std::string nu(const std::string& series, std::size_t rank) { return to_string(nu_mon(parse_hahn_series(series, rank))); }

int compare(const std::string& a, const std::string& b) {
    auto c = lex_cmp(parse_lexvalue(a), parse_lexvalue(b));
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string skeleton(const std::string& job_text) {
    io::SkeletonJob job = io::skeleton_job_from_json(io::parse_json(job_text));
    Json out = Json::object();
    Json evals = Json::array();
    for (const auto& p : job.evaluate) {
        Json values = Json::object();
        for (const auto& f : job.functions) values[f] = to_string(chart_valuation(job.graph, job.charts, f, p));
        evals.push_back({{"point", io::to_json(p)}, {"values", values}});
    }
    out["evaluations"] = evals;
    if (!job.functions.empty())
        out["injectivity"] = io::to_json(faithful_injectivity_check(job.graph, job.charts, job.functions, job.samples));
    if (job.path) out["path"] = io::to_json(skeleton_path(job.graph, job.path->first, job.path->second));
    return out.dump();
}

std::vector<py::tuple> check(std::uint64_t seed, std::size_t samples) {
    std::vector<py::tuple> out;
    for (const auto& r : run_property_suites({seed, samples})) out.push_back(py::make_tuple(r.name, r.passed, r.total, r.failures));
    return out;
}

std::string render(const std::string& poly, const std::string& bbox) {
    LexComplex c = trop_hypersurface(polynomial(poly));
    if (c.rank() != 2) throw DomainError("render draws rank-2 inputs only");
    std::vector<EuclideanPiece> pieces;
    for (const auto& cell : c.cells())
        for (auto& piece : cell.flatten()) pieces.push_back(std::move(piece));
    return render_svg(pieces, c.dim(), parse_bbox(bbox));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact tropical geometry over lexicographically ordered value groups";

    auto base = py::register_exception<Error>(m, "LextropError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<RankMismatch>(m, "RankMismatch", base.ptr());
    py::register_exception<PointNotInComplex>(m, "PointNotInComplex", base.ptr());
    py::register_exception<Disconnected>(m, "Disconnected", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());

    m.def("trop", &trop, py::arg("polynomial"), "Maximal cells of the tropical hypersurface, as JSON.");
    m.def("closure", &closure, py::arg("polynomial"), "Closed Euclidean pieces of the flattened hypersurface, as JSON.");
    m.def("membership", &membership, py::arg("polynomial"), py::arg("point"));
    m.def("path", &path, py::arg("polynomial"), py::arg("source"), py::arg("target"),
          "Piecewise-linear path certificate, as JSON.");
    m.def("verify", &verify, py::arg("polynomial"), py::arg("certificate"), "(ok, diagnostic) for a path certificate.");
    m.def("nu_mon", &nu, py::arg("series"), py::arg("rank"));
    m.def("lex_compare", &compare, py::arg("a"), py::arg("b"));
    m.def("skeleton", &skeleton, py::arg("job"));
    m.def("check", &check, py::arg("seed") = 7, py::arg("samples") = 20,
          "Property suites as (name, passed, total, failures) tuples.");
    m.def("render", &render, py::arg("polynomial"), py::arg("bbox") = "-3,-3,3,3");
}
