#include "lextrop/render.hpp"

#include "lextrop/error.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace lextrop {

namespace {

constexpr double kPanel = 360;
constexpr double kMargin = 30;
constexpr double kEps = 1e-9;

struct Pt {
    double x, y;
};

// a.x + b.y >= c
struct HalfPlane {
    double a, b, c;
    bool strict;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return buf;
}

std::vector<Pt> clip(const std::vector<Pt>& poly, const HalfPlane& h) {
    std::vector<Pt> out;
    auto side = [&](const Pt& p) { return h.a * p.x + h.b * p.y - h.c; };
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Pt& p = poly[i];
        const Pt& q = poly[(i + 1) % poly.size()];
        double sp = side(p), sq = side(q);
        if (sp >= -kEps) out.push_back(p);
        if ((sp >= -kEps) != (sq >= -kEps)) {
            double t = sp / (sp - sq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

double area(const std::vector<Pt>& poly) {
    double a = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Pt& p = poly[i];
        const Pt& q = poly[(i + 1) % poly.size()];
        a += p.x * q.y - q.x * p.y;
    }
    return a / 2;
}

const std::array<const char*, 6> kColors = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2"};

class Panel {
public:
    Panel(std::ostringstream& out, const BoundingBox& box, double left) : out_(out), box_(box), left_(left) {}

    double sx(double x) const { return left_ + kMargin + (x - box_.xmin) / (box_.xmax - box_.xmin) * kPanel; }
    double sy(double y) const { return kMargin + (box_.ymax - y) / (box_.ymax - box_.ymin) * kPanel; }

    void frame(const std::string& title) {
        out_ << "<rect x=\"" << fmt(left_ + kMargin) << "\" y=\"" << fmt(kMargin) << "\" width=\"" << fmt(kPanel)
             << "\" height=\"" << fmt(kPanel) << "\" fill=\"none\" stroke=\"#999\"/>\n";
        if (box_.xmin < 0 && box_.xmax > 0)
            out_ << "<line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(box_.ymin)) << "\" x2=\"" << fmt(sx(0)) << "\" y2=\""
                 << fmt(sy(box_.ymax)) << "\" stroke=\"#ddd\"/>\n";
        if (box_.ymin < 0 && box_.ymax > 0)
            out_ << "<line x1=\"" << fmt(sx(box_.xmin)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\"" << fmt(sx(box_.xmax))
                 << "\" y2=\"" << fmt(sy(0)) << "\" stroke=\"#ddd\"/>\n";
        out_ << "<text x=\"" << fmt(left_ + kMargin) << "\" y=\"" << fmt(kMargin - 10) << "\" font-size=\"12\">" << title
             << "</text>\n";
    }

    void piece(const std::vector<HalfPlane>& planes, const char* color) {
        std::vector<Pt> poly = {{box_.xmin, box_.ymin}, {box_.xmax, box_.ymin}, {box_.xmax, box_.ymax}, {box_.xmin, box_.ymax}};
        for (const auto& h : planes) {
            poly = clip(poly, h);
            if (poly.empty()) return;
        }
        if (std::abs(area(poly)) > kEps) {
            out_ << "<polygon points=\"";
            for (std::size_t i = 0; i < poly.size(); ++i) out_ << (i ? " " : "") << fmt(sx(poly[i].x)) << "," << fmt(sy(poly[i].y));
            out_ << "\" fill=\"" << color << "\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
        }
        // Boundary edges: polygon edges lying on one of the constraint lines.
        bool drew = false;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Pt& p = poly[i];
            const Pt& q = poly[(i + 1) % poly.size()];
            if (std::hypot(p.x - q.x, p.y - q.y) < kEps) continue;
            for (const auto& h : planes) {
                double norm = std::hypot(h.a, h.b);
                if (norm == 0) continue;
                auto off = [&](const Pt& r) { return std::abs(h.a * r.x + h.b * r.y - h.c) / norm; };
                if (off(p) > 1e-7 || off(q) > 1e-7) continue;
                out_ << "<line x1=\"" << fmt(sx(p.x)) << "\" y1=\"" << fmt(sy(p.y)) << "\" x2=\"" << fmt(sx(q.x)) << "\" y2=\""
                     << fmt(sy(q.y)) << "\" stroke=\"" << color << "\" stroke-width=\"2\""
                     << (h.strict ? " stroke-dasharray=\"6,4\"" : "") << "/>\n";
                drew = true;
                break;
            }
        }
        if (!drew && std::abs(area(poly)) <= kEps) {
            out_ << "<circle cx=\"" << fmt(sx(poly.front().x)) << "\" cy=\"" << fmt(sy(poly.front().y))
                 << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
    }

private:
    std::ostringstream& out_;
    BoundingBox box_;
    double left_;
};

} // namespace

BoundingBox parse_bbox(const std::string& text) {
    std::array<double, 4> v{};
    std::size_t pos = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        std::size_t comma = text.find(',', pos);
        if ((i < 3) != (comma != std::string::npos)) throw ParseError("bbox must be xmin,ymin,xmax,ymax", pos);
        std::string field = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            v[i] = std::stod(field, &used);
            if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw ParseError("bbox entries must be numbers", pos);
        }
        pos = comma + 1;
    }
    BoundingBox box{v[0], v[1], v[2], v[3]};
    if (!(box.xmin < box.xmax && box.ymin < box.ymax)) throw DomainError("bbox must have xmin < xmax and ymin < ymax");
    return box;
}

std::string render_svg(const std::vector<EuclideanPiece>& pieces, std::size_t dim, const BoundingBox& box) {
    if (dim == 0 || dim > 2) throw DomainError("render supports one or two variables");
    for (const auto& p : pieces)
        if (p.dim() != 2 * dim) throw DomainError("render expects rank-2 flattened pieces in R^" + std::to_string(2 * dim));
    std::ostringstream out;
    const double width = dim * (kPanel + 2 * kMargin);
    const double height = kPanel + 2 * kMargin;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    for (std::size_t var = 0; var < dim; ++var) {
        Panel panel(out, box, var * (kPanel + 2 * kMargin));
        panel.frame("w" + std::to_string(var + 1) + ": level 1 (horizontal), level 2 (vertical)");
        const std::array<std::size_t, 2> keep = {2 * var, 2 * var + 1};
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (pieces[i].is_empty()) continue;
            EuclideanPiece shadow = pieces[i].project(keep);
            std::vector<HalfPlane> planes;
            for (const auto& c : shadow.constraints()) {
                double a = c.coeffs[0].get_d(), b = c.coeffs[1].get_d(), r = c.rhs.get_d();
                if (c.rel == Relation::Eq) {
                    planes.push_back({a, b, r, false});
                    planes.push_back({-a, -b, -r, false});
                } else {
                    planes.push_back({a, b, r, c.rel == Relation::Gt});
                }
            }
            panel.piece(planes, kColors[i % kColors.size()]);
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace lextrop
