#include "tropgw_cli/svg.hpp"

#include "tropgw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace tropgw::cli {

namespace {

double to_double(const Rational &q) { return q.get_d(); }

struct Frame {
    double min_x, min_y, max_x, max_y;
    double size = 560, margin = 20;

    double sx(double x) const { return margin + (x - min_x) / std::max(max_x - min_x, 1e-9) * size; }
    double sy(double y) const { return margin + (max_y - y) / std::max(max_y - min_y, 1e-9) * size; }
};

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << v;
    return s.str();
}

} // namespace

std::vector<RationalPoint> face_outline(const IntegralAffinePolytope &p, const Rational &bound) {
    if (p.ambient_dim() != 2) fail(ErrorCategory::Diagram, "only planar faces can be drawn");
    std::vector<Constraint> cs = p.constraints();
    for (int axis = 0; axis < 2; ++axis)
        for (int sign : {1, -1}) {
            IntegralVector lin(2);
            lin[axis] = -sign;
            cs.push_back(Constraint{{lin, bound}, false});
        }
    auto inside = [&](const RationalPoint &x) {
        return std::all_of(cs.begin(), cs.end(), [&](const Constraint &c) { return c.functional(x) >= 0; });
    };
    std::vector<RationalPoint> pts;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            const auto &a = cs[i].functional, &b = cs[j].functional;
            const Rational det = Rational(a.linear[0] * b.linear[1] - a.linear[1] * b.linear[0]);
            if (det == 0) continue;
            // a.x = -ca, b.x = -cb
            const Rational x = (-a.constant * Rational(b.linear[1]) + b.constant * Rational(a.linear[1])) / det;
            const Rational y = (-b.constant * Rational(a.linear[0]) + a.constant * Rational(b.linear[0])) / det;
            RationalPoint q{x, y};
            if (inside(q) && std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
        }
    if (pts.size() <= 2) return pts;
    double cx = 0, cy = 0;
    for (const auto &q : pts) cx += to_double(q[0]), cy += to_double(q[1]);
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](const RationalPoint &a, const RationalPoint &b) {
        return std::atan2(to_double(a[1]) - cy, to_double(a[0]) - cx) < std::atan2(to_double(b[1]) - cy, to_double(b[0]) - cx);
    });
    // Collinear candidates: keep the two extremes.
    bool collinear = true;
    for (std::size_t i = 2; i < pts.size() && collinear; ++i) {
        const Rational cross = (pts[1][0] - pts[0][0]) * (pts[i][1] - pts[0][1]) - (pts[1][1] - pts[0][1]) * (pts[i][0] - pts[0][0]);
        collinear = cross == 0;
    }
    if (collinear) {
        auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
        return {*lo, *hi};
    }
    return pts;
}

std::string render_svg(const PolyhedralComplex &complex, const TropicalCurve *curve) {
    if (complex.ambient_dim() != 2) fail(ErrorCategory::Diagram, "only complexes in R^2 can be drawn");
    Rational bound = 1;
    auto grow = [&](const Rational &v) {
        const Rational a = v < 0 ? Rational(-v) : v;
        if (a + 1 > bound) bound = a + 1;
    };
    for (const auto &f : complex.faces())
        for (const auto &c : f.polytope.constraints()) grow(c.functional.constant);
    if (curve)
        for (const auto &v : curve->vertices()) grow(v.position[0]), grow(v.position[1]);

    std::vector<std::pair<const Face *, std::vector<RationalPoint>>> outlines;
    Frame fr{1e300, 1e300, -1e300, -1e300};
    auto include = [&](double x, double y) {
        fr.min_x = std::min(fr.min_x, x), fr.max_x = std::max(fr.max_x, x);
        fr.min_y = std::min(fr.min_y, y), fr.max_y = std::max(fr.max_y, y);
    };
    for (const auto &f : complex.faces()) {
        auto pts = face_outline(f.polytope, bound);
        for (const auto &p : pts) include(to_double(p[0]), to_double(p[1]));
        outlines.emplace_back(&f, std::move(pts));
    }
    if (curve)
        for (const auto &v : curve->vertices()) include(to_double(v.position[0]), to_double(v.position[1]));
    const double pad = 0.08 * std::max(fr.max_x - fr.min_x, fr.max_y - fr.min_y) + 0.5;
    fr.min_x -= pad, fr.min_y -= pad, fr.max_x += pad, fr.max_y += pad;
    const double side = std::max(fr.max_x - fr.min_x, fr.max_y - fr.min_y);
    fr.max_x = fr.min_x + side, fr.max_y = fr.min_y + side;

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
    s << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    // Higher-dimensional faces first so lower ones stay visible.
    std::stable_sort(outlines.begin(), outlines.end(), [](const auto &a, const auto &b) { return a.second.size() > b.second.size(); });
    for (const auto &[face, pts] : outlines) {
        if (pts.size() >= 3) {
            s << "<polygon fill=\"#dde8f5\" stroke=\"#557\" stroke-width=\"1\" points=\"";
            for (const auto &p : pts) s << fmt(fr.sx(to_double(p[0]))) << "," << fmt(fr.sy(to_double(p[1]))) << " ";
            s << "\"><title>" << face->id << "</title></polygon>\n";
        } else if (pts.size() == 2) {
            s << "<line x1=\"" << fmt(fr.sx(to_double(pts[0][0]))) << "\" y1=\"" << fmt(fr.sy(to_double(pts[0][1])))
              << "\" x2=\"" << fmt(fr.sx(to_double(pts[1][0]))) << "\" y2=\"" << fmt(fr.sy(to_double(pts[1][1])))
              << "\" stroke=\"#335\" stroke-width=\"2\"><title>" << face->id << "</title></line>\n";
        } else if (pts.size() == 1) {
            s << "<circle cx=\"" << fmt(fr.sx(to_double(pts[0][0]))) << "\" cy=\"" << fmt(fr.sy(to_double(pts[0][1])))
              << "\" r=\"4\" fill=\"#335\"><title>" << face->id << "</title></circle>\n";
        }
    }
    if (curve) {
        for (const auto &e : curve->internal_edges()) {
            const auto &a = curve->vertex(e.tail).position;
            const auto &b = curve->vertex(e.head).position;
            s << "<line x1=\"" << fmt(fr.sx(to_double(a[0]))) << "\" y1=\"" << fmt(fr.sy(to_double(a[1]))) << "\" x2=\""
              << fmt(fr.sx(to_double(b[0]))) << "\" y2=\"" << fmt(fr.sy(to_double(b[1]))) << "\" stroke=\"#c22\" stroke-width=\""
              << 1.5 * content(e.derivative).get_d() << "\"><title>" << e.id << " " << e.derivative.to_string()
              << "</title></line>\n";
        }
        const double arm = 0.06 * side;
        std::map<std::string, int> contracted;
        for (const auto &e : curve->ends()) {
            const auto &a = curve->vertex(e.vertex).position;
            if (e.derivative.is_zero()) {
                ++contracted[e.vertex];
                continue;
            }
            const double dx = e.derivative[0].get_d(), dy = e.derivative[1].get_d();
            const double n = std::hypot(dx, dy);
            const double x0 = to_double(a[0]), y0 = to_double(a[1]);
            s << "<line x1=\"" << fmt(fr.sx(x0)) << "\" y1=\"" << fmt(fr.sy(y0)) << "\" x2=\"" << fmt(fr.sx(x0 + arm * dx / n))
              << "\" y2=\"" << fmt(fr.sy(y0 + arm * dy / n)) << "\" stroke=\"#c22\" stroke-dasharray=\"4 3\"><title>" << e.label
              << "</title></line>\n";
        }
        for (const auto &v : curve->vertices()) {
            const double x = fr.sx(to_double(v.position[0])), y = fr.sy(to_double(v.position[1]));
            s << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3.5\" fill=\"#c22\"/>\n";
            s << "<text x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y - 6) << "\" font-size=\"12\" font-family=\"sans-serif\">" << v.id;
            if (contracted.contains(v.id)) s << " (" << contracted.at(v.id) << " ends)";
            s << "</text>\n";
        }
    }
    s << "</svg>\n";
    return s.str();
}

} // namespace tropgw::cli
