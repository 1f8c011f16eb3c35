#include "tropcomm/svg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tropcomm/errors.hpp"

namespace tropcomm {

namespace {

// Pixel coordinate: truncate to 3 decimals so output never depends on
// floating point.
std::string px(const Rational& r) {
    BigInt scaled = boost::multiprecision::numerator(r) * 1000 /
                    boost::multiprecision::denominator(r);
    const bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    const BigInt whole = scaled / 1000;
    int frac = static_cast<int>(scaled % 1000);
    std::ostringstream os;
    if (neg && (whole != 0 || frac != 0)) os << '-';
    os << whole;
    if (frac != 0) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "%03d", frac);
        std::string f(buf);
        while (f.back() == '0') f.pop_back();
        os << '.' << f;
    }
    return os.str();
}

std::string point_attr(const Rational& x, const Rational& y) {
    return to_string(x) + "," + to_string(y);
}

struct Panel {
    Rational minx, maxx, miny, maxy; // data bounds incl. 1-unit margin
    Rational width, height;          // in units
};

Panel panel_bounds(const SpanSection& s) {
    Rational minx = 0, maxx = 0, miny = 0, maxy = 0; // origin always shown
    auto take = [&](const Point2& p) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    };
    for (const Point2& g : s.generators) take(g);
    for (const SectionCell& c : s.cells)
        for (const Point2& p : c.vertices) take(p);
    Panel b{minx - 1, maxx + 1, miny - 1, maxy + 1, 0, 0};
    b.width = b.maxx - b.minx;
    b.height = b.maxy - b.miny;
    return b;
}

} // namespace

std::string render_svg(const std::vector<SpanSection>& sections, const RenderOptions& opts) {
    const int unit = opts.px_per_unit;
    std::vector<Panel> panels;
    Rational total_w = 0, total_h = 1;
    for (const SpanSection& s : sections) {
        Panel b = panel_bounds(s);
        total_w += b.width;
        total_h = std::max(total_h, b.height);
        panels.push_back(b);
    }
    if (sections.empty()) total_w = 1;

    std::ostringstream svg;
    const std::string w = px(total_w * unit), h = px(total_h * unit);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";

    Rational offset = 0;
    for (std::size_t k = 0; k < sections.size(); ++k) {
        const SpanSection& s = sections[k];
        const Panel& b = panels[k];
        auto X = [&](const Rational& x) { return px((offset + x - b.minx) * unit); };
        auto Y = [&](const Rational& y) { return px((b.maxy - y) * unit); };

        svg << "  <g class=\"panel\">\n";
        for (const SectionCell& c : s.cells) {
            if (c.dim == 2) {
                svg << "    <polygon points=\"";
                for (std::size_t i = 0; i < c.vertices.size(); ++i) {
                    if (i) svg << ' ';
                    svg << X(c.vertices[i].x) << ',' << Y(c.vertices[i].y);
                }
                svg << "\" fill=\"#c8c8c8\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
            }
        }
        for (const SectionCell& c : s.cells) {
            if (c.dim == 1) {
                svg << "    <line x1=\"" << X(c.vertices[0].x) << "\" y1=\"" << Y(c.vertices[0].y)
                    << "\" x2=\"" << X(c.vertices[1].x) << "\" y2=\"" << Y(c.vertices[1].y)
                    << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
            } else if (c.dim == 0) {
                svg << "    <circle cx=\"" << X(c.vertices[0].x) << "\" cy=\"" << Y(c.vertices[0].y)
                    << "\" r=\"2.5\" fill=\"#000000\"/>\n";
            }
        }
        for (const Point2& g : s.generators) {
            svg << "    <circle cx=\"" << X(g.x) << "\" cy=\"" << Y(g.y)
                << "\" r=\"4\" fill=\"#1f77b4\" stroke=\"#000000\" stroke-width=\"1\""
                << " data-point=\"" << point_attr(g.x, g.y) << "\"/>\n";
        }
        svg << "    <circle cx=\"" << X(0) << "\" cy=\"" << Y(0)
            << "\" r=\"3\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1\""
            << " data-point=\"0,0\"/>\n";
        if (k < opts.labels.size() && !opts.labels[k].empty()) {
            svg << "    <text x=\"" << px(offset * unit + 4)
                << "\" y=\"" << px(b.height * unit - 6)
                << "\" font-family=\"monospace\" font-size=\"14\">" << opts.labels[k]
                << "</text>\n";
        }
        svg << "  </g>\n";
        offset += b.width;
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_svg_file(const std::string& path, const std::vector<SpanSection>& sections,
                    const RenderOptions& opts) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw TropError("cannot open output file: " + path);
    out << render_svg(sections, opts);
    if (!out) throw TropError("failed writing: " + path);
}

} // namespace tropcomm
