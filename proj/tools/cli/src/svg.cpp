#include "polydual/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace polydual::cli {

namespace {

std::string num(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

struct Box {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    void add(Point2 p, double pad = 0.0) {
        min_x = std::min(min_x, p.x - pad);
        min_y = std::min(min_y, p.y - pad);
        max_x = std::max(max_x, p.x + pad);
        max_y = std::max(max_y, p.y + pad);
    }
    [[nodiscard]] bool empty() const { return !(min_x <= max_x); }
};

}  // namespace

void SvgScene::add_polygon(const std::vector<Point2>& vertices, const std::string& css_class,
                           const std::string& label_prefix) {
    polygons_.push_back({vertices, css_class, label_prefix});
}

void SvgScene::add_circle(Point2 center, double radius, const std::string& css_class) {
    circles_.push_back({center, radius, css_class});
}

void SvgScene::add_segment(Point2 a, Point2 b, const std::string& css_class) {
    segments_.push_back({a, b, css_class});
}

void SvgScene::add_point(Point2 p, const std::string& label) { points_.push_back({p, label}); }

std::string SvgScene::render() const {
    Box box;
    for (const auto& c : circles_) box.add(c.center, c.radius);
    for (const auto& p : polygons_) {
        for (Point2 v : p.vertices) box.add(v);
    }
    for (const auto& s : segments_) {
        box.add(s.a);
        box.add(s.b);
    }
    for (const auto& m : points_) box.add(m.p);
    if (box.empty()) box.add({0.0, 0.0}, 1.0);

    double w = box.max_x - box.min_x;
    double h = box.max_y - box.min_y;
    const double span = std::max({w, h, 1e-9});
    // Degenerate extents still get a visible frame.
    if (w < 1e-3 * span) w = 1e-3 * span;
    if (h < 1e-3 * span) h = 1e-3 * span;
    const double mx = 0.1 * w;
    const double my = 0.1 * h;
    const double vx = box.min_x - mx;
    const double vw = w + 2 * mx;
    const double vh = h + 2 * my;
    // Under scale(1,-1) the visible y range is [-(max_y + my), -(min_y - my)].
    const double vy = -(box.max_y + my);

    const double stroke = 0.004 * span;
    const double font = 0.035 * span;
    const double marker = 0.012 * span;

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(vx) << ' ' << num(vy) << ' '
      << num(vw) << ' ' << num(vh) << "\" width=\"800\" height=\"" << num(800.0 * vh / vw) << "\">\n";
    o << "<style>"
      << ".primary{fill:none;stroke:#1f4e9c}"
      << ".dual{fill:none;stroke:#b2361b}"
      << ".mirror{fill:none;stroke:#b2361b;stroke-dasharray:" << num(4 * stroke) << "}"
      << ".locus,.auxiliary{fill:none;stroke:#777;stroke-dasharray:" << num(3 * stroke) << "}"
      << ".circumcircle{fill:none;stroke:#444}"
      << ".distance{stroke:#2a8c3a}"
      << ".point{fill:#000}"
      << "text{font-family:sans-serif;font-size:" << num(font) << "px}"
      << "</style>\n";
    o << "<g transform=\"scale(1,-1)\" stroke-width=\"" << num(stroke) << "\">\n";
    for (const auto& c : circles_) {
        o << "<circle class=\"" << c.css_class << "\" cx=\"" << num(c.center.x) << "\" cy=\"" << num(c.center.y)
          << "\" r=\"" << num(c.radius) << "\"/>\n";
    }
    for (const auto& p : polygons_) {
        o << "<polygon class=\"" << p.css_class << "\" points=\"";
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            if (i > 0) o << ' ';
            o << num(p.vertices[i].x) << ',' << num(p.vertices[i].y);
        }
        o << "\"/>\n";
    }
    for (const auto& s : segments_) {
        o << "<line class=\"" << s.css_class << "\" x1=\"" << num(s.a.x) << "\" y1=\"" << num(s.a.y) << "\" x2=\""
          << num(s.b.x) << "\" y2=\"" << num(s.b.y) << "\"/>\n";
    }
    for (const auto& m : points_) {
        o << "<rect class=\"point\" x=\"" << num(m.p.x - marker / 2) << "\" y=\"" << num(m.p.y - marker / 2)
          << "\" width=\"" << num(marker) << "\" height=\"" << num(marker) << "\"/>\n";
    }
    o << "</g>\n";
    // Labels sit outside the flipped group so the glyphs stay upright.
    o << "<g class=\"labels\">\n";
    for (const auto& p : polygons_) {
        if (p.label_prefix.empty()) continue;
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            o << "<text x=\"" << num(p.vertices[i].x + marker) << "\" y=\"" << num(-p.vertices[i].y - marker) << "\">"
              << p.label_prefix << (i + 1) << "</text>\n";
        }
    }
    for (const auto& m : points_) {
        o << "<text x=\"" << num(m.p.x + marker) << "\" y=\"" << num(-m.p.y - marker) << "\">" << m.label
          << "</text>\n";
    }
    o << "</g>\n";
    o << "</svg>\n";
    return o.str();
}

}  // namespace polydual::cli
