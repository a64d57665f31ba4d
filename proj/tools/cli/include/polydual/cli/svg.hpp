#pragma once

#include <string>
#include <vector>

#include "polydual/geometry.hpp"

namespace polydual::cli {

/// Minimal SVG 1.1 writer in mathematical (y-up) coordinates.
///
/// Elements are emitted in insertion order within fixed layers: circles,
/// polygons, segments, point markers, then labels. The viewBox covers every
/// element with a 10% margin on each side.
class SvgScene {
public:
    void add_polygon(const std::vector<Point2>& vertices, const std::string& css_class,
                     const std::string& label_prefix = "");
    void add_circle(Point2 center, double radius, const std::string& css_class);
    void add_segment(Point2 a, Point2 b, const std::string& css_class);
    void add_point(Point2 p, const std::string& label);

    [[nodiscard]] std::string render() const;

private:
    struct Polygon {
        std::vector<Point2> vertices;
        std::string css_class;
        std::string label_prefix;
    };
    struct Circle {
        Point2 center;
        double radius;
        std::string css_class;
    };
    struct Segment {
        Point2 a;
        Point2 b;
        std::string css_class;
    };
    struct Marker {
        Point2 p;
        std::string label;
    };

    std::vector<Polygon> polygons_;
    std::vector<Circle> circles_;
    std::vector<Segment> segments_;
    std::vector<Marker> points_;
};

}  // namespace polydual::cli
