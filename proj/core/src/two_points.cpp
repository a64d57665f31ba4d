#include "polydual/two_points.hpp"

#include <algorithm>
#include <cmath>

#include "polydual/errors.hpp"

namespace polydual {

std::vector<Point2> circle_circle_intersect(Point2 c1, double r1, Point2 c2, double r2, double tol) {
    if (!(r1 >= 0.0) || !(r2 >= 0.0)) {
        throw InvalidArgumentError("circle radii must be nonnegative", {{"r1", r1}, {"r2", r2}});
    }
    const double d = distance(c1, c2);
    const double scale = r1 + r2;
    const double band = tol * scale;

    if (d <= band) {
        if (std::abs(r1 - r2) <= band) {
            throw ConcentricError("coincident circles intersect everywhere",
                                  {{"r1", r1}, {"r2", r2}, {"center_distance", d}});
        }
        return {};
    }

    const Point2 u = (1.0 / d) * (c2 - c1);
    if (std::abs(d - scale) <= band) {
        return {c1 + r1 * u};
    }
    if (std::abs(d - std::abs(r1 - r2)) <= band) {
        return {r1 >= r2 ? c1 + r1 * u : c1 - r1 * u};
    }
    if (d > scale || d < std::abs(r1 - r2)) return {};

    const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    const double h = std::sqrt(std::max(0.0, (r1 - a) * (r1 + a)));
    const Point2 foot = c1 + a * u;
    const Point2 perp{-u.y, u.x};
    std::vector<Point2> pts{foot + h * perp, foot - h * perp};
    std::sort(pts.begin(), pts.end(), [&](Point2 p, Point2 q) {
        return normalize_angle(azimuth(c1, p)) < normalize_angle(azimuth(c1, q));
    });
    return pts;
}

TwoPointsSolution two_points(const RegularPolygon& pa, const RegularPolygon& pb, double tol) {
    if (pa.n() != pb.n()) {
        throw InvalidArgumentError("polygons must have the same number of vertices",
                                   {{"n_a", static_cast<double>(pa.n())},
                                    {"n_b", static_cast<double>(pb.n())}});
    }
    const double ra = pa.circumradius();
    const double rb = pb.circumradius();
    const double rmax = std::max(ra, rb);
    if (std::abs(ra - rb) <= tol * rmax) {
        throw CongruentError("polygons are congruent; every point has equal distance multisets",
                             {{"R1", ra}, {"R2", rb}});
    }

    const auto va = vertices(pa);
    const auto vb = vertices(pb);
    std::optional<std::pair<std::size_t, std::size_t>> shared;
    // Polygons sharing a side share two vertices; the lowest indices win.
    const double slack_v = kSharedVertexTol * rmax;
    for (std::size_t i = 0; i < va.size() && !shared; ++i) {
        for (std::size_t j = 0; j < vb.size(); ++j) {
            if (distance(va[i], vb[j]) <= slack_v) {
                shared = {i, j};
                break;
            }
        }
    }
    if (!shared) {
        throw SharedVertexError("the polygons do not share a vertex", {{"R1", ra}, {"R2", rb}});
    }

    const Point2 o1 = pa.center();
    const Point2 o2 = pb.center();
    const Point2 v = va[shared->first];

    TwoPointsSolution out;
    out.shared_vertex_a = shared->first;
    out.shared_vertex_b = shared->second;
    out.center_distance = distance(o1, o2);
    const double slack = tol * (ra + rb);
    out.existence_condition = out.center_distance >= std::abs(ra - rb) - slack &&
                              out.center_distance <= ra + rb + slack;

    const bool collinear = std::abs(cross(o1 - v, o2 - v)) <= tol * ra * rb;
    std::vector<Point2> pts;
    if (!collinear) pts = circle_circle_intersect(o2, ra, o1, rb, tol);

    if (collinear || pts.size() == 1) {
        // Tangent circles: the single point is the reflection of the shared
        // vertex through the midpoint of O1 O2.
        out.collinear_degenerate = true;
        out.m1 = o1 + o2 - v;
    } else if (pts.size() == 2) {
        const Point2 axis = o2 - o1;
        const bool first_left = cross(axis, pts[0] - o1) >= cross(axis, pts[1] - o1);
        out.m1 = first_left ? pts[0] : pts[1];
        out.m2 = first_left ? pts[1] : pts[0];
    } else {
        throw NoIntersectionError("circles about the two centers do not meet",
                                  {{"R1", ra}, {"R2", rb}, {"center_distance", out.center_distance}});
    }

    auto evidence = [&](Point2 m) {
        return verify_permutation(distances_from(m, pa), distances_from(m, pb), tol);
    };
    out.matches.push_back(evidence(out.m1));
    if (out.m2) out.matches.push_back(evidence(*out.m2));
    return out;
}

}  // namespace polydual
