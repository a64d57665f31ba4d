#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polydual/geometry.hpp"
#include "polydual/reconstruction.hpp"

namespace polydual {

/// Intersections of two circles, ordered by angle (in [0, 2*pi)) about c1.
///
/// Tangency yields one point; it is detected when | |c1 - c2| - (r1 + r2) | or
/// | |c1 - c2| - |r1 - r2| | is within tol * (r1 + r2). Throws ConcentricError
/// for coincident circles.
std::vector<Point2> circle_circle_intersect(Point2 c1, double r1, Point2 c2, double r2,
                                            double tol = 1e-9);

/// Vertex coincidence slack, relative to the larger circumradius.
inline constexpr double kSharedVertexTol = 1e-9;

struct TwoPointsSolution {
    Point2 m1;
    std::optional<Point2> m2;
    /// Permutation evidence for m1 and, when present, m2: permutation[i] = j
    /// means |M - B_j| == |M - A_i|.
    std::vector<PermutationMatch> matches;
    bool collinear_degenerate = false;
    std::size_t shared_vertex_a = 0;
    std::size_t shared_vertex_b = 0;
    double center_distance = 0.0;  // |O1 O2|
    bool existence_condition = false;  // |R1 - R2| <= |O1 O2| <= R1 + R2
};

/// Points with equal vertex-distance multisets to two non-congruent regular
/// n-gons that share a vertex: the intersections of the circle about O2 with
/// radius R1 and the circle about O1 with radius R2.
///
/// m1 lies on the left of the oriented line O1 -> O2. When the shared vertex
/// and both centers are collinear (or the circles are tangent within tol)
/// there is a single point. Throws InvalidArgumentError on differing n,
/// CongruentError when R1 ~ R2, SharedVertexError when no vertex coincides.
TwoPointsSolution two_points(const RegularPolygon& pa, const RegularPolygon& pb, double tol = 1e-9);

}  // namespace polydual
