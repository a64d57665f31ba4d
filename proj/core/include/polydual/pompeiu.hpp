#pragma once

#include <array>

#include "polydual/dual_solver.hpp"
#include "polydual/geometry.hpp"

namespace polydual {

/// Triangle whose sides are the distances from a point to the vertices of an
/// equilateral triangle. It is degenerate (zero area) exactly when the point
/// lies on the circumcircle.
struct PompeiuTriangle {
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
    double area = 0.0;
    bool degenerate = false;
};

/// Heron's formula in Kahan's sorted form; accurate for needle-like triangles.
/// Returns 0 when the sides violate the triangle inequality by rounding only.
double heron_area(double a, double b, double c);

/// Throws TriangleInequalityError if the largest side exceeds the sum of the
/// others by more than tol (relative to the largest side).
PompeiuTriangle pompeiu_from_distances(double d1, double d2, double d3, double tol = 1e-9);

struct EquilateralSolution {
    DualSolution dual;
    double larger_side = 0.0;   // R1 * sqrt(3)
    double smaller_side = 0.0;  // R2 * sqrt(3)
};

/// Closed forms for n = 3:
///   R1^2 = (d1^2 + d2^2 + d3^2 + 4*sqrt(3)*area) / 6,
///   L1^2 = (d1^2 + d2^2 + d3^2 - 4*sqrt(3)*area) / 6,
/// with R2 = L1 and L2 = R1.
EquilateralSolution solve_equilateral(const PompeiuTriangle& t);

/// d1^2 + d2^2 + d3^2 - 4*sqrt(3)*area; nonnegative, zero only for equal sides.
double weitzenbock_margin(const PompeiuTriangle& t);

/// Order in which the two auxiliary equilateral triangles on side MC are built.
enum class RotationOrder { CounterclockwiseFirst, ClockwiseFirst };

/// Both equilateral triangles realizing a Pompeiu triangle, sharing vertex A1.
///
/// The observation point M is at the origin and the auxiliary vertex C sits on
/// the positive x-axis with |MC| = d2, |MA1| = d1, |CA1| = d3. Vertex arrays
/// are in construction order (A1, A2, A3) and (A1, B2, B3).
struct TrianglePair {
    Point2 point;
    Point2 auxiliary;  // C
    std::array<Point2, 3> larger;
    std::array<Point2, 3> smaller;
    RegularPolygon larger_polygon;
    RegularPolygon smaller_polygon;
};

/// Throws DegenerateError for a degenerate Pompeiu triangle.
TrianglePair construct_both_triangles(double d1, double d2, double d3,
                                      RotationOrder order = RotationOrder::CounterclockwiseFirst);

/// The other equilateral triangle with the same distances from M, built by
/// rotating A2 twice by 60 degrees about M. Works from the larger triangle to
/// the smaller one and back. Throws DegenerateError when M is on the
/// circumcircle or at the center.
RegularPolygon construct_second_from_first(const RegularPolygon& p, Point2 M);

/// Circumscribed regular-polygon description of three triangle vertices,
/// with vertex 0 at the first point.
RegularPolygon triangle_polygon(const std::array<Point2, 3>& tri);

}  // namespace polydual
