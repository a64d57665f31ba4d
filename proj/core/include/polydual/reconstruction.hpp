#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "polydual/geometry.hpp"

namespace polydual {

/// Absolute slack when clamping the law-of-cosines argument into [-1, 1].
inline constexpr double kCosineClampTol = 1e-9;

/// The two mirror-image duals of `primary_polygon` as seen from `point`.
///
/// Both duals are centered at distance R (the primary circumradius) from the
/// point along `center_direction` and have circumradius L = |point - primary
/// center|. Vertex 0 of each dual is one of the two intersections of the
/// auxiliary circle |X - point| = d_anchor with the dual circumcircle.
struct DualPolygonPair {
    RegularPolygon primary_polygon;
    Point2 point;
    RegularPolygon b_polygon;
    RegularPolygon c_polygon;
    double center_direction = 0.0;
    std::size_t anchor_index = 0;
    double match_residual = 0.0;  // worst sorted-distance mismatch over b and c
};

/// Builds the dual pair of p for the observation point M.
///
/// Throws DegenerateError when M lies on the circumcircle of p, when M is at
/// the center (the dual would have zero size) or when p has zero radius, and
/// NoIntersectionError if the auxiliary circle misses the dual circumcircle.
DualPolygonPair construct_dual(const RegularPolygon& p, Point2 M, double center_direction = 0.0,
                               double tol = kCosineClampTol, std::size_t anchor_index = 0);

/// Phases that put vertex 0 of an n-gon (center, radius R) at exactly
/// anchor_distance from M, where L = |M - center|.
///
/// Returns {azimuth(center -> M) + alpha, azimuth(center -> M) - alpha}, both
/// normalized, with cos(alpha) = (R^2 + L^2 - anchor^2) / (2 R L).
/// Throws RangeError when the cosine leaves [-1, 1] by more than tol.
std::array<double, 2> solve_phase(Point2 M, Point2 center, int n, double R, double L,
                                  double anchor_distance, double tol = kCosineClampTol);

struct PermutationMatch {
    bool ok = false;
    /// permutation[i] = j means x[j] matches d[i]. Empty on failure.
    std::vector<std::size_t> permutation;
    /// Worst |x[permutation[i]] - d[i]|; on failure, the best achievable value.
    double residual = 0.0;
};

/// Finds an explicit index permutation carrying x onto d within tolerance
/// max(kMultisetAbsFloor, tol * max(|d_i|, |x_j|)). Index-aligned matches are
/// preferred wherever they are within tolerance.
PermutationMatch verify_permutation(const DistanceSpec& d, const DistanceSpec& x, double tol);

}  // namespace polydual
