#pragma once

#include <cstdint>
#include <optional>

#include "polydual/geometry.hpp"

namespace polydual {

struct OracleConfig {
    int grid_resolution = 64;   // samples per search dimension, >= 8
    int refine_iterations = 3;  // coordinate-descent levels per start, >= 0
    std::uint64_t seed = 0;     // jitters the grid offsets
    double tol = 1e-8;          // acceptance bound on the relative residual
};

struct OracleResult {
    bool found = false;
    std::optional<RegularPolygon> polygon;
    /// Worst sorted-distance mismatch of the best non-congruent candidate,
    /// relative to the largest target distance.
    double residual = 0.0;
    std::uint64_t samples_evaluated = 0;
    double circumradius = 0.0;     // r of the best candidate
    double center_distance = 0.0;  // distance from the point to its center
};

struct OracleInstance {
    RegularPolygon polygon;
    Point2 point;
};

/// Deterministic random polygon/point pair.
///
/// n is uniform in [n_min, n_max], R log-uniform in [0.1, 10], L/R uniform in
/// [0, 3] with |L/R - 1| < 5e-4 rejected. on_circle forces L = R.
OracleInstance random_instance(std::uint64_t seed, int n_min, int n_max, bool on_circle = false);

/// Searches for a regular polygon, not congruent to p, whose vertex distances
/// from M form the same multiset as p's.
///
/// Uses only vertex coordinates: a grid over (relative phase, center distance,
/// radius), coordinate-descent refinement of the best local minima, and a
/// Levenberg-Marquardt polish on the sorted-distance residuals. Candidates
/// that converge back to p's own (R, L) are discarded; if nothing else is
/// found, the polish is restarted from rings of points around that root.
OracleResult search_second_polygon(const RegularPolygon& p, Point2 M, const OracleConfig& cfg = {});

}  // namespace polydual
