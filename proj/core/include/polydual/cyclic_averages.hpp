#pragma once

#include <cstdint>
#include <vector>

#include "polydual/geometry.hpp"

namespace polydual {

/// Largest row of Pascal's triangle whose entries all fit in uint64.
inline constexpr int kMaxBinomialRow = 67;

/// Default upper bound on n for the closed-form routines (CLI `--max-n`).
inline constexpr int kDefaultMaxVertices = 64;

inline constexpr double kConsistencyTol = 1e-8;

/// Exact binomial coefficient C(n, k) for 0 <= n <= kMaxBinomialRow.
std::uint64_t binomial(int n, int k);

/// Mean even power sums of the distances to a regular n-gon's vertices.
///
/// values[m - 1] holds S^(2m) = (1/n) * sum_i d_i^(2m) for m = 1..n-1; these
/// are the moments that do not depend on the polygon's rotation.
struct CyclicAverages {
    int n = 0;
    std::vector<double> values;

    /// S^(2m), 1-based m.
    [[nodiscard]] double at(int m) const { return values.at(static_cast<std::size_t>(m - 1)); }
    [[nodiscard]] double s2() const { return at(1); }
    [[nodiscard]] double s4() const { return at(2); }
};

/// (1/n) * sum_i d_i^(2m) for any m >= 1 (not restricted to m <= n-1).
double power_average(const DistanceSpec& d, int m);

CyclicAverages averages_from_distances(const DistanceSpec& d);

/// Closed form in terms of circumradius R and center distance L:
///   S^(2m) = sum_{k=0}^{floor(m/2)} C(m,2k) C(2k,k) (RL)^(2k) (R^2+L^2)^(m-2k).
CyclicAverages averages_from_RL(int n, double R, double L);

struct ConsistencyTerm {
    int m = 0;
    double actual = 0.0;
    double expected = 0.0;
    double residual = 0.0;  // actual - expected
    bool pass = false;
};

struct ConsistencyReport {
    std::vector<ConsistencyTerm> terms;  // m = 3..n-1
    double moment_gap = 0.0;             // S^(4) - (S^(2))^2, must be >= 0
    bool moment_ok = false;
    bool pass = false;
};

/// Checks that S^(6)..S^(2(n-1)) are the values forced by S^(2) and S^(4).
/// A necessary condition for the averages to come from some polygon/point pair.
ConsistencyReport check_consistency(const CyclicAverages& avgs, double tol = kConsistencyTol);

}  // namespace polydual
