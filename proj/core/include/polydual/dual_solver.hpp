#pragma once

#include <string_view>

#include "polydual/geometry.hpp"

namespace polydual {

/// Relative threshold for the on-circumcircle and at-center degeneracies.
inline constexpr double kDegeneracyEpsilon = 1e-10;

enum class Degeneracy { None, OnCircumcircle, AtCenter };

enum class PointClass { InsideLarger, OnCircle, CenterDegenerate };

/// Circumradius R and point-to-center distance L of one realizing polygon.
struct RadiusPair {
    double circumradius = 0.0;
    double center_distance = 0.0;
};

/// Both regular polygons realizing one distance multiset.
///
/// `larger` has the point inside its circumcircle (R >= L), `smaller` has it
/// outside (R <= L), and the two are related by R_small = L_large,
/// L_small = R_large.
struct DualSolution {
    double s2 = 0.0;
    double s4 = 0.0;
    double discriminant = 0.0;  // 3*s2^2 - 2*s4 = (R^2 - L^2)^2
    RadiusPair larger;
    RadiusPair smaller;
    Degeneracy degeneracy = Degeneracy::None;
};

/// Recovers both (R, L) pairs from the n >= 3 vertex distances.
///
/// R^2 and L^2 are the roots of X^2 - S2*X + (S4 - S2^2)/2 = 0. Throws
/// RealizabilityError when the discriminant is negative beyond tolerance or
/// S4 < S2^2, and DegenerateError when every distance is zero.
/// Higher cyclic averages are not checked here; see check_consistency.
DualSolution solve_dual(const DistanceSpec& d, double tol = 1e-9);

/// The dual solution of a known polygon/point configuration.
DualSolution dual_from_parameters(double circumradius, double center_distance);

PointClass classify_point(const DualSolution& sol);

std::string_view to_string(Degeneracy d) noexcept;
std::string_view to_string(PointClass c) noexcept;

}  // namespace polydual
