#include "polydual/dual_solver.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "polydual/errors.hpp"
#include "summation.hpp"

namespace polydual {

namespace {

// s2 = R^2 + L^2, gap = s4 - s2^2 = 2 R^2 L^2, disc = s2^2 - 2*gap.
DualSolution assemble(double s2, double s4, double gap, double disc) {
    DualSolution sol;
    sol.s2 = s2;
    sol.s4 = s4;

    if (disc <= kDegeneracyEpsilon * s2 * s2) {
        const double r = std::sqrt(s2 / 2.0);
        sol.discriminant = std::max(disc, 0.0);
        sol.larger = {r, r};
        sol.smaller = {r, r};
        sol.degeneracy = Degeneracy::OnCircumcircle;
        return sol;
    }

    sol.discriminant = disc;
    // Larger root by addition, the other through the product of the roots.
    const double big_sq = 0.5 * (s2 + std::sqrt(disc));
    const double small_sq = std::max(0.0, 0.5 * gap / big_sq);
    const double big = std::sqrt(big_sq);
    const double small = std::sqrt(small_sq);
    sol.larger = {big, small};
    sol.smaller = {small, big};
    sol.degeneracy = small_sq <= kDegeneracyEpsilon * s2 ? Degeneracy::AtCenter : Degeneracy::None;
    return sol;
}

}  // namespace

DualSolution solve_dual(const DistanceSpec& d, double tol) {
    const std::size_t n = d.n();
    if (n < 3) {
        throw InvalidArgumentError("need at least 3 distances", {{"n", static_cast<double>(n)}});
    }
    std::vector<double> squares;
    squares.reserve(n);
    for (double di : d.values()) squares.push_back(di * di);

    const double inv_n = 1.0 / static_cast<double>(n);
    detail::CompensatedSum sum2;
    detail::CompensatedSum sum4;
    for (double a : squares) {
        sum2.add(a);
        sum4.add(a * a);
    }
    const double s2 = sum2.value() * inv_n;
    const double s4 = sum4.value() * inv_n;

    if (s2 == 0.0) {
        throw DegenerateError("all distances are zero; the polygon has no size");
    }

    // S4 - S2^2 is the variance of the squared distances; the two-pass form
    // keeps it accurate when the point is close to the center.
    detail::CompensatedSum var;
    for (double a : squares) var.add((a - s2) * (a - s2));
    const double gap = var.value() * inv_n;
    const double disc = s2 * s2 - 2.0 * gap;

    const double threshold = std::max(tol, kDegeneracyEpsilon);
    if (disc < -threshold * s2 * s2) {
        throw RealizabilityError(
            "3*S2^2 - 2*S4 is negative: no regular polygon has these vertex distances",
            {{"discriminant", disc}, {"s2", s2}, {"s4", s4}});
    }
    if (s4 < s2 * s2 * (1.0 - tol)) {
        throw RealizabilityError("S4 < S2^2: no regular polygon has these vertex distances",
                                 {{"s2", s2}, {"s4", s4}});
    }
    return assemble(s2, s4, gap, disc);
}

DualSolution dual_from_parameters(double circumradius, double center_distance) {
    if (!(circumradius >= 0.0) || !(center_distance >= 0.0) || !std::isfinite(circumradius) ||
        !std::isfinite(center_distance)) {
        throw InvalidArgumentError("R and L must be finite and nonnegative",
                                   {{"R", circumradius}, {"L", center_distance}});
    }
    const double r2 = circumradius * circumradius;
    const double l2 = center_distance * center_distance;
    const double s2 = r2 + l2;
    if (s2 == 0.0) {
        throw DegenerateError("zero radius and zero center distance");
    }
    const double gap = 2.0 * r2 * l2;
    const double diff = r2 - l2;
    DualSolution sol = assemble(s2, s2 * s2 + gap, gap, diff * diff);
    if (sol.degeneracy == Degeneracy::None) {
        // Exact inputs are known here; avoid round-tripping them through the quadratic.
        const double big = std::max(circumradius, center_distance);
        const double small = std::min(circumradius, center_distance);
        sol.larger = {big, small};
        sol.smaller = {small, big};
    }
    return sol;
}

PointClass classify_point(const DualSolution& sol) {
    switch (sol.degeneracy) {
        case Degeneracy::OnCircumcircle: return PointClass::OnCircle;
        case Degeneracy::AtCenter: return PointClass::CenterDegenerate;
        case Degeneracy::None: break;
    }
    return PointClass::InsideLarger;
}

std::string_view to_string(Degeneracy d) noexcept {
    switch (d) {
        case Degeneracy::None: return "None";
        case Degeneracy::OnCircumcircle: return "OnCircumcircle";
        case Degeneracy::AtCenter: return "AtCenter";
    }
    return "None";
}

std::string_view to_string(PointClass c) noexcept {
    switch (c) {
        case PointClass::InsideLarger: return "InsideLarger";
        case PointClass::OnCircle: return "OnCircle";
        case PointClass::CenterDegenerate: return "CenterDegenerate";
    }
    return "InsideLarger";
}

}  // namespace polydual
