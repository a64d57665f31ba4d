#include "polydual/pompeiu.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polydual/errors.hpp"

namespace polydual {

namespace {

constexpr double kSixty = std::numbers::pi / 3.0;
constexpr double kSqrt3 = std::numbers::sqrt3;

std::array<double, 3> sorted_desc(double a, double b, double c) {
    std::array<double, 3> s{a, b, c};
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

}  // namespace

double heron_area(double a, double b, double c) {
    const auto [x, y, z] = sorted_desc(a, b, c);
    // Parenthesization matters.
    const double p = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
    return p > 0.0 ? 0.25 * std::sqrt(p) : 0.0;
}

PompeiuTriangle pompeiu_from_distances(double d1, double d2, double d3, double tol) {
    for (double d : {d1, d2, d3}) {
        if (!std::isfinite(d) || d < 0.0) {
            throw InvalidArgumentError("Pompeiu sides must be finite and nonnegative", {{"value", d}});
        }
    }
    const auto [a, b, c] = sorted_desc(d1, d2, d3);
    const double excess = a - (b + c);
    if (excess > tol * a) {
        throw TriangleInequalityError(
            "largest distance exceeds the sum of the other two; no equilateral triangle fits",
            {{"d1", d1}, {"d2", d2}, {"d3", d3}, {"excess", excess}});
    }
    PompeiuTriangle t{d1, d2, d3, 0.0, false};
    t.degenerate = a == 0.0 || excess >= -tol * a;
    t.area = t.degenerate ? 0.0 : heron_area(d1, d2, d3);
    return t;
}

double weitzenbock_margin(const PompeiuTriangle& t) {
    const double a2 = t.d1 * t.d1;
    const double b2 = t.d2 * t.d2;
    const double c2 = t.d3 * t.d3;
    const double sum = a2 + b2 + c2;
    const double w = 4.0 * kSqrt3 * t.area;
    if (sum + w == 0.0) return 0.0;
    // (sum - w) rationalized: (sum^2 - 48*area^2) / (sum + w), whose numerator
    // equals 2*((a^2-b^2)^2 + (b^2-c^2)^2 + (c^2-a^2)^2) for Heron's area.
    const double ab = (t.d1 - t.d2) * (t.d1 + t.d2);
    const double bc = (t.d2 - t.d3) * (t.d2 + t.d3);
    const double ca = (t.d3 - t.d1) * (t.d3 + t.d1);
    return 2.0 * (ab * ab + bc * bc + ca * ca) / (sum + w);
}

EquilateralSolution solve_equilateral(const PompeiuTriangle& t) {
    const double a2 = t.d1 * t.d1;
    const double b2 = t.d2 * t.d2;
    const double c2 = t.d3 * t.d3;
    const double sum = a2 + b2 + c2;
    if (sum == 0.0) {
        throw DegenerateError("all distances are zero; the triangle has no size");
    }
    const double w = 4.0 * kSqrt3 * t.area;

    DualSolution sol;
    sol.s2 = sum / 3.0;
    sol.s4 = (a2 * a2 + b2 * b2 + c2 * c2) / 3.0;
    sol.discriminant = w * w / 9.0;  // (16/3) * area^2

    if (t.degenerate || sol.discriminant <= kDegeneracyEpsilon * sol.s2 * sol.s2) {
        const double r = std::sqrt(sum / 6.0);
        sol.larger = {r, r};
        sol.smaller = {r, r};
        sol.degeneracy = Degeneracy::OnCircumcircle;
    } else {
        const double big_sq = (sum + w) / 6.0;
        const double small_sq = weitzenbock_margin(t) / 6.0;
        const double big = std::sqrt(big_sq);
        const double small = std::sqrt(small_sq);
        sol.larger = {big, small};
        sol.smaller = {small, big};
        sol.degeneracy =
            small_sq <= kDegeneracyEpsilon * sol.s2 ? Degeneracy::AtCenter : Degeneracy::None;
    }
    // side^2 = 3 R^2; taking one square root keeps e.g. the (3, 5, 7) sides at exactly 8 and sqrt(19).
    if (sol.degeneracy == Degeneracy::OnCircumcircle) {
        const double side = std::sqrt(sum / 2.0);
        return {sol, side, side};
    }
    return {sol, std::sqrt((sum + w) / 2.0), std::sqrt(weitzenbock_margin(t) / 2.0)};
}

RegularPolygon triangle_polygon(const std::array<Point2, 3>& tri) {
    const Point2 center = (1.0 / 3.0) * (tri[0] + tri[1] + tri[2]);
    const double r = distance(center, tri[0]);
    const double phase = r > 0.0 ? azimuth(center, tri[0]) : 0.0;
    return RegularPolygon(3, center, r, phase);
}

TrianglePair construct_both_triangles(double d1, double d2, double d3, RotationOrder order) {
    const PompeiuTriangle t = pompeiu_from_distances(d1, d2, d3);
    if (t.degenerate) {
        throw DegenerateError("degenerate Pompeiu triangle: the point is on the circumcircle",
                              {{"d1", d1}, {"d2", d2}, {"d3", d3}});
    }

    const Point2 M{0.0, 0.0};
    const Point2 C{d2, 0.0};
    const Point2 A1{(d1 * d1 + d2 * d2 - d3 * d3) / (2.0 * d2), 2.0 * t.area / d2};

    const double s = order == RotationOrder::CounterclockwiseFirst ? 1.0 : -1.0;
    const Point2 first = rotate_about(C, M, s * kSixty);
    const Point2 second = rotate_about(C, M, -s * kSixty);
    // The rotation about each apex that carries C onto M carries A1 onto the third vertex.
    const std::array<Point2, 3> tri_first{A1, first, rotate_about(A1, first, -s * kSixty)};
    const std::array<Point2, 3> tri_second{A1, second, rotate_about(A1, second, s * kSixty)};

    const bool first_is_larger = distance(A1, first) >= distance(A1, second);
    const auto& larger = first_is_larger ? tri_first : tri_second;
    const auto& smaller = first_is_larger ? tri_second : tri_first;
    return {M, C, larger, smaller, triangle_polygon(larger), triangle_polygon(smaller)};
}

RegularPolygon construct_second_from_first(const RegularPolygon& p, Point2 M) {
    if (p.n() != 3) {
        throw InvalidArgumentError("construction with auxiliary triangles needs n = 3",
                                   {{"n", static_cast<double>(p.n())}});
    }
    const double R = p.circumradius();
    const double L = distance(M, p.center());
    if (!(R > 0.0)) {
        throw DegenerateError("triangle has zero circumradius");
    }
    const DualSolution sol = dual_from_parameters(R, L);
    if (sol.degeneracy == Degeneracy::OnCircumcircle) {
        throw DegenerateError("point lies on the circumcircle", {{"R", R}, {"L", L}});
    }
    if (sol.degeneracy == Degeneracy::AtCenter) {
        throw DegenerateError("point is at the center; the other triangle has zero size",
                              {{"R", R}, {"L", L}});
    }

    // Vertices are counterclockwise, so MA2C and MCB2 are both clockwise turns about M.
    const Point2 A1 = p.vertex(0);
    const Point2 A2 = p.vertex(1);
    const Point2 C = rotate_about(A2, M, -kSixty);
    const Point2 B2 = rotate_about(C, M, -kSixty);
    const Point2 B3 = rotate_about(A1, B2, kSixty);
    return triangle_polygon({A1, B2, B3});
}

}  // namespace polydual
