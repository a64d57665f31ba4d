#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace polydual {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }

/// Direction angle of the vector from -> to, in (-pi, pi].
inline double azimuth(Point2 from, Point2 to) { return std::atan2(to.y - from.y, to.x - from.x); }

inline Point2 polar(Point2 origin, double radius, double angle) {
    return {origin.x + radius * std::cos(angle), origin.y + radius * std::sin(angle)};
}

/// Counterclockwise rotation of p about pivot.
Point2 rotate_about(Point2 p, Point2 pivot, double angle);

/// Reflection of p across the line through a and b (a != b).
Point2 reflect_across(Point2 p, Point2 a, Point2 b);

/// Maps an angle into [0, 2*pi).
double normalize_angle(double angle);

/// A regular n-gon given by its circumcircle and the angle of vertex 0.
///
/// Vertex i (0-based) sits at angle phase + 2*pi*i/n, counterclockwise from
/// the positive x-axis. A zero circumradius is accepted and describes a
/// polygon collapsed onto its center.
class RegularPolygon {
public:
    RegularPolygon(int n, Point2 center, double circumradius, double phase);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] Point2 center() const noexcept { return center_; }
    [[nodiscard]] double circumradius() const noexcept { return circumradius_; }
    [[nodiscard]] double phase() const noexcept { return phase_; }

    [[nodiscard]] Point2 vertex(std::size_t i) const;

private:
    int n_;
    Point2 center_;
    double circumradius_;
    double phase_;
};

std::vector<Point2> vertices(const RegularPolygon& p);

/// Ordered vertex distances d_1..d_n; sorted() gives the multiset view.
class DistanceSpec {
public:
    explicit DistanceSpec(std::vector<double> values);

    [[nodiscard]] std::size_t n() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] std::vector<double> sorted() const;

private:
    std::vector<double> values_;
};

/// Euclidean distances from point to each vertex, by direct coordinate subtraction.
DistanceSpec distances_from(Point2 point, const RegularPolygon& p);

inline constexpr double kMultisetAbsFloor = 1e-12;

/// Sorted elementwise comparison with per-pair tolerance
/// max(abs_floor, tol * max(|a|, |b|)). Throws InvalidArgumentError on size mismatch.
bool multiset_equal(const DistanceSpec& a, const DistanceSpec& b, double tol,
                    double abs_floor = kMultisetAbsFloor);

/// Largest absolute difference between the sorted lists.
double multiset_mismatch(const DistanceSpec& a, const DistanceSpec& b);

}  // namespace polydual
