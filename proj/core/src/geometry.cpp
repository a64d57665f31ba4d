#include "polydual/geometry.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "polydual/errors.hpp"

namespace polydual {

Point2 rotate_about(Point2 p, Point2 pivot, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Point2 v = p - pivot;
    return {pivot.x + c * v.x - s * v.y, pivot.y + s * v.x + c * v.y};
}

Point2 reflect_across(Point2 p, Point2 a, Point2 b) {
    const Point2 u = b - a;
    const double t = dot(p - a, u) / dot(u, u);
    const Point2 foot = a + t * u;
    return 2.0 * foot - p;
}

double normalize_angle(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

RegularPolygon::RegularPolygon(int n, Point2 center, double circumradius, double phase)
    : n_(n), center_(center), circumradius_(circumradius), phase_(0.0) {
    if (n < 3) {
        throw InvalidArgumentError("regular polygon needs at least 3 vertices",
                                   {{"n", static_cast<double>(n)}});
    }
    if (!std::isfinite(center.x) || !std::isfinite(center.y)) {
        throw InvalidArgumentError("polygon center must be finite");
    }
    if (!std::isfinite(circumradius) || circumradius < 0.0) {
        throw InvalidArgumentError("circumradius must be finite and nonnegative",
                                   {{"circumradius", circumradius}});
    }
    if (!std::isfinite(phase)) {
        throw InvalidArgumentError("phase must be finite");
    }
    phase_ = normalize_angle(phase);
}

Point2 RegularPolygon::vertex(std::size_t i) const {
    const double angle = phase_ + kTwoPi * static_cast<double>(i) / static_cast<double>(n_);
    return polar(center_, circumradius_, angle);
}

std::vector<Point2> vertices(const RegularPolygon& p) {
    std::vector<Point2> out;
    out.reserve(static_cast<std::size_t>(p.n()));
    for (std::size_t i = 0; i < static_cast<std::size_t>(p.n()); ++i) out.push_back(p.vertex(i));
    return out;
}

DistanceSpec::DistanceSpec(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double v = values_[i];
        if (!std::isfinite(v) || v < 0.0) {
            throw InvalidArgumentError("distances must be finite and nonnegative",
                                       {{"index", static_cast<double>(i)}, {"value", v}});
        }
    }
}

std::vector<double> DistanceSpec::sorted() const {
    std::vector<double> s = values_;
    std::sort(s.begin(), s.end());
    return s;
}

DistanceSpec distances_from(Point2 point, const RegularPolygon& p) {
    std::vector<double> d;
    d.reserve(static_cast<std::size_t>(p.n()));
    for (std::size_t i = 0; i < static_cast<std::size_t>(p.n()); ++i) {
        d.push_back(distance(point, p.vertex(i)));
    }
    return DistanceSpec(std::move(d));
}

namespace {

void require_same_size(const DistanceSpec& a, const DistanceSpec& b) {
    if (a.n() != b.n()) {
        throw InvalidArgumentError("distance lists differ in length",
                                   {{"n_a", static_cast<double>(a.n())},
                                    {"n_b", static_cast<double>(b.n())}});
    }
}

}  // namespace

bool multiset_equal(const DistanceSpec& a, const DistanceSpec& b, double tol, double abs_floor) {
    require_same_size(a, b);
    const auto sa = a.sorted();
    const auto sb = b.sorted();
    for (std::size_t i = 0; i < sa.size(); ++i) {
        const double allowed = std::max(abs_floor, tol * std::max(std::abs(sa[i]), std::abs(sb[i])));
        if (std::abs(sa[i] - sb[i]) > allowed) return false;
    }
    return true;
}

double multiset_mismatch(const DistanceSpec& a, const DistanceSpec& b) {
    require_same_size(a, b);
    const auto sa = a.sorted();
    const auto sb = b.sorted();
    double worst = 0.0;
    for (std::size_t i = 0; i < sa.size(); ++i) worst = std::max(worst, std::abs(sa[i] - sb[i]));
    return worst;
}

}  // namespace polydual
