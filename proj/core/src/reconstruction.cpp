#include "polydual/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "polydual/dual_solver.hpp"
#include "polydual/errors.hpp"

namespace polydual {

std::array<double, 2> solve_phase(Point2 M, Point2 center, int n, double R, double L,
                                  double anchor_distance, double tol) {
    if (n < 3) {
        throw InvalidArgumentError("polygon needs at least 3 vertices", {{"n", static_cast<double>(n)}});
    }
    if (!(R > 0.0) || !(L > 0.0)) {
        throw InvalidArgumentError("solve_phase needs R > 0 and L > 0", {{"R", R}, {"L", L}});
    }
    double c = (R * R + L * L - anchor_distance * anchor_distance) / (2.0 * R * L);
    if (c > 1.0 + tol || c < -1.0 - tol) {
        throw RangeError("anchor distance is outside [|R - L|, R + L]",
                         {{"cos_alpha", c}, {"R", R}, {"L", L}, {"anchor_distance", anchor_distance}});
    }
    c = std::clamp(c, -1.0, 1.0);
    const double alpha = std::acos(c);
    const double base = azimuth(center, M);
    return {normalize_angle(base + alpha), normalize_angle(base - alpha)};
}

DualPolygonPair construct_dual(const RegularPolygon& p, Point2 M, double center_direction,
                               double tol, std::size_t anchor_index) {
    const double R = p.circumradius();
    const double L = distance(M, p.center());
    if (!(R > 0.0)) {
        throw DegenerateError("polygon has zero circumradius");
    }
    if (anchor_index >= static_cast<std::size_t>(p.n())) {
        throw InvalidArgumentError("anchor index out of range",
                                   {{"anchor_index", static_cast<double>(anchor_index)},
                                    {"n", static_cast<double>(p.n())}});
    }
    const DualSolution sol = dual_from_parameters(R, L);
    if (sol.degeneracy == Degeneracy::OnCircumcircle) {
        throw DegenerateError("point lies on the circumcircle; the only dual is congruent",
                              {{"R", R}, {"L", L}});
    }
    if (sol.degeneracy == Degeneracy::AtCenter) {
        throw DegenerateError("point is at the center; the dual has zero size", {{"R", R}, {"L", L}});
    }

    // Dual center on the circle of radius R about M, dual radius L.
    const Point2 dual_center = polar(M, R, center_direction);
    const double anchor = distance(M, p.vertex(anchor_index));

    std::array<double, 2> phases{};
    try {
        phases = solve_phase(M, dual_center, p.n(), L, R, anchor, tol);
    } catch (const RangeError& e) {
        ErrorContext ctx = e.context();
        ctx.emplace_back("center_direction", center_direction);
        throw NoIntersectionError("auxiliary circle misses the dual circumcircle", std::move(ctx));
    }

    DualPolygonPair out{
        p,
        M,
        RegularPolygon(p.n(), dual_center, L, phases[0]),
        RegularPolygon(p.n(), dual_center, L, phases[1]),
        normalize_angle(center_direction),
        anchor_index,
        0.0,
    };
    const DistanceSpec original = distances_from(M, p);
    out.match_residual = std::max(multiset_mismatch(original, distances_from(M, out.b_polygon)),
                                  multiset_mismatch(original, distances_from(M, out.c_polygon)));
    return out;
}

namespace {

bool within(double a, double b, double tol) {
    const double allowed = std::max(kMultisetAbsFloor, tol * std::max(std::abs(a), std::abs(b)));
    return std::abs(a - b) <= allowed;
}

// Prefer j == i, otherwise the nearest unused candidate within tolerance.
std::optional<std::vector<std::size_t>> greedy_match(std::span<const double> d,
                                                     std::span<const double> x, double tol) {
    const std::size_t n = d.size();
    std::vector<bool> used(n, false);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!used[i] && within(d[i], x[i], tol)) {
            perm[i] = i;
            used[i] = true;
            continue;
        }
        std::optional<std::size_t> best;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || !within(d[i], x[j], tol)) continue;
            if (!best || std::abs(x[j] - d[i]) < std::abs(x[*best] - d[i])) best = j;
        }
        if (!best) return std::nullopt;
        perm[i] = *best;
        used[*best] = true;
    }
    return perm;
}

std::vector<std::size_t> argsort(std::span<const double> v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    return idx;
}

}  // namespace

PermutationMatch verify_permutation(const DistanceSpec& d, const DistanceSpec& x, double tol) {
    if (d.n() != x.n()) {
        throw InvalidArgumentError("distance lists differ in length",
                                   {{"n_d", static_cast<double>(d.n())},
                                    {"n_x", static_cast<double>(x.n())}});
    }
    const auto dv = d.values();
    const auto xv = x.values();

    auto residual_of = [&](const std::vector<std::size_t>& perm) {
        double worst = 0.0;
        for (std::size_t i = 0; i < perm.size(); ++i) worst = std::max(worst, std::abs(xv[perm[i]] - dv[i]));
        return worst;
    };

    PermutationMatch result;
    if (auto perm = greedy_match(dv, xv, tol)) {
        result.ok = true;
        result.residual = residual_of(*perm);
        result.permutation = std::move(*perm);
        return result;
    }

    // Rank-to-rank pairing minimizes the worst difference in one dimension.
    const auto di = argsort(dv);
    const auto xi = argsort(xv);
    std::vector<std::size_t> perm(d.n());
    bool ok = true;
    for (std::size_t k = 0; k < di.size(); ++k) {
        perm[di[k]] = xi[k];
        ok = ok && within(dv[di[k]], xv[xi[k]], tol);
    }
    result.ok = ok;
    result.residual = residual_of(perm);
    if (ok) result.permutation = std::move(perm);
    return result;
}

}  // namespace polydual
