#include "polydual/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "polydual/errors.hpp"

namespace polydual {

namespace {

// Search coordinates: relative phase psi, center distance ell, radius r.
// The point sits at the origin and the candidate center at (ell, 0); distances
// from the point are invariant under rotation about it, so the center azimuth
// is not searched.
using Vec3 = std::array<double, 3>;

constexpr std::size_t kStarts = 12;
constexpr double kCongruentBand = 1e-4;
constexpr int kRingDirections = 12;

class SortedDistanceObjective {
public:
    SortedDistanceObjective(std::vector<double> target, int n)
        : target_(std::move(target)), n_(n), cand_(target_.size()) {
        offsets_.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) offsets_.push_back(kTwoPi * k / n);
    }

    // Fills `out` with sorted candidate distances minus the target; returns the sum of squares.
    double residuals(const Vec3& x, std::vector<double>& out) {
        ++evaluations_;
        const Point2 center{std::abs(x[1]), 0.0};
        const double r = std::abs(x[2]);
        for (std::size_t k = 0; k < cand_.size(); ++k) {
            cand_[k] = norm(polar(center, r, x[0] + offsets_[k]));
        }
        std::sort(cand_.begin(), cand_.end());
        out.resize(cand_.size());
        double sum = 0.0;
        for (std::size_t k = 0; k < cand_.size(); ++k) {
            out[k] = cand_[k] - target_[k];
            sum += out[k] * out[k];
        }
        return sum;
    }

    double value(const Vec3& x) { return residuals(x, scratch_); }

    [[nodiscard]] std::uint64_t evaluations() const { return evaluations_; }
    [[nodiscard]] std::size_t size() const { return target_.size(); }

private:
    std::vector<double> target_;
    int n_;
    std::vector<double> offsets_;
    std::vector<double> cand_;
    std::vector<double> scratch_;
    std::uint64_t evaluations_ = 0;
};

using ScalarFn = std::function<double(const Vec3&)>;

Vec3 clamp_domain(Vec3 x) {
    x[1] = std::abs(x[1]);
    x[2] = std::abs(x[2]);
    return x;
}

// Per-coordinate step expands on success and halves on failure.
void coordinate_descent(const ScalarFn& f, Vec3& x, double& fx, Vec3 step, double min_step_frac) {
    const Vec3 floor{step[0] * min_step_frac, step[1] * min_step_frac, step[2] * min_step_frac};
    const Vec3 cap = step;
    for (int guard = 0; guard < 20000; ++guard) {
        bool active = false;
        for (std::size_t d = 0; d < 3; ++d) {
            if (step[d] < floor[d]) continue;
            active = true;
            bool moved = false;
            for (double sign : {1.0, -1.0}) {
                Vec3 trial = x;
                trial[d] += sign * step[d];
                trial = clamp_domain(trial);
                const double ft = f(trial);
                if (ft < fx) {
                    x = trial;
                    fx = ft;
                    moved = true;
                    break;
                }
            }
            step[d] = moved ? std::min(2.0 * step[d], cap[d]) : 0.5 * step[d];
        }
        if (!active) return;
    }
}

// Solves a 3x3 system by Gaussian elimination with partial pivoting.
bool solve3(std::array<std::array<double, 3>, 3> a, Vec3 b, Vec3& x) {
    for (std::size_t c = 0; c < 3; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < 3; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        }
        if (a[piv][c] == 0.0) return false;
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < 3; ++r) {
            const double m = a[r][c] / a[c][c];
            for (std::size_t k = c; k < 3; ++k) a[r][k] -= m * a[c][k];
            b[r] -= m * b[c];
        }
    }
    for (std::size_t c = 3; c-- > 0;) {
        double s = b[c];
        for (std::size_t k = c + 1; k < 3; ++k) s -= a[c][k] * x[k];
        x[c] = s / a[c][c];
    }
    return true;
}

// Levenberg-Marquardt on the sorted residual vector with a central-difference Jacobian.
void polish(SortedDistanceObjective& obj, Vec3& x, double& fx, double scale) {
    std::vector<double> res;
    std::vector<double> plus;
    std::vector<double> minus;
    const std::size_t m = obj.size();
    double lambda = 1e-3;
    fx = obj.residuals(x, res);
    for (int it = 0; it < 60 && fx > 0.0; ++it) {
        std::array<std::vector<double>, 3> jac;
        for (std::size_t d = 0; d < 3; ++d) {
            const double h = d == 0 ? 1e-7 : 1e-7 * std::max(scale, std::abs(x[d]));
            Vec3 xp = x;
            Vec3 xm = x;
            xp[d] += h;
            xm[d] -= h;
            obj.residuals(xp, plus);
            obj.residuals(xm, minus);
            jac[d].resize(m);
            for (std::size_t k = 0; k < m; ++k) jac[d][k] = (plus[k] - minus[k]) / (2.0 * h);
        }
        std::array<std::array<double, 3>, 3> jtj{};
        Vec3 jtr{};
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                double s = 0.0;
                for (std::size_t k = 0; k < m; ++k) s += jac[a][k] * jac[b][k];
                jtj[a][b] = s;
            }
            double s = 0.0;
            for (std::size_t k = 0; k < m; ++k) s += jac[a][k] * res[k];
            jtr[a] = -s;
        }

        bool accepted = false;
        while (lambda < 1e12) {
            auto damped = jtj;
            for (std::size_t d = 0; d < 3; ++d) damped[d][d] += lambda * std::max(jtj[d][d], 1e-30);
            Vec3 delta{};
            if (!solve3(damped, jtr, delta)) {
                lambda *= 10.0;
                continue;
            }
            const Vec3 trial = clamp_domain({x[0] + delta[0], x[1] + delta[1], x[2] + delta[2]});
            std::vector<double> trial_res;
            const double ft = obj.residuals(trial, trial_res);
            if (ft < fx) {
                x = trial;
                fx = ft;
                res = std::move(trial_res);
                lambda = std::max(lambda / 3.0, 1e-12);
                accepted = true;
                break;
            }
            lambda *= 4.0;
        }
        if (!accepted) return;
    }
}

double max_relative_mismatch(SortedDistanceObjective& obj, const Vec3& x, double scale) {
    std::vector<double> res;
    obj.residuals(x, res);
    double worst = 0.0;
    for (double v : res) worst = std::max(worst, std::abs(v));
    return worst / scale;
}

}  // namespace

OracleInstance random_instance(std::uint64_t seed, int n_min, int n_max, bool on_circle) {
    if (n_min < 3 || n_max < n_min) {
        throw InvalidArgumentError("invalid vertex-count range",
                                   {{"n_min", static_cast<double>(n_min)},
                                    {"n_max", static_cast<double>(n_max)}});
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> n_dist(n_min, n_max);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const int n = n_dist(rng);
    const double R = std::pow(10.0, -1.0 + 2.0 * unit(rng));
    double ratio = 1.0;
    if (!on_circle) {
        do {
            ratio = 3.0 * unit(rng);
        } while (std::abs(ratio - 1.0) < 5e-4);
    }
    const double phase = kTwoPi * unit(rng);
    const Point2 center{-5.0 + 10.0 * unit(rng), -5.0 + 10.0 * unit(rng)};
    const double point_azimuth = kTwoPi * unit(rng);
    return {RegularPolygon(n, center, R, phase), polar(center, ratio * R, point_azimuth)};
}

OracleResult search_second_polygon(const RegularPolygon& p, Point2 M, const OracleConfig& cfg) {
    if (cfg.grid_resolution < 8 || cfg.refine_iterations < 0) {
        throw InvalidArgumentError("oracle needs grid_resolution >= 8 and refine_iterations >= 0",
                                   {{"grid_resolution", static_cast<double>(cfg.grid_resolution)},
                                    {"refine_iterations", static_cast<double>(cfg.refine_iterations)}});
    }
    const int n = p.n();
    const double R = p.circumradius();
    const double L = distance(M, p.center());
    const DistanceSpec target = distances_from(M, p);
    std::vector<double> sorted_target = target.sorted();
    const double dmax = sorted_target.back();

    OracleResult result;
    if (dmax == 0.0) return result;

    SortedDistanceObjective obj(std::move(sorted_target), n);
    const ScalarFn plain = [&](const Vec3& x) { return obj.value(x); };

    // Every candidate satisfies r, ell <= max distance.
    const std::size_t G = static_cast<std::size_t>(cfg.grid_resolution);
    const double psi_span = kTwoPi / n;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const Vec3 offset{unit(rng), 0.25 + 0.5 * unit(rng), 0.25 + 0.5 * unit(rng)};
    const Vec3 spacing{psi_span / G, dmax / G, dmax / G};
    auto grid_point = [&](std::size_t i, std::size_t j, std::size_t k) {
        return Vec3{(i + offset[0]) * spacing[0], (j + offset[1]) * spacing[1], (k + offset[2]) * spacing[2]};
    };

    std::vector<double> grid(G * G * G);
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> double& { return grid[(i * G + j) * G + k]; };
    for (std::size_t i = 0; i < G; ++i)
        for (std::size_t j = 0; j < G; ++j)
            for (std::size_t k = 0; k < G; ++k) at(i, j, k) = obj.value(grid_point(i, j, k));

    // Local minima over the 26-neighborhood, periodic in psi.
    std::vector<std::pair<double, std::array<std::size_t, 3>>> minima;
    for (std::size_t i = 0; i < G; ++i) {
        for (std::size_t j = 0; j < G; ++j) {
            for (std::size_t k = 0; k < G; ++k) {
                const double v = at(i, j, k);
                bool is_min = true;
                for (int di = -1; di <= 1 && is_min; ++di) {
                    const std::size_t ii = (i + G - 1 + static_cast<std::size_t>(di + 1)) % G;
                    for (int dj = -1; dj <= 1 && is_min; ++dj) {
                        const long jj = static_cast<long>(j) + dj;
                        if (jj < 0 || jj >= static_cast<long>(G)) continue;
                        for (int dk = -1; dk <= 1 && is_min; ++dk) {
                            const long kk = static_cast<long>(k) + dk;
                            if (kk < 0 || kk >= static_cast<long>(G)) continue;
                            if (di == 0 && dj == 0 && dk == 0) continue;
                            if (at(ii, static_cast<std::size_t>(jj), static_cast<std::size_t>(kk)) < v) {
                                is_min = false;
                            }
                        }
                    }
                }
                if (is_min) minima.push_back({v, {i, j, k}});
            }
        }
    }
    std::sort(minima.begin(), minima.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (minima.size() > kStarts) minima.resize(kStarts);

    const double scale = R + L;
    auto congruent = [&](const Vec3& x) {
        return std::abs(x[2] - R) <= kCongruentBand * scale &&
               std::abs(x[1] - L) <= kCongruentBand * scale;
    };
    auto refine = [&](Vec3 x, const ScalarFn& f) {
        double fx = f(x);
        for (int level = 0; level < cfg.refine_iterations; ++level) {
            const double shrink = std::pow(0.25, level);
            coordinate_descent(f, x, fx, {spacing[0] * shrink, spacing[1] * shrink, spacing[2] * shrink},
                               1.0 / 64.0);
        }
        return x;
    };

    bool have_best = false;
    Vec3 best{};
    double best_residual = std::numeric_limits<double>::infinity();
    std::optional<Vec3> congruent_root;
    auto consider = [&](const Vec3& x) {
        if (congruent(x)) {
            if (!congruent_root) congruent_root = x;
            return;
        }
        const double residual = max_relative_mismatch(obj, x, dmax);
        if (residual < best_residual) {
            best_residual = residual;
            best = x;
            have_best = true;
        }
    };

    for (const auto& entry : minima) {
        const auto& idx = entry.second;
        Vec3 x = refine(grid_point(idx[0], idx[1], idx[2]), plain);
        double fx = 0.0;
        polish(obj, x, fx, dmax);
        consider(x);
    }

    // A second root closer than the grid spacing shares its cell with p's own
    // (R, L). Restart the polish from rings around that root.
    if ((!have_best || best_residual > cfg.tol) && congruent_root) {
        const double base = unit(rng) * kTwoPi / kRingDirections;
        for (double radius = 2.0 * kCongruentBand * scale; radius <= 2.0 * spacing[1]; radius *= 2.0) {
            for (int k = 0; k < kRingDirections; ++k) {
                const double a = base + kTwoPi * k / kRingDirections;
                Vec3 x = clamp_domain({(*congruent_root)[0], (*congruent_root)[1] + radius * std::cos(a),
                                       (*congruent_root)[2] + radius * std::sin(a)});
                double fx = 0.0;
                polish(obj, x, fx, dmax);
                consider(x);
            }
        }
    }

    result.samples_evaluated = obj.evaluations();
    if (!have_best) {
        result.residual = std::numeric_limits<double>::infinity();
        return result;
    }
    result.residual = best_residual;
    result.center_distance = best[1];
    result.circumradius = best[2];
    result.found = best_residual <= cfg.tol;
    if (result.found) {
        result.polygon = RegularPolygon(n, {M.x + best[1], M.y}, best[2], best[0]);
    }
    return result;
}

}  // namespace polydual
