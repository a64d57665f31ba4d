// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polydual/cli/app.hpp"
#include "polydual/cyclic_averages.hpp"
#include "polydual/dual_solver.hpp"
#include "polydual/errors.hpp"
#include "polydual/geometry.hpp"
#include "polydual/oracle.hpp"
#include "polydual/pompeiu.hpp"
#include "polydual/reconstruction.hpp"
#include "polydual/two_points.hpp"
#include "test_support.hpp"

using namespace polydual;
using polydual::testing::brute_distances;
using polydual::testing::random_shared_vertex_pair;
using polydual::testing::rel_err;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

// Collects failed checks; keeps the first few messages.
class Checks {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (ok) return;
        ++failed_;
        if (failed_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
    }
    [[nodiscard]] Verdict verdict(const std::string& summary) const {
        std::ostringstream o;
        o << summary;
        if (failed_ > 0) o << " | " << failed_ << "/" << total_ << " checks failed: " << notes_;
        return {failed_ == 0, o.str()};
    }

private:
    long total_ = 0;
    long failed_ = 0;
    std::string notes_;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double scaled(double a, double b, double scale) { return std::abs(a - b) / scale; }

// 1. Square worked example.
Verdict ac1() {
    constexpr double kTol = 1e-12;
    const double s2 = std::sqrt(2.0);
    const double s5 = std::sqrt(5.0);
    Checks c;
    // The distances come from actual coordinates: square of circumradius sqrt2, point on a side midpoint.
    const DistanceSpec from_coords = distances_from({1.0, 0.0}, RegularPolygon(4, {0, 0}, s2, std::numbers::pi / 4));
    c.expect(multiset_equal(from_coords, DistanceSpec({1, s5, s5, 1}), kTol), "coordinates disagree with (1,sqrt5,sqrt5,1)");

    const DistanceSpec d({1, s5, s5, 1});
    const auto a = averages_from_distances(d);
    c.expect(rel_err(a.at(1), 3) <= kTol && rel_err(a.at(2), 13) <= kTol && rel_err(a.at(3), 63) <= kTol,
             "averages != 3, 13, 63");
    const auto s = solve_dual(d);
    c.expect(rel_err(s.discriminant, 1.0) <= kTol, "discriminant != 1");
    c.expect(rel_err(s.larger.circumradius, s2) <= kTol && rel_err(s.larger.center_distance, 1) <= kTol,
             "(R1, L1) != (sqrt2, 1)");
    c.expect(rel_err(s.smaller.circumradius, 1) <= kTol && rel_err(s.smaller.center_distance, s2) <= kTol,
             "(R2, L2) != (1, sqrt2)");

    constexpr int kReps = 1000;
    double sink = 0.0;
    const auto t0 = Clock::now();
    for (int i = 0; i < kReps; ++i) {
        const auto avg = averages_from_distances(d);
        sink += solve_dual(d).larger.circumradius + avg.at(3);
    }
    const double per_call = seconds_since(t0) / kReps;
    c.expect(per_call < 1e-3 && sink > 0, "runtime >= 1 ms");
    return c.verdict("square (1,sqrt5,sqrt5,1): S=3,13,63, disc=1, pairs (sqrt2,1),(1,sqrt2) at 1e-12; " +
                     fmt("%.2e", per_call * 1e3) + " ms per solve");
}

// 2. Equilateral 3-5-7.
Verdict ac2() {
    constexpr double kTol = 1e-12;
    Checks c;
    const auto eq = solve_equilateral(pompeiu_from_distances(3, 5, 7));
    c.expect(rel_err(eq.larger_side, 8.0) <= kTol, "larger side != 8");
    c.expect(rel_err(eq.smaller_side, std::sqrt(19.0)) <= kTol, "smaller side != sqrt19");
    const double r1 = eq.dual.larger.circumradius;
    const double l1 = eq.dual.larger.center_distance;
    const double r2 = eq.dual.smaller.circumradius;
    c.expect(rel_err(r1 * r1, 64.0 / 3.0) <= kTol, "R1^2 != 64/3");
    c.expect(rel_err(l1 * l1, 19.0 / 3.0) <= kTol && rel_err(r2 * r2, 19.0 / 3.0) <= kTol, "L1^2, R2^2 != 19/3");

    const auto g = solve_dual(DistanceSpec({3, 5, 7}));
    c.expect(rel_err(g.larger.circumradius, r1) <= kTol && rel_err(g.larger.center_distance, l1) <= kTol &&
                 rel_err(g.smaller.circumradius, eq.dual.smaller.circumradius) <= kTol &&
                 rel_err(g.smaller.center_distance, eq.dual.smaller.center_distance) <= kTol,
             "closed forms disagree with the general solver");
    return c.verdict("3-5-7: sides 8 and sqrt19, R1^2=64/3, L1^2=R2^2=19/3, closed form == general path at 1e-12; side " +
                     fmt("%.17g", eq.smaller_side));
}

// 3. Cyclic-average identity, n = 3..12.
Verdict ac3() {
    constexpr double kTol = 1e-9;
    constexpr int kPerN = 1000;
    Checks c;
    double worst = 0.0;
    const auto t0 = Clock::now();
    for (int n = 3; n <= 12; ++n) {
        for (int i = 0; i < kPerN; ++i) {
            const auto inst = random_instance(static_cast<std::uint64_t>(n) * 1000003ULL + static_cast<std::uint64_t>(i), n, n);
            const auto direct = averages_from_distances(distances_from(inst.point, inst.polygon));
            const auto closed = averages_from_RL(n, inst.polygon.circumradius(), distance(inst.point, inst.polygon.center()));
            for (int m = 1; m <= n - 1; ++m) {
                const double e = rel_err(direct.at(m), closed.at(m));
                worst = std::max(worst, e);
                c.expect(e <= kTol, "n=" + std::to_string(n) + " m=" + std::to_string(m) + fmt(" err %.2e", e));
            }
        }
    }
    const double elapsed = seconds_since(t0);
    c.expect(elapsed < 5.0, "runtime >= 5 s");

    // Counterexample at m = n: rotating by pi/n changes the n-th average by 4*(-RL)^n.
    int shown = 0;
    for (int n = 3; n <= 12; ++n) {
        const Point2 M{0.6, 0.0};
        const double a0 = power_average(distances_from(M, RegularPolygon(n, {0, 0}, 1.0, 0.0)), n);
        const double a1 = power_average(distances_from(M, RegularPolygon(n, {0, 0}, 1.0, std::numbers::pi / n)), n);
        const double closed = averages_from_RL(n + 1, 1.0, 0.6).at(n);  // valid formula for the (n+1)-gon
        const bool fails = rel_err(a0, a1) > kTol && (rel_err(a0, closed) > kTol || rel_err(a1, closed) > kTol);
        c.expect(fails, "no m=n counterexample for n=" + std::to_string(n));
        shown += fails ? 1 : 0;
    }
    return c.verdict(std::to_string(10 * kPerN) + " instances, max rel err " + fmt("%.2e", worst) + " (tol 1e-9), " +
                     std::to_string(shown) + "/10 m=n counterexamples, " + fmt("%.2f", elapsed) + " s");
}

// 4. Round trip through the solver.
Verdict ac4() {
    constexpr double kTol = 1e-9;
    constexpr int kCount = 10000;
    Checks c;
    double worst = 0.0;
    int inside = 0;
    for (int i = 0; i < kCount; ++i) {
        const auto inst = random_instance(4000000 + static_cast<std::uint64_t>(i), 3, 12);
        const double R = inst.polygon.circumradius();
        const double L = distance(inst.point, inst.polygon.center());
        const auto s = solve_dual(distances_from(inst.point, inst.polygon));
        const double e_larger = std::max(rel_err(s.larger.circumradius, R), rel_err(s.larger.center_distance, L));
        const double e_smaller = std::max(rel_err(s.smaller.circumradius, R), rel_err(s.smaller.center_distance, L));
        const double e = std::min(e_larger, e_smaller);
        worst = std::max(worst, e);
        c.expect(e <= kTol, "seed " + std::to_string(i) + fmt(" err %.2e", e));
        // The point is inside the generating circumcircle exactly when that polygon is the larger solution.
        const bool generated_larger = e_larger <= e_smaller;
        c.expect(generated_larger == (R > L), "classification mismatch at seed " + std::to_string(i));
        c.expect(classify_point(s) == PointClass::InsideLarger, "unexpected point class");
        inside += R > L ? 1 : 0;
    }
    double worst_circle = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto inst = random_instance(5000000 + static_cast<std::uint64_t>(i), 3, 12, true);
        const double R = inst.polygon.circumradius();
        const auto s = solve_dual(distances_from(inst.point, inst.polygon));
        c.expect(s.degeneracy == Degeneracy::OnCircumcircle, "on-circle instance not flagged");
        for (double v : {s.larger.circumradius, s.larger.center_distance, s.smaller.circumradius,
                         s.smaller.center_distance}) {
            worst_circle = std::max(worst_circle, rel_err(v, R));
            c.expect(rel_err(v, R) <= kTol, "on-circle value differs from R");
        }
    }
    return c.verdict(std::to_string(kCount) + " instances (" + std::to_string(inside) +
                     " inside), max componentwise rel err " + fmt("%.2e", worst) +
                     "; 1000 on-circle, all OnCircumcircle, max spread " + fmt("%.2e", worst_circle));
}

// 5. Explicit reconstruction.
Verdict ac5() {
    constexpr int kCount = 1000;
    Checks c;
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    double worst_swap = 0.0;
    for (int i = 0; i < kCount; ++i) {
        const auto inst = random_instance(6000000 + static_cast<std::uint64_t>(i), 3, 12);
        const double R = inst.polygon.circumradius();
        const double L = distance(inst.point, inst.polygon.center());
        const auto d = distances_from(inst.point, inst.polygon);
        for (int k = 0; k < 8; ++k) {
            const auto pair = construct_dual(inst.polygon, inst.point, angle(rng));
            for (const auto* q : {&pair.b_polygon, &pair.c_polygon}) {
                const DistanceSpec x(brute_distances(inst.point, q->n(), q->center(), q->circumradius(), q->phase()));
                c.expect(multiset_equal(x, d, 1e-8), "multiset mismatch at instance " + std::to_string(i));
                const double swap = std::max(scaled(q->circumradius(), L, R + L),
                                             scaled(distance(inst.point, q->center()), R, R + L));
                worst_swap = std::max(worst_swap, swap);
                c.expect(swap <= 1e-10, "swap relation off at instance " + std::to_string(i));
                c.expect(verify_permutation(d, x, 1e-8).ok, "no permutation at instance " + std::to_string(i));
            }
        }
    }
    return c.verdict(std::to_string(kCount) + " x 8 directions, both mirror duals: multiset at 1e-8, max swap err " +
                     fmt("%.2e", worst_swap) + " (tol 1e-10), permutations verified");
}

// 6. Two points for polygons sharing a vertex.
Verdict ac6() {
    constexpr int kCount = 10000;
    Checks c;
    int two = 0;
    int tangent = 0;
    for (int i = 0; i < kCount; ++i) {
        const auto pair = random_shared_vertex_pair(7000000 + static_cast<std::uint64_t>(i), 3, 12);
        const auto sol = two_points(pair.a, pair.b);
        c.expect(sol.existence_condition, "existence condition fails");
        if (sol.m2) {
            ++two;
        } else {
            ++tangent;
        }
        std::vector<Point2> pts{sol.m1};
        if (sol.m2) pts.push_back(*sol.m2);
        for (Point2 m : pts) {
            const DistanceSpec da(brute_distances(m, pair.a.n(), pair.a.center(), pair.a.circumradius(), pair.a.phase()));
            const DistanceSpec db(brute_distances(m, pair.b.n(), pair.b.center(), pair.b.circumradius(), pair.b.phase()));
            c.expect(multiset_equal(da, db, 1e-8), "multisets differ at pair " + std::to_string(i));
        }
    }
    // Collinear construction: shared vertex, O1 and O2 on one line.
    int single = 0;
    for (int n = 3; n <= 12; ++n) {
        const RegularPolygon a(n, {0, 0}, 1.0, 0.0);
        const RegularPolygon b(n, {1.0 + 1.7, 0}, 1.7, std::numbers::pi);
        const auto sol = two_points(a, b);
        const bool one = !sol.m2 && sol.collinear_degenerate;
        c.expect(one, "collinear case gave two points for n=" + std::to_string(n));
        c.expect(multiset_equal(distances_from(sol.m1, a), distances_from(sol.m1, b), 1e-8), "collinear point wrong");
        single += one ? 1 : 0;
    }
    return c.verdict(std::to_string(kCount) + " shared-vertex pairs: " + std::to_string(two) + " with two points, " +
                     std::to_string(tangent) + " tangent; multisets equal at 1e-8; collinear cases single point " +
                     std::to_string(single) + "/10");
}

// 7. Closed forms against the coordinate-only search.
Verdict ac7() {
    constexpr int kCount = 500;
    constexpr double kTol = 1e-5;
    Checks c;
    double worst = 0.0;
    const auto t0 = Clock::now();
    for (int i = 0; i < kCount; ++i) {
        const std::uint64_t seed = 8000000 + static_cast<std::uint64_t>(i);
        const auto inst = random_instance(seed, 3, 8);
        const double R = inst.polygon.circumradius();
        const double L = distance(inst.point, inst.polygon.center());
        OracleConfig cfg;
        cfg.seed = seed;
        const auto res = search_second_polygon(inst.polygon, inst.point, cfg);
        c.expect(res.found, "oracle found nothing for seed " + std::to_string(seed));
        if (!res.found) continue;
        // Closed form: (R2, L2) = (L1, R1) of the generating polygon.
        const auto s = dual_from_parameters(R, L);
        const double r2 = R > L ? s.smaller.circumradius : s.larger.circumradius;
        const double l2 = R > L ? s.smaller.center_distance : s.larger.center_distance;
        const double e = std::max(rel_err(res.circumradius, r2), rel_err(res.center_distance, l2));
        worst = std::max(worst, e);
        c.expect(e <= kTol, "seed " + std::to_string(seed) + fmt(" err %.2e", e));
        // Swap relations, read off the search result alone.
        c.expect(rel_err(res.circumradius, L) <= kTol && rel_err(res.center_distance, R) <= kTol,
                 "swap relations absent for seed " + std::to_string(seed));
    }
    const double elapsed = seconds_since(t0);
    c.expect(elapsed < 600.0, "runtime >= 10 min");
    return c.verdict(std::to_string(kCount) + " instances n<=8: max componentwise rel err " + fmt("%.2e", worst) +
                     " (tol 1e-5), swap relations recovered, " + fmt("%.1f", elapsed) + " s");
}

// 8. Pompeiu boundary.
Verdict ac8() {
    constexpr int kCount = 100000;
    constexpr double kEq = 1e-9;
    Checks c;
    std::mt19937_64 rng(88);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int equal = 0;
    double min_unequal = INFINITY;
    for (int i = 0; i < kCount; ++i) {
        double a = 0.0, b = 0.0, cc = 0.0;
        if (i % 100 == 0) {
            a = b = cc = 0.01 + 10 * u(rng);  // equal triples
        } else {
            do {
                a = 10 * u(rng);
                b = 10 * u(rng);
                cc = 10 * u(rng);
            } while (a > b + cc || b > a + cc || cc > a + b);
        }
        const auto t = pompeiu_from_distances(a, b, cc);
        const double margin = weitzenbock_margin(t);
        const double sum = a * a + b * b + cc * cc;
        c.expect(margin >= 0.0, "negative margin");
        const bool is_equal = a == b && b == cc;
        const bool zero = margin <= kEq * sum;
        c.expect(zero == is_equal, "margin equality does not match equal sides");
        equal += is_equal ? 1 : 0;
        if (!is_equal) min_unequal = std::min(min_unequal, margin / sum);
    }
    // Van Schooten: on the circumcircle the largest distance is the sum of the others.
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double R = std::pow(10.0, -1 + 2 * u(rng));
        const RegularPolygon tri(3, {0, 0}, R, kTwoPi * u(rng));
        const auto d = distances_from(polar({0, 0}, R, kTwoPi * u(rng)), tri);
        auto v = d.sorted();
        c.expect(std::abs(v[2] - v[0] - v[1]) <= 1e-12 * v[2], "Van Schooten relation off");
        const auto s = solve_dual(d);
        worst = std::max(worst, std::abs(s.discriminant) / (s.s2 * s.s2));
        c.expect(s.discriminant <= 1e-9 * s.s2 * s.s2, "discriminant above 1e-9 s2^2");
    }
    return c.verdict(std::to_string(kCount) + " triples (" + std::to_string(equal) +
                     " equal): margin >= 0, zero (<=1e-9 relative) only for equal; min unequal margin " +
                     fmt("%.2e", min_unequal) + "; 10000 Van Schooten triples, max disc/s2^2 " + fmt("%.2e", worst));
}

// 9. Command-line contract.
Verdict ac9() {
    Checks c;
    auto run = [](const std::vector<std::string>& args, int& code) {
        std::ostringstream out, err;
        code = cli::run_cli(args, out, err);
        return out.str();
    };
    auto count = [](const std::string& text, const std::string& needle) {
        std::size_t n = 0;
        for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
        return n;
    };
    int code = -1;
    const std::string dual = run({"dual", "--distances", "1,2.2360679774997896,2.2360679774997896,1"}, code);
    const auto jd = cli::Json::parse(dual);
    c.expect(code == 0, "dual exit code");
    c.expect(rel_err(jd["R1"].get<double>(), std::sqrt(2.0)) <= 1e-12 && rel_err(jd["L1"].get<double>(), 1.0) <= 1e-12 &&
                 rel_err(jd["R2"].get<double>(), 1.0) <= 1e-12 &&
                 rel_err(jd["L2"].get<double>(), std::sqrt(2.0)) <= 1e-12,
             "dual pair values");
    c.expect(jd["consistency"]["pass"].get<bool>(), "consistency report");

    const std::string pom = run({"pompeiu", "--distances", "3,5,7"}, code);
    const auto jp = cli::Json::parse(pom);
    c.expect(code == 0, "pompeiu exit code");
    c.expect(jp["sides"][0].get<double>() == 8.0 && jp["sides"][1].get<double>() == 4.358898943540674, "pompeiu sides");

    const std::string bad = run({"dual", "--distances", "1,1,5"}, code);
    c.expect(code == 1 && cli::Json::parse(bad)["error"]["code"] == "TRIANGLE_INEQUALITY", "1,1,5 must exit 1");

    const std::string square = "4,0,0,1.4142135623730951,45deg";
    const std::string s1 = run({"render", "--scene", "dual", "--polygon", square, "--point", "1,0"}, code);
    c.expect(code == 0 && count(s1, "<polygon ") == 2 && count(s1, "<circle ") == 3 &&
                 count(s1, "<rect class=\"point\"") == 1,
             "dual scene counts");
    const std::string s1m = run({"render", "--scene", "dual", "--polygon", square, "--point", "1,0", "--mirror"}, code);
    c.expect(code == 0 && count(s1m, "<polygon ") == 3, "mirror polygon count");
    const std::string s2 =
        run({"render", "--scene", "two-points", "--polygon", square, "--polygon", "4,1,0,1,90deg"}, code);
    c.expect(code == 0 && count(s2, "<polygon ") == 2 && count(s2, "<circle ") == 2 &&
                 count(s2, "<rect class=\"point\"") == 2,
             "two-points scene counts");
    const std::string s3 = run({"render", "--scene", "pompeiu", "--distances", "3,5,7"}, code);
    c.expect(code == 0 && count(s3, "<polygon ") == 2 && count(s3, "<line ") == 6 &&
                 count(s3, "<rect class=\"point\"") == 1,
             "pompeiu scene counts");

    int code2 = -1;
    c.expect(run({"dual", "--distances", "1,2.2360679774997896,2.2360679774997896,1"}, code2) == dual, "dual bytes");
    c.expect(run({"pompeiu", "--distances", "3,5,7"}, code2) == pom, "pompeiu bytes");
    c.expect(run({"render", "--scene", "dual", "--polygon", square, "--point", "1,0"}, code2) == s1, "svg bytes");
    c.expect(run({"render", "--scene", "pompeiu", "--distances", "3,5,7"}, code2) == s3, "pompeiu svg bytes");
    return c.verdict("dual/pompeiu/1,1,5 examples, SVG counts 2+1/3/1, 2/2/2, 2/6/1, byte-identical reruns");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
        {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9},
    };
    int failures = 0;
    for (const auto& [id, fn] : criteria) {
        Verdict v;
        const auto t0 = Clock::now();
        try {
            v = fn();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %s  %s [%.2fs]\n", id.c_str(), v.pass ? "PASS" : "FAIL", v.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
        failures += v.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
