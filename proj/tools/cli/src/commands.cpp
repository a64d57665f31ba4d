#include "commands.hpp"

#include <algorithm>
#include <cmath>

#include "payload.hpp"
#include "polydual/cli/svg.hpp"
#include "polydual/cyclic_averages.hpp"
#include "polydual/dual_solver.hpp"
#include "polydual/errors.hpp"
#include "polydual/oracle.hpp"
#include "polydual/pompeiu.hpp"
#include "polydual/reconstruction.hpp"
#include "polydual/two_points.hpp"

namespace polydual::cli::detail {

namespace {

int max_vertices(const JobRequest& req) {
    const auto cap = read_integer(req.payload, "max_n").value_or(kDefaultMaxVertices);
    if (cap < 3 || cap > kMaxBinomialRow + 1) {
        throw SchemaError("\"max_n\" must lie in [3, " + std::to_string(kMaxBinomialRow + 1) + "]");
    }
    return static_cast<int>(cap);
}

DistanceSpec read_distances(const JobRequest& req) {
    DistanceSpec d(read_numbers(req.payload, "distances"));
    const int cap = max_vertices(req);
    if (static_cast<long long>(d.n()) > cap) {
        throw InvalidArgumentError("more distances than the vertex cap allows",
                                   {{"n", static_cast<double>(d.n())}, {"max_n", static_cast<double>(cap)}});
    }
    return d;
}

Json one_based(const std::vector<std::size_t>& perm) {
    Json arr = Json::array();
    for (std::size_t j : perm) arr.push_back(j + 1);
    return arr;
}

void put_pairs(Json& out, const DualSolution& s) {
    out["R1"] = s.larger.circumradius;
    out["L1"] = s.larger.center_distance;
    out["R2"] = s.smaller.circumradius;
    out["L2"] = s.smaller.center_distance;
}

Json consistency_json(const ConsistencyReport& r) {
    Json terms = Json::array();
    for (const auto& t : r.terms) {
        terms.push_back({{"m", t.m},
                         {"actual", t.actual},
                         {"expected", t.expected},
                         {"residual", t.residual},
                         {"pass", t.pass}});
    }
    return Json{{"pass", r.pass}, {"moment_gap", r.moment_gap}, {"moment_ok", r.moment_ok}, {"terms", terms}};
}

Json distances_json(const DistanceSpec& d) {
    return numbers_json(std::vector<double>(d.values().begin(), d.values().end()));
}

Json polygon_block(const RegularPolygon& p, Point2 M) {
    return Json{{"polygon", polygon_json(p)},
                {"vertices", vertices_json(vertices(p))},
                {"distances", distances_json(distances_from(M, p))}};
}

// Reconstruction input: either a polygon and a point, or a distance list
// placed with the point at the origin (or at "point" when given) and the
// larger solution's center on the positive x-axis.
struct Placement {
    RegularPolygon polygon;
    Point2 point;
};

Placement placement(const JobRequest& req) {
    const Json& p = req.payload;
    const Point2 M = p.contains("point") ? read_point(p["point"], "point") : Point2{0.0, 0.0};
    if (p.contains("polygon")) {
        if (!p.contains("point")) throw SchemaError("a polygon needs an observation \"point\"");
        return {read_polygon(p["polygon"]), M};
    }
    if (!p.contains("distances")) throw SchemaError("payload needs \"distances\" or \"polygon\" and \"point\"");

    const DistanceSpec d = read_distances(req);
    const DualSolution s = solve_dual(d, req.tol);
    if (s.degeneracy != Degeneracy::None) {
        throw DegenerateError(s.degeneracy == Degeneracy::OnCircumcircle
                                  ? "the point lies on the circumcircle; the dual pair coincides"
                                  : "the point is at the center; the dual polygon has zero size",
                              {{"discriminant", s.discriminant}, {"s2", s.s2}});
    }
    const int n = static_cast<int>(d.n());
    const double R = s.larger.circumradius;
    const double L = s.larger.center_distance;
    const Point2 O{M.x + L, M.y};
    // Of the two phases putting d[0] on vertex 0, keep the one reproducing the given order.
    const auto phases = solve_phase(M, O, n, R, L, d[0], req.tol);
    double best_err = INFINITY;
    double best_phase = phases[0];
    for (double ph : phases) {
        const auto x = distances_from(M, RegularPolygon(n, O, R, ph));
        double err = 0.0;
        for (std::size_t i = 0; i < d.n(); ++i) err = std::max(err, std::abs(x[i] - d[i]));
        if (err < best_err) {
            best_err = err;
            best_phase = ph;
        }
    }
    return {RegularPolygon(n, O, R, best_phase), M};
}

double direction_of(const JobRequest& req) {
    return req.payload.contains("direction") ? read_angle(req.payload["direction"], "direction") : 0.0;
}

std::size_t anchor_of(const JobRequest& req, int n) {
    const auto a = read_integer(req.payload, "anchor_index").value_or(1);
    if (a < 1 || a > n) {
        throw InvalidArgumentError("anchor index must be in 1..n", {{"anchor_index", static_cast<double>(a)},
                                                                     {"n", static_cast<double>(n)}});
    }
    return static_cast<std::size_t>(a - 1);
}

RegularPolygon pair_at(const Json& polygons, std::size_t i) { return read_polygon(polygons.at(i)); }

std::array<RegularPolygon, 2> read_polygon_pair(const JobRequest& req) {
    const Json& p = req.payload;
    if (!p.contains("polygons") || !p["polygons"].is_array() || p["polygons"].size() != 2) {
        throw SchemaError("two-points needs \"polygons\": an array of exactly two polygons");
    }
    return {pair_at(p["polygons"], 0), pair_at(p["polygons"], 1)};
}

std::array<double, 3> read_triple(const JobRequest& req) {
    const auto d = read_numbers(req.payload, "distances");
    if (d.size() != 3) throw SchemaError("pompeiu needs exactly three distances");
    return {d[0], d[1], d[2]};
}

}  // namespace

Json cmd_averages(const JobRequest& req) {
    require_object(req.payload);
    const DistanceSpec d = read_distances(req);
    const CyclicAverages a = averages_from_distances(d);
    Json list = Json::array();
    for (int m = 1; m <= static_cast<int>(a.values.size()); ++m) {
        list.push_back({{"m", m}, {"power", 2 * m}, {"value", a.at(m)}});
    }
    return Json{{"command", "averages"}, {"n", a.n}, {"averages", list}};
}

Json cmd_dual(const JobRequest& req) {
    require_object(req.payload);
    const DistanceSpec d = read_distances(req);
    Json out{{"command", "dual"}, {"n", d.n()}};
    if (d.n() == 3) {
        const PompeiuTriangle t = pompeiu_from_distances(d[0], d[1], d[2], req.tol);
        out["pompeiu"] = {{"area", t.area}, {"degenerate", t.degenerate}, {"weitzenbock_margin", weitzenbock_margin(t)}};
    }
    const DualSolution s = solve_dual(d, req.tol);
    out["s2"] = s.s2;
    out["s4"] = s.s4;
    out["discriminant"] = s.discriminant;
    out["degeneracy"] = std::string(to_string(s.degeneracy));
    out["point_class"] = std::string(to_string(classify_point(s)));
    put_pairs(out, s);
    out["consistency"] = consistency_json(check_consistency(averages_from_distances(d)));
    return out;
}

Json cmd_reconstruct(const JobRequest& req) {
    require_object(req.payload);
    const Placement pl = placement(req);
    const std::size_t anchor = anchor_of(req, pl.polygon.n());
    const DualPolygonPair pair = construct_dual(pl.polygon, pl.point, direction_of(req), req.tol, anchor);

    const DistanceSpec d = distances_from(pl.point, pl.polygon);
    const double R = pl.polygon.circumradius();
    const double L = distance(pl.point, pl.polygon.center());

    Json out{{"command", "reconstruct"}, {"n", pl.polygon.n()}, {"point", point_json(pl.point)}};
    put_pairs(out, dual_from_parameters(R, L));
    out["center_direction"] = pair.center_direction;
    out["anchor_index"] = pair.anchor_index + 1;
    out["primary"] = polygon_block(pl.polygon, pl.point);
    for (const auto& [key, poly] : {std::pair{"b", &pair.b_polygon}, std::pair{"c", &pair.c_polygon}}) {
        Json block = polygon_block(*poly, pl.point);
        const PermutationMatch m = verify_permutation(d, distances_from(pl.point, *poly), 1e-8);
        block["permutation_ok"] = m.ok;
        block["permutation"] = one_based(m.permutation);
        out[key] = block;
    }
    out["match_residual"] = pair.match_residual;
    return out;
}

Json cmd_pompeiu(const JobRequest& req) {
    require_object(req.payload);
    const auto [d1, d2, d3] = read_triple(req);
    const PompeiuTriangle t = pompeiu_from_distances(d1, d2, d3, req.tol);
    const EquilateralSolution sol = solve_equilateral(t);

    Json out{{"command", "pompeiu"},
             {"distances", numbers_json({d1, d2, d3})},
             {"area", t.area},
             {"degenerate", t.degenerate},
             {"weitzenbock_margin", weitzenbock_margin(t)},
             {"degeneracy", std::string(to_string(sol.dual.degeneracy))}};
    put_pairs(out, sol.dual);
    out["larger_side"] = sol.larger_side;
    out["smaller_side"] = sol.smaller_side;
    out["sides"] = numbers_json({sol.larger_side, sol.smaller_side});
    if (!t.degenerate) {
        const TrianglePair tp = construct_both_triangles(d1, d2, d3);
        out["construction"] = {{"point", point_json(tp.point)},
                               {"auxiliary", point_json(tp.auxiliary)},
                               {"larger", vertices_json({tp.larger.begin(), tp.larger.end()})},
                               {"smaller", vertices_json({tp.smaller.begin(), tp.smaller.end()})}};
    }
    return out;
}

Json cmd_two_points(const JobRequest& req) {
    require_object(req.payload);
    const auto [pa, pb] = read_polygon_pair(req);
    const TwoPointsSolution sol = two_points(pa, pb, req.tol);

    Json points = Json::array();
    std::vector<std::pair<std::string, Point2>> pts{{"M1", sol.m1}};
    if (sol.m2) pts.emplace_back("M2", *sol.m2);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        points.push_back({{"label", pts[k].first},
                          {"point", point_json(pts[k].second)},
                          {"distances_a", distances_json(distances_from(pts[k].second, pa))},
                          {"distances_b", distances_json(distances_from(pts[k].second, pb))},
                          {"permutation_ok", sol.matches[k].ok},
                          {"permutation", one_based(sol.matches[k].permutation)},
                          {"residual", sol.matches[k].residual}});
    }
    return Json{{"command", "two-points"},
                {"n", pa.n()},
                {"shared_vertex", {{"a", sol.shared_vertex_a + 1}, {"b", sol.shared_vertex_b + 1}}},
                {"center_distance", sol.center_distance},
                {"existence_condition", sol.existence_condition},
                {"collinear_degenerate", sol.collinear_degenerate},
                {"points", points}};
}

Json cmd_verify(const JobRequest& req) {
    require_object(req.payload);
    const auto count = read_integer(req.payload, "instances").value_or(20);
    const auto n_min = read_integer(req.payload, "n_min").value_or(3);
    const auto n_max = read_integer(req.payload, "n_max").value_or(8);
    const auto grid = read_integer(req.payload, "grid_resolution").value_or(64);
    if (count < 0 || n_min < 3 || n_max < n_min || n_max > 64 || grid < 8 || grid > 256) {
        throw SchemaError("verify needs instances >= 0, 3 <= n_min <= n_max <= 64, 8 <= grid_resolution <= 256");
    }
    constexpr double kAgreement = 1e-5;

    OracleConfig cfg;
    cfg.grid_resolution = static_cast<int>(grid);
    Json results = Json::array();
    Json failures = Json::array();
    double worst = 0.0;
    long long passed = 0;
    for (long long i = 0; i < count; ++i) {
        const std::uint64_t seed = req.seed + static_cast<std::uint64_t>(i);
        const OracleInstance inst = random_instance(seed, static_cast<int>(n_min), static_cast<int>(n_max));
        cfg.seed = seed;
        const OracleResult res = search_second_polygon(inst.polygon, inst.point, cfg);
        const double R = inst.polygon.circumradius();
        const double L = distance(inst.point, inst.polygon.center());
        // The closed form predicts the second polygon at (R2, L2) = (L, R).
        const double err = res.found ? std::max(std::abs(res.circumradius - L), std::abs(res.center_distance - R)) / (R + L)
                                     : INFINITY;
        const bool ok = err <= kAgreement;
        if (ok) {
            ++passed;
            worst = std::max(worst, err);
        } else {
            failures.push_back(seed);
        }
        results.push_back({{"seed", seed},
                           {"n", inst.polygon.n()},
                           {"R", R},
                           {"L", L},
                           {"found", res.found},
                           {"r", res.circumradius},
                           {"ell", res.center_distance},
                           {"error", res.found ? Json(err) : Json(nullptr)},
                           {"pass", ok}});
    }
    return Json{{"command", "verify"},
                {"instances", count},
                {"passed", passed},
                {"failed", count - passed},
                {"tolerance", kAgreement},
                {"max_error_passing", worst},
                {"failures", failures},
                {"results", results}};
}

std::string render_svg(const std::string& scene, const JobRequest& req) {
    require_object(req.payload);
    SvgScene svg;
    if (scene == "dual") {
        const Placement pl = placement(req);
        const std::size_t anchor = anchor_of(req, pl.polygon.n());
        const DualPolygonPair pair = construct_dual(pl.polygon, pl.point, direction_of(req), req.tol, anchor);
        const auto av = vertices(pl.polygon);
        svg.add_circle(pl.polygon.center(), pl.polygon.circumradius(), "circumcircle");
        svg.add_circle(pair.b_polygon.center(), pair.b_polygon.circumradius(), "circumcircle");
        svg.add_circle(pl.point, distance(pl.point, av[anchor]), "auxiliary");
        svg.add_polygon(av, "primary", "A");
        svg.add_polygon(vertices(pair.b_polygon), "dual", "B");
        if (read_bool(req.payload, "mirror").value_or(false)) {
            svg.add_polygon(vertices(pair.c_polygon), "mirror", "C");
        }
        for (Point2 v : av) svg.add_segment(pl.point, v, "distance");
        svg.add_point(pl.point, "M");
    } else if (scene == "two-points") {
        const auto [pa, pb] = read_polygon_pair(req);
        const TwoPointsSolution sol = two_points(pa, pb, req.tol);
        svg.add_circle(pb.center(), pa.circumradius(), "locus");
        svg.add_circle(pa.center(), pb.circumradius(), "locus");
        svg.add_polygon(vertices(pa), "primary", "A");
        svg.add_polygon(vertices(pb), "dual", "B");
        svg.add_point(sol.m1, "M1");
        if (sol.m2) svg.add_point(*sol.m2, "M2");
    } else if (scene == "pompeiu") {
        const auto [d1, d2, d3] = read_triple(req);
        const TrianglePair tp = construct_both_triangles(d1, d2, d3);
        const std::vector<Point2> big(tp.larger.begin(), tp.larger.end());
        const std::vector<Point2> small(tp.smaller.begin(), tp.smaller.end());
        svg.add_polygon(big, "primary", "A");
        svg.add_polygon(small, "dual", "B");
        for (Point2 v : big) svg.add_segment(tp.point, v, "distance");
        for (Point2 v : small) svg.add_segment(tp.point, v, "distance");
        svg.add_point(tp.point, "M");
    } else {
        throw SchemaError("unknown scene \"" + scene + "\" (expected dual, two-points or pompeiu)");
    }
    return svg.render();
}

}  // namespace polydual::cli::detail
