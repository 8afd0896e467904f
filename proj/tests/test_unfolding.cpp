#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "insp/curve.hpp"
#include "insp/horizon_analytic.hpp"
#include "insp/inspection.hpp"
#include "insp/mc.hpp"
#include "insp/synthetic.hpp"
#include "insp/unfolding.hpp"

using namespace insp;
namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

SpiralPiece piece_from_points(std::vector<Vec2> pts) {
    SpiralPiece p;
    p.points = std::move(pts);
    p.r = norm(p.points.front());
    p.R = norm(p.points.back());
    p.orthogonal_start_defect =
        std::fabs(kPi / 2 - angle_between(p.points[0], p.points[1] - p.points[0]));
    p.convexity_defect = convexity_defect(p.points);
    return p;
}
}  // namespace

TEST_CASE("unfold: curve already in a half-plane is congruent to its profile") {
    std::vector<Vec3> pts{{1.2, 0, 0.3}, {1.5, 0, 0.9}, {1.1, 0, 1.4}, {1.9, 0, 2.0}};
    Curve3 c(pts, false);
    UnfoldingResult u = unfold(c);
    REQUIRE(u.planar.size() == c.size());
    CHECK(u.length_error < 1e-12 * c.length());
    CHECK(u.height_error < 1e-13);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        double ang3 = angle_between(c.points()[i], c.points()[i + 1]);
        double ang2 = angle_between(u.planar.points()[i], u.planar.points()[i + 1]);
        CHECK(ang3 == doctest::Approx(ang2).epsilon(1e-12));
        CHECK(norm(c.points()[i + 1] - c.points()[i]) ==
              doctest::Approx(norm(u.planar.points()[i + 1] - u.planar.points()[i])).epsilon(1e-12));
    }
}

TEST_CASE("unfold: latitude circle becomes an arc with cone angle 2 pi rho / h") {
    double rho = 1.1, z = 0.9;
    double h = std::hypot(rho, z);
    std::vector<Vec3> pts;
    std::size_t n = 2000;
    for (std::size_t i = 0; i < n; ++i) {
        double t = 2 * kPi * double(i) / double(n);
        pts.emplace_back(rho * std::cos(t), rho * std::sin(t), z);
    }
    UnfoldingResult u = unfold(Curve3(pts, true));
    CHECK(u.cone_angle_total == doctest::Approx(2 * kPi * rho / h).epsilon(1e-6));
    for (const Vec2& p : u.planar.points()) CHECK(norm(p) == doctest::Approx(h).epsilon(1e-14));
}

TEST_CASE("unfold errors on curves through the origin") {
    CHECK_THROWS_AS(unfold(Curve3({{0, 0, 0}, {1, 0, 0}}, false)), std::domain_error);
}

TEST_CASE("unfolding preserves the efficiency functional") {
    for (std::uint64_t seed : {40ull, 41ull, 42ull}) {
        Curve3 c = random_feasible_curve(seed);
        UnfoldingResult u = unfold(c);
        double max_h = 0;
        for (const Vec3& p : c.points()) max_h = std::fmax(max_h, norm(p));
        CHECK(u.length_error <= 1e-9 * c.length());
        CHECK(u.height_error <= 1e-12 * max_h);
        CHECK(std::fabs(curve_efficiency_quadrature(c) - curve_efficiency_quadrature(u.planar)) <
              1e-10);
    }
}

TEST_CASE("unfolded seam keeps the Monte Carlo efficiency of the seam") {
    Curve3 seam = baseball_seam({128, 1.0});
    UnfoldingResult u = unfold(seam);
    HorizonEstimate e = mc_horizon(seam, DirectionSampler::uniform(500000, 51));
    double quad = curve_efficiency_quadrature(u.planar);
    CHECK(std::fabs(e.value / seam.length() - quad) <= 3 * e.standard_error / seam.length());
}

TEST_CASE("decompose: constant-height circle is all flat set") {
    std::vector<Vec2> pts;
    for (int i = 0; i < 64; ++i) {
        double t = 2 * kPi * i / 64;
        pts.emplace_back(kSqrt2 * std::cos(t), kSqrt2 * std::sin(t));
    }
    Curve2 c(pts, true);
    SpiralDecomposition d = decompose_spirals(c);
    CHECK(d.pieces.empty());
    CHECK(d.flat_set_length == doctest::Approx(c.length()).epsilon(1e-12));
}

TEST_CASE("decompose: one-edge orthogonal start gives one piece with zero defect") {
    Curve2 c({{kSqrt2, 0}, {kSqrt2, 1.5}}, false);
    SpiralDecomposition d = decompose_spirals(c);
    REQUIRE(d.pieces.size() == 1);
    CHECK(d.pieces[0].orthogonal_start_defect < 1e-12);
    CHECK(d.pieces[0].r == doctest::Approx(kSqrt2));
    CHECK(d.pieces[0].R == doctest::Approx(std::hypot(kSqrt2, 1.5)));
    CHECK(!d.pieces[0].reversed);
    CHECK(d.flat_set_length == 0.0);
}

TEST_CASE("decompose: partition covers the parameter domain; falling runs reversed") {
    for (std::uint64_t seed : {60ull, 61ull, 62ull}) {
        Curve3 c = random_feasible_curve(seed);
        Curve2 planar = unfold(c).planar;
        SpiralDecomposition d = decompose_spirals(planar);
        double total = d.flat_set_length;
        for (const SpiralPiece& p : d.pieces) {
            total += p.length();
            CHECK(p.R >= p.r - 1e-12);
            // vertex heights rise along the stored orientation
            for (std::size_t i = 0; i + 1 < p.points.size(); ++i)
                CHECK(norm(p.points[i + 1]) >= norm(p.points[i]) - 1e-9);
        }
        CHECK(total == doctest::Approx(planar.length()).epsilon(1e-9));
        CHECK(d.orientation_flips.size() == d.pieces.size());
    }
}

TEST_CASE("decompose rejects curves dipping into the ball") {
    Curve2 bad({{0.5, 0}, {1.5, 0.1}}, false);
    CHECK_THROWS_AS(decompose_spirals(bad), std::domain_error);
}

TEST_CASE("spiral efficiency") {
    // near the maximizer: slightly below 2
    SpiralPiece near2 = piece_from_points({{kSqrt2, 0}, {kSqrt2, 0.01}});
    double e = spiral_efficiency(near2);
    CHECK(e < 2.0);
    CHECK(e > 2.0 - 1e-3);

    // one-edge spiral from height 1 matches the closed-form edge efficiency;
    // the (h, alpha) representation limits agreement to ~sqrt(eps) at the
    // tangency boundary h sin(alpha) = 1
    SpiralPiece from1 = piece_from_points({{1, 0}, {1, 1}});
    CHECK(spiral_efficiency(from1) ==
          doctest::Approx(spiral_edge_efficiency(1.0, kSqrt2)).epsilon(1e-7));

    // degenerate piece: constant-height convention
    SpiralPiece degenerate;
    degenerate.points = {{1.3, 0.0}};
    degenerate.r = degenerate.R = 1.3;
    CHECK(spiral_efficiency(degenerate) == doctest::Approx(radial_efficiency(1.3)).epsilon(1e-14));

    // bound holds on random generated spirals
    for (int k = 0; k < 20; ++k) {
        SpiralPiece p = piece_from_points(random_polygonal_spiral(900 + k));
        CHECK(spiral_efficiency(p) <= 2.0 + 1e-6);
        CHECK(check_spiral_angle_bound(p).holds);
        CHECK(p.convexity_defect == 0.0);
    }
}

TEST_CASE("spiral angle bound") {
    SpiralPiece one_edge = piece_from_points({{1.4, 0}, {1.4, 1.0}});
    SpiralAngleBoundReport rep = check_spiral_angle_bound(one_edge);
    CHECK(rep.holds);
    CHECK(std::fabs(rep.worst_margin) < 1e-12);  // equality at the orthogonal start

    // polyline whose edges lie on tangent lines of the circle of radius r:
    // equality within discretization error at every edge
    double r = 1.3;
    std::vector<Vec2> tangent_poly;
    int n = 50;
    double dphi = (kPi / 2) / n;
    for (int k = 0; k <= n; ++k) {
        double phi = dphi * (k + 0.5);
        tangent_poly.push_back(Vec2{std::cos(phi), std::sin(phi)} * (r / std::cos(dphi / 2)));
    }
    SpiralPiece tp;
    tp.points = tangent_poly;
    tp.r = norm(tangent_poly.front());
    tp.R = norm(tangent_poly.back());
    SpiralAngleBoundReport trep = check_spiral_angle_bound(tp, 1e-2);
    CHECK(std::fabs(trep.worst_margin) < 1e-3);

    // a dip toward the origin breaks local convexity
    std::vector<Vec2> dip{{1.5, -0.5}, {1.0, 0.0}, {1.5, 0.5}};
    CHECK(convexity_defect(dip) > 0.1);
}

TEST_CASE("weight inequality on concrete spirals") {
    SpiralPiece one = piece_from_points({{1.2, 0}, {1.2, 0.8}});
    WeightInequalityReport rep = check_weight_inequality(one);
    CHECK(rep.holds);
    CHECK(rep.lhs <= rep.rhs + 1e-8);
    CHECK(rep.weight_integral == doctest::Approx(rep.length).epsilon(1e-9));
    CHECK(rep.min_weight >= rep.weight_lower_bound - 1e-9);
    CHECK(rep.pedal_monotone);

    SpiralPiece two = piece_from_points(random_polygonal_spiral(333, 2));
    WeightInequalityReport rep2 = check_weight_inequality(two);
    CHECK(rep2.holds);

    // near-constant height at sqrt2: the inequality is nearly tight, LHS/L ~ 2
    double r0 = 1.41, R0 = 1.42;
    SpiralPiece tight = piece_from_points({{r0, 0}, {r0, std::sqrt(R0 * R0 - r0 * r0)}});
    WeightInequalityReport rep3 = check_weight_inequality(tight);
    CHECK(rep3.holds);
    CHECK(std::fabs(rep3.lhs / rep3.length - 2.0) < 1e-3);

    SpiralPiece degenerate = piece_from_points({{1.3, 0}, {1.3 + 1e-15, 1e-12}});
    degenerate.R = degenerate.r;
    CHECK_THROWS_AS(check_weight_inequality(degenerate), std::invalid_argument);
}

TEST_CASE("lift_one_edge: identity, growth, monotone sweep, errors") {
    Vec2 p0{1.1, 0};
    Vec2 p1{1.1, std::sqrt(4.0 - 1.21)};  // |p1| = 2
    auto [q0, q1] = lift_one_edge(p0, p1, 0.0);
    CHECK(norm(q0 - p0) < 1e-15);
    CHECK(norm(q1 - p1) < 1e-15);

    auto horizon_of = [](const Vec2& a, const Vec2& b) {
        double ha = norm(a), hb = norm(b);
        return segment_horizon_formula(std::fmin(ha, hb), std::fmax(ha, hb), norm(b - a));
    };
    double prev = horizon_of(p0, p1);
    for (int k = 1; k <= 20; ++k) {
        auto [a, b] = lift_one_edge(p0, p1, 0.2 * k / 20.0);
        double h = horizon_of(a, b);
        CHECK(h > prev);
        prev = h;
    }
    CHECK_THROWS_AS(lift_one_edge(p0, p1, 1.0), std::domain_error);
}
