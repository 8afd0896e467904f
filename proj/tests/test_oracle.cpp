#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "insp/curve.hpp"
#include "insp/horizon_analytic.hpp"
#include "insp/inspection.hpp"
#include "insp/mc.hpp"
#include "insp/synthetic.hpp"

using namespace insp;
namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

Curve3 circle_xy(double radius, std::size_t n) {
    std::vector<Vec3> pts;
    for (std::size_t i = 0; i < n; ++i) {
        double t = 2 * kPi * double(i) / double(n);
        pts.emplace_back(radius * std::cos(t), radius * std::sin(t), 0.0);
    }
    return Curve3(std::move(pts), true);
}
}  // namespace

TEST_CASE("mc_horizon: vanishing curve has vanishing horizon") {
    Curve3 tiny({{2, 0, 0}, {2, 1e-6, 0}}, false);
    HorizonEstimate e = mc_horizon(tiny, DirectionSampler::uniform(100000, 5));
    CHECK(e.value < 1e-3);
}

TEST_CASE("mc_horizon: one edge matches the closed form") {
    Curve3 edge({{kSqrt2, 0, 0}, {0, kSqrt2, 0}}, false);
    HorizonEstimate e = mc_horizon(edge, DirectionSampler::uniform(1000000, 6));
    double closed = segment_horizon(SegmentHorizonInput(kSqrt2, kSqrt2, 2.0));
    CHECK(std::fabs(e.value - closed) <= 3 * e.standard_error);
}

TEST_CASE("mc_horizon: constant-height circle matches quadrature efficiency times length") {
    Curve3 c = circle_xy(kSqrt2, 256);
    HorizonEstimate e = mc_horizon(c, DirectionSampler::uniform(1000000, 7));
    double predicted = curve_efficiency_quadrature(c) * c.length();
    CHECK(std::fabs(e.value - predicted) <= 3 * e.standard_error);
}

TEST_CASE("mc_horizon: errors and reproducibility") {
    CHECK_THROWS_AS(mc_horizon(circle_xy(0.8, 16), DirectionSampler::uniform(10, 1)),
                    std::domain_error);
    Curve3 c = circle_xy(1.5, 64);
    HorizonEstimate a = mc_horizon(c, DirectionSampler::uniform(200000, 9));
    HorizonEstimate b = mc_horizon(c, DirectionSampler::uniform(200000, 9));
    CHECK(a.value == b.value);
    CHECK(a.standard_error == b.standard_error);
    CHECK(a.total_crossings == b.total_crossings);

    set_thread_count(1);
    HorizonEstimate single = mc_horizon(c, DirectionSampler::uniform(200000, 9));
    set_thread_count(0);
    CHECK(single.value == a.value);
    CHECK(single.total_crossings == a.total_crossings);
}

TEST_CASE("mc_horizon: exact additivity over partitions on a shared sample set") {
    Curve3 seam = baseball_seam({32, 1.0});
    const auto& pts = seam.points();
    std::size_t half = pts.size() / 2;
    // two open halves sharing endpoints cover all edges of the closed curve
    std::vector<Vec3> first(pts.begin(), pts.begin() + long(half) + 1);
    std::vector<Vec3> second(pts.begin() + long(half), pts.end());
    second.push_back(pts.front());
    Curve3 a(first, false), b(second, false);

    DirectionSampler s = DirectionSampler::uniform(300000, 11);
    HorizonEstimate whole = mc_horizon(seam, s);
    HorizonEstimate ha = mc_horizon(a, s);
    HorizonEstimate hb = mc_horizon(b, s);
    CHECK(whole.total_crossings == ha.total_crossings + hb.total_crossings);
    CHECK(std::fabs(whole.value - (ha.value + hb.value)) < 1e-12);
}

TEST_CASE("mc_horizon: two-edge polyline vs per-edge closed forms") {
    Vec3 p0{1.3, 0, 0}, p1{1.3, 0.9, 0}, p2{1.28, 1.7, 0.3};
    Curve3 two({p0, p1, p2}, false);
    REQUIRE(validate_tangent_feasibility(two, 1e-9).feasible);
    HorizonEstimate e = mc_horizon(two, DirectionSampler::uniform(2000000, 12));
    auto seg = [](const Vec3& a, const Vec3& b) {
        double ha = norm(a), hb = norm(b);
        return segment_horizon_formula(std::fmin(ha, hb), std::fmax(ha, hb), norm(b - a));
    };
    double closed = seg(p0, p1) + seg(p1, p2);
    CHECK(std::fabs(e.value - closed) <= 3 * e.standard_error);
}

TEST_CASE("mc_horizon: inspection curves cross every tangent plane at least twice") {
    // slight upscale keeps the discretized seam a strict inspection curve
    for (Curve3 c :
         {baseball_seam({64, 1.001}), resample_constant_speed(octahedron_tour(2.0), 48)}) {
        HorizonEstimate e = mc_horizon(c, DirectionSampler::uniform(200000, 13));
        CHECK(e.mean_crossings >= 2.0 - 3 * e.mean_crossings_se);
    }
}

TEST_CASE("mc_horizon: joint rotation leaves counts essentially fixed") {
    Curve3 c = random_feasible_curve(17);
    auto dirs = sample_directions(DirectionSampler::uniform(200000, 14));
    HorizonEstimate base = mc_horizon(c, dirs);

    std::mt19937_64 rng(15);
    Curve3 rc = random_rotation(c, rng);
    std::mt19937_64 rng2(15);
    Vec3 axis = random_unit_vector(rng2);
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    double angle = u(rng2);
    std::vector<Vec3> rdirs;
    rdirs.reserve(dirs.size());
    for (const Vec3& d : dirs) rdirs.push_back(rotate_about(d, axis, angle));
    HorizonEstimate rot = mc_horizon(rc, rdirs);
    CHECK(std::llabs(rot.total_crossings - base.total_crossings) <= 8);

    // curve-only rotation: statistically the same value
    HorizonEstimate stat = mc_horizon(rc, dirs);
    double se = std::hypot(stat.standard_error, base.standard_error);
    CHECK(std::fabs(stat.value - base.value) <= 4 * se);
}

TEST_CASE("mc_horizon: standard error shrinks like 1/sqrt(2) when samples double") {
    Curve3 c = circle_xy(1.7, 64);
    for (int trial = 0; trial < 10; ++trial) {
        HorizonEstimate a = mc_horizon(c, DirectionSampler::uniform(20000, 100 + trial));
        HorizonEstimate b = mc_horizon(c, DirectionSampler::uniform(40000, 200 + trial));
        CHECK(std::fabs(b.standard_error / a.standard_error * kSqrt2 - 1.0) < 0.2);
    }
}

TEST_CASE("mc_union_caps_area") {
    AreaEstimate one = mc_union_caps_area({Cap({0, 0, 1}, kPi / 3)},
                                          DirectionSampler::uniform(1000000, 16));
    CHECK(std::fabs(one.value - kPi) <= 3 * one.standard_error);

    AreaEstimate two = mc_union_caps_area({Cap({0, 0, 1}, kPi / 4), Cap({0, 0, -1}, kPi / 4)},
                                          DirectionSampler::uniform(1000000, 17));
    double each = cap_area(Cap({0, 0, 1}, kPi / 4));
    CHECK(std::fabs(two.value - 2 * each) <= 3 * two.standard_error);
    CHECK_THROWS_AS(mc_union_caps_area({}, DirectionSampler::uniform(10, 1)),
                    std::invalid_argument);
}

TEST_CASE("cap sweep along a segment: union and multiplicity-2 horizon") {
    // place (h0, h1, ell) = (1.3, 1.9, 1.1) and sweep 200 caps along the chord
    double h0 = 1.3, h1 = 1.9, ell = 1.1;
    Vec3 p0{h0, 0, 0};
    double cb = (h1 * h1 - h0 * h0 - ell * ell) / (2 * h0 * ell);
    Vec3 dir{cb, std::sqrt(1 - cb * cb), 0};
    Vec3 p1 = p0 + dir * ell;
    std::vector<Cap> sweep;
    for (int k = 0; k < 200; ++k) sweep.push_back(cap_from_viewpoint(p0 + dir * (ell * k / 199.0)));

    Cap c0 = cap_from_viewpoint(p0), c1 = cap_from_viewpoint(p1);
    double a0 = cap_area(c0), a1 = cap_area(c1), lens = cap_intersection_area(c0, c1);

    AreaEstimate un = mc_union_caps_area(sweep, DirectionSampler::uniform(2000000, 18));
    CHECK(std::fabs(un.value - (a0 + a1 - lens)) <= 3 * un.standard_error);

    CapPairEstimate pair = mc_cap_pair(c0, c1, DirectionSampler::uniform(2000000, 18));
    CHECK(std::fabs(pair.horizon - (a0 + a1 - 2 * lens)) <= 3 * pair.horizon_se);
    // union - horizon = intersection, on the same sample set
    CHECK(std::fabs((pair.union_area - pair.horizon) - lens) <= 3 * pair.intersection_se);
    // closed-form segment horizon agrees with the cap assembly
    CHECK(segment_horizon(SegmentHorizonInput(h0, h1, ell)) ==
          doctest::Approx(a0 + a1 - 2 * lens).epsilon(1e-9));
}

TEST_CASE("crofton_length: great circles at several radii") {
    Curve3 gc = circle_xy(1.0, 1024);
    for (double rho : {kPi / 2, kPi / 4}) {
        CroftonEstimate e = crofton_length(gc, rho, DirectionSampler::uniform(400000, 19));
        CHECK(std::fabs(e.length - 2 * kPi) <= 3 * e.standard_error);
    }
    CHECK_THROWS_AS(crofton_length(circle_xy(1.5, 64), kPi / 4, DirectionSampler::uniform(10, 1)),
                    std::domain_error);
    CHECK_THROWS_AS(crofton_length(gc, 0.0, DirectionSampler::uniform(10, 1)),
                    std::invalid_argument);
}

TEST_CASE("crofton_length: normalized seam has length 4pi/sqrt2 and crossing count 2") {
    Curve3 seam = baseball_seam({256, 1.0 / kSqrt2});
    CroftonEstimate e = crofton_length(seam, kPi / 4, DirectionSampler::uniform(400000, 20));
    CHECK(std::fabs(e.length - 4 * kPi / kSqrt2) <= 3 * e.standard_error);
    CHECK(std::fabs(e.mean_crossings - 2.0) <= 3 * e.mean_crossings_se);
}
