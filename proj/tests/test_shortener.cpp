#include <doctest.h>

#include <cmath>
#include <numbers>

#include "insp/curve.hpp"
#include "insp/inspection.hpp"
#include "insp/shorten.hpp"
#include "insp/unfolding.hpp"

using namespace insp;
namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

TEST_CASE("shorten: infeasible start is rejected") {
    std::vector<Vec3> pts;
    for (int i = 0; i < 32; ++i) {
        double t = 2 * kPi * i / 32;
        pts.emplace_back(kSqrt2 * std::cos(t), kSqrt2 * std::sin(t), 0.0);
    }
    CHECK_THROWS_AS(shorten(Curve3(pts, true), {}), std::domain_error);
    ShortenConfig bad;
    bad.shrink_factor = 1.5;
    CHECK_THROWS_AS(shorten(baseball_seam({16, 1.3}), bad), std::invalid_argument);
}

TEST_CASE("shorten: starting at the fine seam changes almost nothing") {
    Curve3 seam = baseball_seam({128, 1.0});
    ShortenConfig cfg;
    cfg.max_iters = 200;
    cfg.inspect_samples = 10000;
    ShortenTrace t = shorten(seam, cfg);
    CHECK(t.accepted_steps <= 2);
    CHECK(std::fabs(t.final_curve.length() - seam.length()) / seam.length() < 1e-3);
}

TEST_CASE("shorten: octahedron start descends toward the bound and stays monotone") {
    Curve3 tour = resample_constant_speed(octahedron_tour(2.0), 64);
    ShortenConfig cfg;
    ShortenTrace t = shorten(tour, cfg);
    double final_len = t.final_curve.length();
    CHECK(final_len >= 4 * kPi * (1 - 1e-3));
    CHECK(final_len <= 4 * kPi * 1.2);
    double prev = std::numeric_limits<double>::infinity();
    for (const ShortenRecord& r : t.records) {
        if (!r.feasible) continue;
        CHECK(r.length <= prev + 1e-12);
        prev = r.length;
        CHECK(r.length >= 4 * kPi * (1 - 1e-3));
    }
}

TEST_CASE("shorten: deterministic traces") {
    Curve3 tour = resample_constant_speed(octahedron_tour(2.0), 32);
    ShortenConfig cfg;
    cfg.max_iters = 300;
    ShortenTrace a = shorten(tour, cfg);
    ShortenTrace b = shorten(tour, cfg);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].length == b.records[i].length);
        CHECK(a.records[i].step == b.records[i].step);
        CHECK(a.records[i].feasible == b.records[i].feasible);
    }
    for (std::size_t i = 0; i < a.final_curve.size(); ++i)
        CHECK(a.final_curve.points()[i] == b.final_curve.points()[i]);
}

TEST_CASE("shorten: scaled seam start lands near the minimizer") {
    Curve3 start = scaled(baseball_seam({16, 1.0}), 1.3);
    ShortenConfig cfg;
    ShortenTrace t = shorten(start, cfg);
    double final_len = t.final_curve.length();
    CHECK(final_len >= 4 * kPi * (1 - 1e-3));
    CHECK(final_len <= 4 * kPi * 1.01);
    std::size_t near = 0;
    for (const Vec3& p : t.final_curve.points()) near += std::fabs(norm(p) - kSqrt2) < 0.05;
    CHECK(double(near) / double(t.final_curve.size()) >= 0.9);

    // unfolded optimizer output decomposes into near-orthogonal spirals
    SpiralTolerances tol;
    tol.min_height = 0.02;
    SpiralDecomposition dec = decompose_spirals(unfold(t.final_curve).planar, tol);
    for (const SpiralPiece& p : dec.pieces)
        if (p.length() > 0.3) CHECK(p.orthogonal_start_defect < 0.05);
}

TEST_CASE("diagnose") {
    DiagnoseReport seam = diagnose(baseball_seam({128, 1.0}), 300000, 77);
    CHECK(std::fabs(seam.efficiency_mc - 2.0) <= 3 * seam.horizon.standard_error / seam.length);
    CHECK(seam.length_over_4pi == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(seam.min_support > 1.0 - 1e-4);  // inscribed vertices sit just inside
    CHECK(seam.efficiency_bound_ok);

    DiagnoseReport octa = diagnose(resample_constant_speed(octahedron_tour(2.0), 48), 300000, 78);
    CHECK(octa.efficiency_mc < 2.0);
    CHECK(octa.length_over_4pi > 1.0);

    std::vector<Vec3> pts;
    for (int i = 0; i < 128; ++i) {
        double t = 2 * kPi * i / 128;
        pts.emplace_back(kSqrt2 * std::cos(t), kSqrt2 * std::sin(t), 0.0);
    }
    DiagnoseReport circle = diagnose(Curve3(pts, true), 300000, 79);
    CHECK(!circle.inspects);
    CHECK(std::fabs(circle.efficiency_quadrature - 2.0) < 1e-3);
}
