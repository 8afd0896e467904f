#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "insp/mc.hpp"
#include "insp/spherical.hpp"

using namespace insp;
namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

Cap random_cap(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0), ur(0.05, kPi / 2);
    Vec3 c{u(rng), u(rng), u(rng)};
    while (norm(c) < 1e-3) c = {u(rng), u(rng), u(rng)};
    return Cap(normalized(c), ur(rng));
}
}  // namespace

TEST_CASE("cap_from_viewpoint") {
    Cap c = cap_from_viewpoint({kSqrt2, 0, 0});
    CHECK(norm(c.center - Vec3{1, 0, 0}) < 1e-15);
    CHECK(c.angular_radius == doctest::Approx(kPi / 4).epsilon(1e-14));
    CHECK(cap_from_viewpoint({1, 0, 0}).angular_radius == doctest::Approx(0.0));
    CHECK(cap_from_viewpoint({2, 0, 0}).angular_radius == doctest::Approx(std::acos(0.5)));
    CHECK_THROWS_AS(cap_from_viewpoint({0.5, 0, 0}), std::domain_error);
}

TEST_CASE("cap_area") {
    CHECK(cap_area(Cap({0, 0, 1}, kPi / 2)) == doctest::Approx(2 * kPi).epsilon(1e-15));
    CHECK(cap_area(Cap({0, 0, 1}, 0.0)) == doctest::Approx(0.0));
    CHECK(cap_area(Cap({0, 0, 1}, kPi / 3)) == doctest::Approx(kPi).epsilon(1e-15));

    // Monte Carlo membership cross-check for the viewpoint-height-2 cap.
    AreaEstimate mc = mc_union_caps_area({cap_from_viewpoint({2, 0, 0})},
                                         DirectionSampler::uniform(1000000, 71));
    CHECK(std::fabs(mc.value - kPi) < 0.01 * kPi);
}

TEST_CASE("cap_intersection_area: examples") {
    Cap a({0, 0, 1}, kPi / 4);
    CHECK(cap_intersection_area(a, a) == doctest::Approx(cap_area(a)).epsilon(1e-14));
    Cap b({0, 0, -1}, kPi / 4);
    CHECK(cap_intersection_area(a, b) == doctest::Approx(0.0));

    // centers at angle pi/4, radii pi/4: Monte Carlo membership oracle
    Cap c(normalized(Vec3{std::sin(kPi / 4), 0, std::cos(kPi / 4)}), kPi / 4);
    CapPairEstimate mc = mc_cap_pair(a, c, DirectionSampler::uniform(10000000, 72));
    double lens = cap_intersection_area(a, c);
    CHECK(std::fabs(mc.intersection - lens) <= 3 * mc.intersection_se);
}

TEST_CASE("cap_intersection_area: invariants on random pairs") {
    std::mt19937_64 rng(5150);
    for (int k = 0; k < 300; ++k) {
        Cap a = random_cap(rng), b = random_cap(rng);
        double ab = cap_intersection_area(a, b);
        CHECK(ab == doctest::Approx(cap_intersection_area(b, a)).epsilon(1e-12));
        CHECK(ab <= std::fmin(cap_area(a), cap_area(b)) + 1e-12);
        CHECK(ab >= std::fmax(0.0, cap_area(a) + cap_area(b) - 4 * kPi) - 1e-12);
        CHECK(cap_area(a) + cap_area(b) - 2 * ab >= -1e-12);
    }
}

TEST_CASE("lune identity vs Monte Carlo symmetric difference") {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 3; ++k) {
        Cap a = random_cap(rng), b = random_cap(rng);
        CapPairEstimate mc = mc_cap_pair(a, b, DirectionSampler::uniform(1000000, 1000 + k));
        double lune = cap_area(a) + cap_area(b) - 2 * cap_intersection_area(a, b);
        CHECK(std::fabs(mc.horizon - lune) <= 3 * mc.horizon_se + 1e-9);
    }
}

TEST_CASE("containment and tangency branches") {
    Cap big({0, 0, 1}, 1.2);
    Cap small(normalized(Vec3{0.1, 0, 1}), 0.3);
    CHECK(cap_intersection_area(big, small) == doctest::Approx(cap_area(small)).epsilon(1e-12));
    // external tangency window
    Cap t1({0, 0, 1}, 0.5);
    Cap t2(normalized(Vec3{std::sin(1.0), 0, std::cos(1.0)}), 0.5 - 1e-9);
    CHECK(cap_intersection_area(t1, t2) == doctest::Approx(0.0));
}

TEST_CASE("clamp_unit") {
    CHECK(clamp_unit(1.0 + 1e-10) == 1.0);
    CHECK(clamp_unit(-1.0 - 1e-10) == -1.0);
    CHECK(clamp_unit(0.25) == 0.25);
    CHECK_THROWS_AS(clamp_unit(1.0 + 1e-6), std::domain_error);
}

TEST_CASE("sample_directions: determinism and unit norms") {
    auto two = sample_directions(DirectionSampler::fibonacci(2));
    auto two_again = sample_directions(DirectionSampler::fibonacci(2));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == two_again[0]);
    CHECK(two[1] == two_again[1]);
    CHECK(two[0].z > 0);
    CHECK(two[1].z < 0);

    auto some = sample_directions(DirectionSampler::uniform(5000, 77));
    auto some_again = sample_directions(DirectionSampler::uniform(5000, 77));
    for (std::size_t i = 0; i < some.size(); ++i) {
        CHECK(some[i] == some_again[i]);
        CHECK(std::fabs(norm(some[i]) - 1.0) < 1e-12);
    }
}

TEST_CASE("uniform sampler: mean direction vanishes at CLT rate") {
    auto dirs = sample_directions(DirectionSampler::uniform(1000000, 42));
    Vec3 mean{0, 0, 0};
    for (const Vec3& d : dirs) mean = mean + d;
    mean = mean / double(dirs.size());
    CHECK(norm(mean) < 0.005);
}

TEST_CASE("fibonacci 1e4 covers every cap of radius 0.1") {
    auto samples = sample_directions(DirectionSampler::fibonacci(10000));
    auto probes = sample_directions(DirectionSampler::uniform(30000, 4242));
    double worst = 0;
    for (const Vec3& p : probes) {
        double best = -2;
        for (const Vec3& s : samples) best = std::fmax(best, dot(p, s));
        worst = std::fmax(worst, std::acos(clamp_unit(best)));
    }
    // probe covering radius ~0.02 rad leaves margin against the 0.1 target
    CHECK(worst < 0.07);
}
