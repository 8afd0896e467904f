#include "insp/synthetic.hpp"

#include <cmath>
#include <numbers>

namespace insp {

namespace {
constexpr double kPi = std::numbers::pi;
}

Vec3 random_unit_vector(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double z = u(rng);
    double phi = kPi * (u(rng) + 1.0);
    double r = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

Curve3 random_rotation(const Curve3& curve, std::mt19937_64& rng) {
    Vec3 axis = random_unit_vector(rng);
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    double angle = u(rng);
    std::vector<Vec3> pts;
    pts.reserve(curve.size());
    for (const Vec3& p : curve.points()) pts.push_back(rotate_about(p, axis, angle));
    return Curve3(std::move(pts), curve.closed());
}

Curve3 random_feasible_curve(std::uint64_t seed, std::size_t n_vertices, double min_line_distance) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(-0.25, 0.25);
    constexpr int kModes = 3;
    double ax[kModes], bx[kModes], ay[kModes], by[kModes], az[kModes], bz[kModes];
    for (int m = 0; m < kModes; ++m) {
        ax[m] = amp(rng); bx[m] = amp(rng);
        ay[m] = amp(rng); by[m] = amp(rng);
        az[m] = amp(rng); bz[m] = amp(rng);
    }
    std::vector<Vec3> pts;
    pts.reserve(n_vertices);
    for (std::size_t i = 0; i < n_vertices; ++i) {
        double t = 2 * kPi * double(i) / double(n_vertices);
        Vec3 p{1.6 * std::cos(t), 1.6 * std::sin(t), 0.0};
        for (int m = 0; m < kModes; ++m) {
            double c = std::cos((m + 1) * t), s = std::sin((m + 1) * t);
            p = p + Vec3{ax[m] * c + bx[m] * s, ay[m] * c + by[m] * s, az[m] * c + bz[m] * s};
        }
        pts.push_back(p);
    }
    Curve3 c(std::move(pts), true);
    double worst = validate_tangent_feasibility(c, 0.0).worst_line_distance;
    if (worst < min_line_distance) c = scaled(c, min_line_distance / worst);
    return c;
}

std::vector<Vec2> random_polygonal_spiral(std::uint64_t seed, std::size_t max_edges) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ur(1.02, 2.0), ulen(0.15, 0.8), uturn(0.0, 0.5);
    std::uniform_int_distribution<std::size_t> uedges(1, max_edges);
    double r = ur(rng);
    std::size_t n_edges = uedges(rng);

    std::vector<Vec2> pts{{r, 0.0}};
    Vec2 dir{0.0, 1.0};  // orthogonal start, winding counterclockwise
    for (std::size_t i = 0; i < n_edges; ++i) {
        pts.push_back(pts.back() + dir * ulen(rng));
        // Left turns preserve convexity toward the origin; cap the turn so the
        // new direction keeps a positive outward component (height rises).
        const Vec2& p = pts.back();
        double alpha = angle_between(p, dir);
        double turn = std::fmin(uturn(rng), std::fmax(0.0, kPi / 2 - alpha - 0.02));
        dir = rotate(dir, turn);
    }
    return pts;
}

}  // namespace insp
