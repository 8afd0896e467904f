#include "insp/inspection.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace insp {

namespace {
constexpr double kPi = std::numbers::pi;
}

double support_at(const Curve3& curve, const Vec3& c, const Vec3& u) {
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec3& v : curve.points()) best = std::fmax(best, dot(v - c, u));
    return best;
}

double min_curve_distance(const Curve3& curve, const Vec3& c) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < curve.edge_count(); ++i) {
        auto [a, b] = curve.edge(i);
        Vec3 d = b - a;
        double s = dot(c - a, d) / norm2(d);
        s = std::fmin(1.0, std::fmax(0.0, s));
        best = std::fmin(best, norm(a + d * s - c));
    }
    return best;
}

InspectionReport check_inspects(const Curve3& curve, std::span<const Vec3> directions, double tol) {
    InspectionReport rep;
    rep.samples = directions.size();
    rep.tol = tol;
    rep.min_support = std::numeric_limits<double>::infinity();
    for (const Vec3& u : directions) {
        double s = support_at(curve, {0, 0, 0}, u);
        rep.min_support = std::fmin(rep.min_support, s);
        if (s < 1.0 - tol) rep.uncovered_directions++;
    }
    rep.inspects = rep.min_support >= 1.0 - tol;
    return rep;
}

InspectionReport check_inspects(const Curve3& curve, const DirectionSampler& sampler, double tol) {
    auto dirs = sample_directions(sampler);
    InspectionReport rep = check_inspects(curve, dirs, tol);
    rep.seed = sampler.seed;
    rep.scheme = sampler.scheme;
    return rep;
}

double inradius_at_center(const Curve3& curve, const Vec3& c, const DirectionSampler& sampler) {
    auto dirs = sample_directions(sampler);
    double support_min = std::numeric_limits<double>::infinity();
    for (const Vec3& u : dirs) support_min = std::fmin(support_min, support_at(curve, c, u));
    return std::fmax(0.0, std::fmin(min_curve_distance(curve, c), support_min));
}

Vec3 refine_inradius_center(const Curve3& curve, const Vec3& c, const DirectionSampler& sampler) {
    Vec3 best = c;
    double best_val = inradius_at_center(curve, best, sampler);
    double step = 0.1;
    for (int round = 0; round < 20; ++round) {
        bool improved = false;
        for (const Vec3& axis : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}) {
            for (double sgn : {+1.0, -1.0}) {
                Vec3 cand = best + axis * (sgn * step);
                double val = inradius_at_center(curve, cand, sampler);
                if (val > best_val) {
                    best_val = val;
                    best = cand;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

Vec3 seam_point(double t) {
    int arc = int(t) % 4;
    double s = (t - int(t)) * kPi;
    switch (arc) {
        case 0: return {std::cos(s), std::sin(s), 1.0};
        case 1: return {-1.0, -std::sin(s), std::cos(s)};
        case 2: return {-std::cos(s), std::sin(s), -1.0};
        default: return {1.0, -std::sin(s), -std::cos(s)};
    }
}

Vec3 seam_tangent(double t) {
    int arc = int(t) % 4;
    double s = (t - int(t)) * kPi;
    switch (arc) {
        case 0: return {-std::sin(s), std::cos(s), 0.0};
        case 1: return {0.0, -std::cos(s), -std::sin(s)};
        case 2: return {std::sin(s), std::cos(s), 0.0};
        default: return {0.0, -std::cos(s), std::sin(s)};
    }
}

Curve3 baseball_seam(const SeamSpec& spec) {
    if (spec.segments_per_arc < 2) throw std::invalid_argument("baseball_seam: need >= 2 segments per arc");
    if (!(spec.scale > 0)) throw std::invalid_argument("baseball_seam: scale must be positive");
    std::vector<Vec3> pts;
    pts.reserve(4 * spec.segments_per_arc);
    for (int arc = 0; arc < 4; ++arc)
        for (std::size_t k = 0; k < spec.segments_per_arc; ++k)
            pts.push_back(seam_point(arc + double(k) / double(spec.segments_per_arc)) * spec.scale);
    return Curve3(std::move(pts), /*closed=*/true);
}

Curve3 octahedron_tour(double scale) {
    if (!(scale > 0)) throw std::invalid_argument("octahedron_tour: scale must be positive");
    std::vector<Vec3> pts = {{scale, 0, 0}, {0, scale, 0},  {0, 0, scale},
                             {-scale, 0, 0}, {0, -scale, 0}, {0, 0, -scale}};
    return Curve3(std::move(pts), /*closed=*/true);
}

}  // namespace insp
