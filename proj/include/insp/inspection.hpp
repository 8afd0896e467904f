#pragma once

#include <cstdint>
#include <span>

#include "insp/curve.hpp"
#include "insp/spherical.hpp"

namespace insp {

struct InspectionReport {
    bool inspects = false;
    double min_support = 0;  // min over sampled directions of the vertex support value
    std::uint64_t uncovered_directions = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    DirectionSampler::Scheme scheme = DirectionSampler::Scheme::fibonacci;
    double tol = 0;
};

// Certifies that the unit sphere lies in the convex hull of the curve by
// sampling support directions; support of a polyline's hull is attained at
// vertices. One-sided: a pass can only overstate the hull by the sampling
// resolution carried in the report.
InspectionReport check_inspects(const Curve3& curve, const DirectionSampler& sampler, double tol);
InspectionReport check_inspects(const Curve3& curve, std::span<const Vec3> directions, double tol);

// Largest radius of a ball centered at c inside the sampled support hull and
// disjoint from the curve: min of the curve distance and the support minimum.
double inradius_at_center(const Curve3& curve, const Vec3& c, const DirectionSampler& sampler);

// Coordinate ascent on the center (20 rounds, step halving) starting from c.
Vec3 refine_inradius_center(const Curve3& curve, const Vec3& c, const DirectionSampler& sampler);

struct SeamSpec {
    std::size_t segments_per_arc = 2;  // >= 2
    double scale = 1.0;                // > 0
};

// Closed curve tracing four unit-radius semicircles in the planes z = 1,
// x = -1, z = -1, x = 1, joined with matching one-sided tangents; every point
// has height sqrt(2). Scaled by spec.scale.
Curve3 baseball_seam(const SeamSpec& spec);

// Continuum seam at parameter t in [0, 4) (arc index + fraction), scale 1.
Vec3 seam_point(double t);
// Unit tangent of the continuum seam within the arc containing t.
Vec3 seam_tangent(double t);

// Closed tour through the six vertices of the regular octahedron at the given
// vertex distance from the origin.
Curve3 octahedron_tour(double scale);

// Support value max_v <v - c, u> over curve vertices.
double support_at(const Curve3& curve, const Vec3& c, const Vec3& u);

double min_curve_distance(const Curve3& curve, const Vec3& c);

}  // namespace insp
