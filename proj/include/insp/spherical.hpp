#pragma once

#include <cstdint>
#include <vector>

#include "insp/vec.hpp"

namespace insp {

// Spherical cap on the unit sphere: all directions within angular_radius of center.
struct Cap {
    Vec3 center;            // unit vector
    double angular_radius;  // radians in [0, pi/2]

    Cap(const Vec3& c, double r);

    bool contains(const Vec3& unit_dir) const { return dot(center, unit_dir) >= cos_radius_; }

  private:
    double cos_radius_;
};

// Set of directions on the sphere visible from an external viewpoint p:
// cap centered at p/|p| with angular radius arccos(1/|p|).
Cap cap_from_viewpoint(const Vec3& p);

// 4 pi sin^2(radius / 2).
double cap_area(const Cap& c);

// Exact area of the intersection of two caps, in steradians. Containment
// returns the smaller cap's area, disjoint caps return 0.
double cap_intersection_area(const Cap& c0, const Cap& c1);

struct DirectionSampler {
    enum class Scheme { fibonacci, seeded_uniform };
    Scheme scheme = Scheme::fibonacci;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;  // uniform scheme only

    static DirectionSampler fibonacci(std::uint64_t count) {
        return {Scheme::fibonacci, count, 0};
    }
    static DirectionSampler uniform(std::uint64_t count, std::uint64_t seed) {
        return {Scheme::seeded_uniform, count, seed};
    }
};

std::vector<Vec3> sample_directions(const DirectionSampler& s);

// Streaming access used by the Monte Carlo estimators: directions are produced
// in fixed-size chunks whose contents depend only on (sampler, chunk index),
// so estimates are reproducible independent of thread count.
inline constexpr std::uint64_t kDirectionChunk = 1u << 16;

std::uint64_t direction_chunk_count(const DirectionSampler& s);
// Fills buf with the directions of chunk `chunk` and returns how many are valid.
std::uint64_t direction_chunk(const DirectionSampler& s, std::uint64_t chunk,
                              std::vector<Vec3>& buf);

// Clamp to [-1, 1] when within tol; hard error beyond.
double clamp_unit(double x, double tol = 1e-9);

}  // namespace insp
