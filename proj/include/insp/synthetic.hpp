#pragma once

#include <cstdint>
#include <random>

#include "insp/curve.hpp"
#include "insp/vec.hpp"

namespace insp {

// Deterministic generators for test and verification inputs.

// Uniformly random rotation applied to every point of the curve.
Vec3 random_unit_vector(std::mt19937_64& rng);
Curve3 random_rotation(const Curve3& curve, std::mt19937_64& rng);

// Closed random Fourier loop, rescaled so every edge line keeps distance
// >= min_line_distance from the origin.
Curve3 random_feasible_curve(std::uint64_t seed, std::size_t n_vertices = 48,
                             double min_line_distance = 1.02);

// Strictly rising polygonal spiral with an exact orthogonal start: left turns
// keep it locally convex toward the origin. Start height in [1.02, 2].
std::vector<Vec2> random_polygonal_spiral(std::uint64_t seed, std::size_t max_edges = 6);

}  // namespace insp
