#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "insp/curve.hpp"
#include "insp/spherical.hpp"

namespace insp {

// Number of worker threads for the sample loops; 0 picks the hardware count.
// Estimates are bit-identical for any setting: integer statistics only.
void set_thread_count(unsigned n);
unsigned effective_thread_count();

struct HorizonEstimate {
    double value = 0;           // steradians, counted with multiplicity
    double standard_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    DirectionSampler::Scheme scheme = DirectionSampler::Scheme::fibonacci;
    std::int64_t total_crossings = 0;  // exact integer statistic behind `value`
    double mean_crossings = 0;
    double mean_crossings_se = 0;
};

// Estimates the spherical measure, with multiplicity, of tangency points whose
// tangent plane meets the polyline: for each sampled direction p, counts the
// transversal crossings of the plane <x, p> = 1 and scales the mean by 4 pi.
HorizonEstimate mc_horizon(const Curve3& curve, const DirectionSampler& sampler);
// Same estimator over an explicit direction list (counts match the sampler
// overload whenever the list equals sample_directions(sampler)).
HorizonEstimate mc_horizon(const Curve3& curve, std::span<const Vec3> directions);

struct AreaEstimate {
    double value = 0;  // steradians
    double standard_error = 0;
    std::uint64_t samples = 0;
    std::int64_t hits = 0;
};

AreaEstimate mc_union_caps_area(const std::vector<Cap>& caps, const DirectionSampler& sampler);

// Joint membership counts for two caps over one shared sample set, plus the
// derived lune-region (multiplicity two) horizon estimate A0 + A1 - 2 A(cap).
struct CapPairEstimate {
    std::uint64_t samples = 0;
    std::int64_t in0 = 0, in1 = 0, in_both = 0, in_exactly_one = 0;
    double area0 = 0, area1 = 0, intersection = 0, union_area = 0;
    double horizon = 0;           // 4 pi x mean of the exactly-one indicator
    double horizon_se = 0;
    double union_se = 0;
    double intersection_se = 0;
};

CapPairEstimate mc_cap_pair(const Cap& c0, const Cap& c1, const DirectionSampler& sampler);

struct CroftonEstimate {
    double length = 0;
    double standard_error = 0;
    double mean_crossings = 0;
    double mean_crossings_se = 0;
    std::uint64_t samples = 0;
    std::int64_t total_crossings = 0;
};

// Length of a spherical polyline from intersection counts with circles of
// spherical radius rho at sampled centers: L = (1 / (4 sin rho)) E_area[#].
// Vertices are normalized onto the sphere; edges are great-circle arcs.
CroftonEstimate crofton_length(const Curve3& curve, double rho, const DirectionSampler& sampler);

}  // namespace insp
