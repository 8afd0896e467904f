#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "insp/curve.hpp"
#include "insp/mc.hpp"
#include "insp/spherical.hpp"
#include "insp/unfolding.hpp"

namespace insp {

struct ShortenConfig {
    std::size_t max_iters = 4000;
    double step = 0.5;             // initial vertex displacement fraction toward neighbor midpoints
    double shrink_factor = 0.5;    // applied to step on rejected batches
    std::uint64_t inspect_samples = 20000;
    std::uint64_t seed = 1;
    double stop_rel_tol = 1e-7;    // on the length decrease over a 10-iteration window
};

struct ShortenRecord {
    std::size_t iter = 0;
    double length = 0;
    double step = 0;
    bool feasible = false;   // batch accepted this iteration
    double min_support = 0;  // support minimum of the current (post-iteration) curve
};

struct ShortenTrace {
    std::vector<ShortenRecord> records;
    Curve3 final_curve;
    std::size_t accepted_steps = 0;
};

// Length descent under the sampled hull constraint: every vertex is proposed
// toward the midpoint of its neighbors; the batch is kept only if the sampled
// support stays >= 1 with no tolerance credit, otherwise the step shrinks.
// The direction set is drawn once from (seed, inspect_samples) and reused, so
// identical inputs give identical traces.
ShortenTrace shorten(const Curve3& curve, const ShortenConfig& cfg);

struct DiagnoseReport {
    double length = 0;
    double length_over_4pi = 0;
    HorizonEstimate horizon;
    double efficiency_mc = 0;        // horizon / length
    double efficiency_quadrature = 0;
    bool efficiency_bound_ok = false;  // efficiency <= 2 within noise
    bool inspects = false;
    double min_support = 0;
    TangentFeasibilityReport tangent;
    std::size_t spiral_pieces = 0;
    double spiral_max_efficiency = 0;
    double flat_set_length = 0;
};

DiagnoseReport diagnose(const Curve3& curve, std::uint64_t samples, std::uint64_t seed);

}  // namespace insp
