#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "insp/curve.hpp"
#include "insp/vec.hpp"

namespace insp {

// Planar image of a space curve under unrolling of the cone over it: equal
// vertex heights, equal edge lengths, polar angle accumulating the per-edge
// geodesic angle between consecutive normalized vertices. For closed input
// the planar curve is open with the start vertex repeated at the final angle.
struct UnfoldingResult {
    Curve2 planar;
    double cone_angle_total = 0;
    double length_error = 0;  // |L(planar) - L(original)|
    double height_error = 0;  // max vertexwise height discrepancy
};

UnfoldingResult unfold(const Curve3& curve);

// Maximal monotone-height sub-polyline, oriented rising. Pieces from falling
// runs are stored re-indexed and flagged reversed. A single-point piece stands
// for the zero-length degenerate case.
struct SpiralPiece {
    std::vector<Vec2> points;
    double r = 0;  // start height
    double R = 0;  // end height
    double orthogonal_start_defect = 0;  // |pi/2 - alpha| at the start vertex
    double convexity_defect = 0;         // worst local violation of convexity toward o, radians
    double t0 = 0, t1 = 0;               // parameter range in the (shifted) source curve
    bool reversed = false;

    double length() const;
};

struct SpiralTolerances {
    double plateau = 1e-9;     // vertex heights equal within this merge into flat runs
    double min_height = 1e-6;  // heights may fall below 1 by at most this
};

struct SpiralDecomposition {
    std::vector<SpiralPiece> pieces;
    double flat_set_length = 0;
    std::vector<bool> orientation_flips;
    double parameter_shift = 0;  // applied so a global height minimum starts the curve
};

// Splits at local minima of the vertex-height sequence and at plateau
// boundaries; rising and falling runs become pieces, plateaus join the flat
// set. Closed curves are first shifted so a global minimum is the start.
SpiralDecomposition decompose_spirals(const Curve2& curve, const SpiralTolerances& tol = {});

// Efficiency of the piece by quadrature of the instantaneous efficiency over
// its (height, alpha) profile; degenerate pieces use the constant-height value
// 4 sqrt(r^2-1) / r^2.
double spiral_efficiency(const SpiralPiece& piece);

struct SpiralAngleBoundReport {
    bool holds = false;
    double worst_margin = 0;  // min over edges of sin(alpha) - r/h
    std::size_t worst_edge = 0;
};

// Per-edge check of sin(alpha) >= r / h. Along one edge h sin(alpha) is the
// edge line's distance to the origin, so the margin is tightest at the edge
// start.
SpiralAngleBoundReport check_spiral_angle_bound(const SpiralPiece& piece, double tol = 1e-9);

struct WeightInequalityReport {
    bool holds = false;
    double lhs = 0;  // sum of per-edge horizons
    double rhs = 0;  // integral of weight x radial efficiency over [r, R]
    double weight_integral = 0;
    double length = 0;
    double min_weight = 0;
    double weight_lower_bound = 0;  // r / sqrt(R^2 - r^2)
    bool pedal_monotone = false;    // per-edge line distances nondecreasing
    std::vector<double> pedal_heights;
};

// Checks H(piece) <= integral over [r, R] of w(h) E(h) dh, with the weight
// assembled edge by edge from the lifted-family construction: on the band
// between consecutive pedal heights, w(h) = h / sqrt(|p_edge_end|^2 - h^2).
WeightInequalityReport check_weight_inequality(const SpiralPiece& piece, int n_levels = 32);

// Radial lifting of a one-edge piece: start raised to (1+t) |p0|, endpoint
// fixed. The horizon of the lifted edge strictly grows with t.
std::pair<Vec2, Vec2> lift_one_edge(const Vec2& p0, const Vec2& p1, double t);

// Worst violation, over interior vertices, of local convexity toward the
// origin: positive when no support line through the vertex keeps both
// neighbors and the origin on one side.
double convexity_defect(const std::vector<Vec2>& pts);

}  // namespace insp
