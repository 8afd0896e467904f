#pragma once

#include <utility>
#include <vector>

#include "insp/curve.hpp"
#include "insp/vec.hpp"

namespace insp {

// Point of the (height, alpha) phase space Omega: heights h >= 1 with
// arcsin(1/h) <= alpha <= pi/2, i.e. the pairs realizable by curves whose
// tangent lines avoid the open unit ball.
struct PhasePoint {
    double h;
    double alpha;

    PhasePoint(double h_, double alpha_);
};

bool in_omega(double h, double alpha, double tol = 1e-9);

// One edge of a polyline outside the unit ball, described intrinsically by the
// endpoint heights and the chord length.
struct SegmentHorizonInput {
    double h0;   // >= 1
    double h1;   // >= h0
    double ell;  // > 0

    SegmentHorizonInput(double h0_, double h1_, double ell_);
};

// Signed rate of horizon sweep: (1/h^2) (sqrt(h^2-1) sin(alpha) cos(theta) + cos(alpha)).
double integrand_F(double h, double alpha, double theta);

// Positive root of theta -> integrand_F(h, alpha, theta) on [0, pi].
double theta_zero(const PhasePoint& p);

// Closed form of the full-turn integral of |F|:
// (4/h^2) (sqrt(h^2 sin^2 a - 1) + cos(a) arcsin(cot(a) / sqrt(h^2-1))).
double instantaneous_efficiency(const PhasePoint& p);

// Constant-height specialization at alpha = pi/2: 4 sqrt(h^2-1) / h^2.
double radial_efficiency(double h);

// Full-turn integral of |F| for any alpha in [0, pi] and h >= 1: closed form
// when (h, alpha) folds into Omega, adaptive quadrature of |F| otherwise.
double efficiency_at(double h, double alpha);

// Weighted average of efficiency_at over a discrete (h, alpha) profile.
// Weights must be positive and sum to 1 (within 1e-9).
double efficiency_of_height_alpha_profile(const std::vector<std::pair<double, PhasePoint>>& profile);

// Exact efficiency H/L of a polyline with heights >= 1, by per-edge quadrature
// of the instantaneous efficiency along the arclength profile.
template <class V>
double curve_efficiency_quadrature(const PolyCurve<V>& c);

// Spherical area swept by the horizon circles of the points of one segment,
// counted with multiplicity (the two-lune region).
double segment_horizon(const SegmentHorizonInput& s);
// Same quantity as a raw symmetric function; no h0 <= h1 normalization.
double segment_horizon_formula(double h0, double h1, double ell);

// Horizon of a one-edge orthogonal-start segment: start height h0, length ell.
double spiral_edge_horizon(double h0, double ell);

// Efficiency H(h0,h1)/sqrt(h1^2-h0^2) of a one-edge orthogonal-start segment
// expressed by its endpoint heights. Requires h1 > h0.
double spiral_edge_efficiency(double h0, double h1);

struct LiftingDerivatives {
    double dL;     // d/dt of length of the lifted edge at t = 0
    double dH;     // d/dt of horizon of the lifted edge at t = 0
    double ratio;  // dH / dL = 4 sqrt(r^2-1) / r^2
};

// Derivatives at t = 0 of the family that raises the start of a one-edge
// orthogonal segment from height r to r + t while keeping the endpoint fixed
// at height p1_norm and restoring orthogonality.
LiftingDerivatives lifting_derivatives(double r, double p1_norm);

}  // namespace insp
