#include "insp/horizon_analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "insp/quadrature.hpp"
#include "insp/spherical.hpp"

namespace insp {

namespace {
constexpr double kPi = std::numbers::pi;
// Width of the analytic branch taken when an endpoint sits on the sphere.
constexpr double kUnitHeightBranch = 1e-9;

double hard_clamp(double x) { return std::fmin(1.0, std::fmax(-1.0, x)); }
}  // namespace

bool in_omega(double h, double alpha, double tol) {
    if (!(h >= 1.0 - tol)) return false;
    if (alpha < -tol || alpha > kPi / 2 + tol) return false;
    return std::sin(alpha) >= 1.0 / std::fmax(h, 1.0) - tol;
}

PhasePoint::PhasePoint(double h_, double alpha_) : h(h_), alpha(alpha_) {
    if (!(h >= 1.0 - 1e-9)) throw std::invalid_argument("PhasePoint: height below 1");
    if (!(alpha >= -1e-12 && alpha <= kPi + 1e-12))
        throw std::invalid_argument("PhasePoint: alpha outside [0, pi]");
}

double integrand_F(double h, double alpha, double theta) {
    if (h < 1.0 - 1e-9) throw std::domain_error("integrand_F: height below 1");
    h = std::fmax(h, 1.0);
    return (std::sqrt(h * h - 1.0) * std::sin(alpha) * std::cos(theta) + std::cos(alpha)) / (h * h);
}

double theta_zero(const PhasePoint& p) {
    if (!in_omega(p.h, p.alpha)) throw std::domain_error("theta_zero: point outside Omega");
    if (p.h <= 1.0 + 1e-12) throw std::domain_error("theta_zero: undefined at height 1");
    double arg = -1.0 / (std::tan(p.alpha) * std::sqrt(p.h * p.h - 1.0));
    return std::acos(hard_clamp(arg));
}

double radial_efficiency(double h) {
    if (h < 1.0 - 1e-9) throw std::domain_error("radial_efficiency: height below 1");
    h = std::fmax(h, 1.0);
    return 4.0 * std::sqrt(h * h - 1.0) / (h * h);
}

double instantaneous_efficiency(const PhasePoint& p) {
    if (!in_omega(p.h, p.alpha)) throw std::domain_error("instantaneous_efficiency: point outside Omega");
    double h = std::fmax(p.h, 1.0);
    double a = std::fmin(p.alpha, kPi / 2);
    if (a >= kPi / 2 - 1e-12) return radial_efficiency(h);
    // Here sin(a) >= 1/h with a < pi/2 forces h > 1.
    double sa = std::sin(a), ca = std::cos(a);
    double root = std::sqrt(std::fmax(0.0, h * h * sa * sa - 1.0));
    double arg = hard_clamp((ca / sa) / std::sqrt(h * h - 1.0));
    return 4.0 / (h * h) * (root + ca * std::asin(arg));
}

double efficiency_at(double h, double alpha) {
    if (h < 1.0 - 1e-9) throw std::domain_error("efficiency_at: height below 1");
    h = std::fmax(h, 1.0);
    double folded = std::fmin(alpha, kPi - alpha);  // |F| integral is symmetric in alpha -> pi - alpha
    if (in_omega(h, folded)) return instantaneous_efficiency(PhasePoint(h, folded));
    // Tangent line enters the unit ball: F keeps one sign, integrate |F| directly.
    auto f = [&](double theta) { return std::fabs(integrand_F(h, alpha, theta)); };
    return integrate_adaptive(f, 0.0, 2.0 * kPi, 1e-12, 48);
}

double efficiency_of_height_alpha_profile(
    const std::vector<std::pair<double, PhasePoint>>& profile) {
    if (profile.empty()) throw std::invalid_argument("efficiency profile: empty");
    double wsum = 0;
    for (const auto& [w, p] : profile) {
        if (!(w > 0)) throw std::invalid_argument("efficiency profile: weights must be positive");
        wsum += w;
    }
    if (std::fabs(wsum - 1.0) > 1e-9)
        throw std::invalid_argument("efficiency profile: weights must sum to 1");
    double e = 0;
    for (const auto& [w, p] : profile) e += w * efficiency_at(p.h, p.alpha);
    return e;
}

template <class V>
double curve_efficiency_quadrature(const PolyCurve<V>& c) {
    double total = 0;
    for (std::size_t i = 0; i < c.edge_count(); ++i) {
        auto [a, b] = c.edge(i);
        double ell = c.edge_length(i);
        V dir = (b - a) / ell;
        double u0 = dot(a, dir);
        double d = std::sqrt(std::fmax(0.0, norm2(a) - u0 * u0));
        auto f = [&](double s) {
            double u = u0 + s;
            return efficiency_at(std::sqrt(d * d + u * u), std::atan2(d, u));
        };
        total += integrate_adaptive(f, 0.0, ell, 1e-11, 36);
    }
    return total / c.length();
}

template double curve_efficiency_quadrature<Vec3>(const PolyCurve<Vec3>&);
template double curve_efficiency_quadrature<Vec2>(const PolyCurve<Vec2>&);

SegmentHorizonInput::SegmentHorizonInput(double h0_, double h1_, double ell_)
    : h0(h0_), h1(h1_), ell(ell_) {
    if (!(h0 >= 1.0 - 1e-9)) throw std::invalid_argument("segment: h0 below 1");
    if (!(h1 >= h0)) throw std::invalid_argument("segment: requires h1 >= h0");
    if (!(ell > 0)) throw std::invalid_argument("segment: requires ell > 0");
    if (h1 - h0 > ell + 1e-12 || ell > h0 + h1 + 1e-12)
        throw std::invalid_argument("segment: (h0, h1, ell) violate the triangle inequality");
    // Altitude of the (o, p0, p1) triangle onto the chord, by Heron's formula.
    double s = 0.5 * (h0 + h1 + ell);
    double area2 = std::fmax(0.0, s * (s - h0) * (s - h1) * (s - ell));
    double altitude = 2.0 * std::sqrt(area2) / ell;
    if (altitude < 1.0 - 1e-9)
        throw std::invalid_argument("segment: chord line passes within distance 1 of the origin");
}

double segment_horizon_formula(double h0, double h1, double ell) {
    if (h0 < 1.0 - 1e-9 || h1 < 1.0 - 1e-9) throw std::domain_error("segment horizon: height below 1");
    h0 = std::fmax(h0, 1.0);
    h1 = std::fmax(h1, 1.0);
    bool lo0 = h0 <= 1.0 + kUnitHeightBranch;
    bool lo1 = h1 <= 1.0 + kUnitHeightBranch;
    if (lo0 && lo1) return 0.0;
    // An endpoint on the sphere has a degenerate horizon circle; the sweep
    // reduces to the other endpoint's full cap.
    if (lo0) return 2.0 * kPi * (1.0 - 1.0 / h1);
    if (lo1) return 2.0 * kPi * (1.0 - 1.0 / h0);

    double q0 = h0 * h0 - 1.0, q1 = h1 * h1 - 1.0;
    double heron = (std::pow(h0 + h1, 2) - ell * ell) * (ell * ell - std::pow(h1 - h0, 2));
    if (heron <= 0) throw std::domain_error("segment horizon: degenerate chord configuration");
    double t0 = std::asin(clamp_unit((h1 * h1 - h0 * h0 - ell * ell) / std::sqrt(q0 * heron))) / h0;
    double t1 = std::asin(clamp_unit((h0 * h0 - h1 * h1 - ell * ell) / std::sqrt(q1 * heron))) / h1;
    double t2 = std::acos(clamp_unit((h0 * h0 + h1 * h1 - ell * ell - 2.0) / (2.0 * std::sqrt(q0 * q1))));
    return 4.0 * (t0 + t1 + t2);
}

double segment_horizon(const SegmentHorizonInput& s) {
    return segment_horizon_formula(s.h0, s.h1, s.ell);
}

namespace {
// acos and asin evaluated from whichever of (x^2, 1-x^2) is supplied exactly
// by the caller; avoids the 1/sqrt(1-x^2) error blowup of the naive call as
// the argument approaches 1. Both inputs are clamped nonnegative.
double acos_from_squares(double x2, double comp2) {
    x2 = std::fmax(0.0, x2);
    comp2 = std::fmax(0.0, comp2);
    return x2 <= comp2 ? std::acos(std::sqrt(x2)) : std::asin(std::sqrt(comp2));
}
double asin_from_squares(double x2, double comp2) {
    return kPi / 2 - acos_from_squares(x2, comp2);
}
}  // namespace

double spiral_edge_horizon(double h0, double ell) {
    if (h0 < 1.0 - 1e-9) throw std::domain_error("spiral_edge_horizon: h0 below 1");
    if (!(ell > 0)) throw std::domain_error("spiral_edge_horizon: requires ell > 0");
    h0 = std::fmax(h0, 1.0);
    double q0 = h0 * h0 - 1.0;
    double q = q0 + ell * ell;  // h0^2 + ell^2 - 1, kept free of cancellation
    // acos(sqrt(q0/q)); complement q0/q + ell^2/q = 1 exactly.
    double acos_term = acos_from_squares(q0 / q, ell * ell / q);
    // asin(ell / (h0 sqrt(q))); complement is q0 (h0^2 + ell^2) / (h0^2 q).
    double y2 = ell * ell / (h0 * h0 * q);
    double asin_term = asin_from_squares(y2, q0 * (h0 * h0 + ell * ell) / (h0 * h0 * q));
    return 4.0 * (acos_term - asin_term / std::sqrt(h0 * h0 + ell * ell));
}

double spiral_edge_efficiency(double h0, double h1) {
    if (h0 < 1.0 - 1e-9) throw std::domain_error("spiral_edge_efficiency: h0 below 1");
    if (!(h1 > h0)) throw std::domain_error("spiral_edge_efficiency: requires h1 > h0");
    h0 = std::fmax(h0, 1.0);
    double q0 = h0 * h0 - 1.0, q1 = h1 * h1 - 1.0;
    double gap = (h1 - h0) * (h1 + h0);
    double acos_term = acos_from_squares(q0 / q1, gap / q1);
    double asin_term =
        asin_from_squares(gap / (h0 * h0 * q1), (h1 * h1 / (h0 * h0)) * (q0 / q1));
    double horizon = 4.0 * (acos_term - asin_term / h1);
    return horizon / std::sqrt(gap);
}

LiftingDerivatives lifting_derivatives(double r, double p1_norm) {
    if (r < 1.0 - 1e-12) throw std::domain_error("lifting_derivatives: r below 1");
    if (!(p1_norm > r)) throw std::domain_error("lifting_derivatives: requires |p1| > r");
    double denom = std::sqrt(p1_norm * p1_norm - r * r);
    double dL = -r / denom;
    // One-sided family at r = 1: the horizon is stationary.
    double dH = r <= 1.0 + 1e-12 ? 0.0 : -(4.0 / r) * std::sqrt(r * r - 1.0) / denom;
    return {dL, dH, 4.0 * std::sqrt(std::fmax(0.0, r * r - 1.0)) / (r * r)};
}

}  // namespace insp
