#include "insp/oracles.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "insp/horizon_analytic.hpp"
#include "insp/quadrature.hpp"

namespace insp {

double efficiency_by_F_quadrature(double h, double alpha, double abs_tol) {
    constexpr double two_pi = 2 * std::numbers::pi;
    auto f = [&](double theta) { return std::fabs(integrand_F(h, alpha, theta)); };
    // F(theta) = a cos(theta) + b; its roots bound the sign regions.
    double hh = std::fmax(h, 1.0);
    double a = std::sqrt(hh * hh - 1.0) * std::sin(alpha) / (hh * hh);
    double b = std::cos(alpha) / (hh * hh);
    std::vector<double> breaks;
    if (a > 0 && std::fabs(b) <= a) {
        double root = std::acos(-b / a);
        breaks = {root, two_pi - root};
    }
    return integrate_adaptive_breaks(f, 0.0, two_pi, breaks, abs_tol, 44);
}

}  // namespace insp
