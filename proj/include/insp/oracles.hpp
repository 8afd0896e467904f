#pragma once

namespace insp {

// Independent reference values used by tests and the acceptance suite. These
// deliberately avoid the closed forms they are used to check.

// Full-turn integral of |F(h, alpha, .)| by adaptive quadrature, with
// mandatory subdivision at the sign changes of F.
double efficiency_by_F_quadrature(double h, double alpha, double abs_tol = 1e-12);

}  // namespace insp
