#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace insp {

// Gauss(7)-Kronrod(15) pair on [a, b]; err is the usual scaled difference.
template <class Func>
double quad_g7k15(const Func& f, double a, double b, double& err) {
    static const double nw[8][3] = {
        {0.000000000000000, 0.417959183673469, 0.209482141084728},
        {0.405845151377397, 0.381830050505119, 0.190350578064785},
        {0.741531185599394, 0.279705391489277, 0.140653259715525},
        {0.949107912342759, 0.129484966168870, 0.063092092629979},
        {0.207784955007898, 0.0, 0.204432940075298},
        {0.586087235467691, 0.0, 0.169004726639267},
        {0.864864423359769, 0.0, 0.104790010322250},
        {0.991455371120813, 0.0, 0.022935322010529},
    };
    const double x0 = 0.5 * (a + b);
    const double m = b - x0;
    double y0 = f(x0);
    double g7 = nw[0][1] * y0;
    double k15 = nw[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        double mx = m * nw[i][0];
        double yi = f(x0 + mx) + f(x0 - mx);
        g7 += nw[i][1] * yi;
        k15 += nw[i][2] * yi;
    }
    g7 *= m;
    k15 *= m;
    err = std::pow(200.0 * std::fabs(g7 - k15), 1.5);
    return k15;
}

// Adaptive bisection driven by the G7-K15 error estimate. The domain is first
// cut into initial_panels so narrow features cannot slip between the nodes of
// a single wide panel and fool the estimator.
template <class Func>
double integrate_adaptive(const Func& f, double a, double b, double abs_tol = 1e-12,
                          int max_depth = 40, int initial_panels = 8) {
    struct Interval {
        double a, b;
        int depth;
    };
    std::vector<Interval> stack;
    for (int i = 0; i < initial_panels; ++i) {
        double x0 = a + (b - a) * i / initial_panels;
        double x1 = a + (b - a) * (i + 1) / initial_panels;
        stack.push_back({x0, x1, 0});
    }
    double sum = 0;
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        double err;
        double s = quad_g7k15(f, iv.a, iv.b, err);
        double local_tol = abs_tol * (iv.b - iv.a) / (b - a);
        if (err <= local_tol || iv.depth >= max_depth) {
            sum += s;
            continue;
        }
        double mid = 0.5 * (iv.a + iv.b);
        stack.push_back({iv.a, mid, iv.depth + 1});
        stack.push_back({mid, iv.b, iv.depth + 1});
    }
    return sum;
}

// Adaptive integration with mandatory subdivision at the given breakpoints
// (typically kinks of |.|-style integrands).
template <class Func>
double integrate_adaptive_breaks(const Func& f, double a, double b, std::vector<double> breaks,
                                 double abs_tol = 1e-12, int max_depth = 40) {
    breaks.erase(std::remove_if(breaks.begin(), breaks.end(),
                                [&](double x) { return !(x > a && x < b); }),
                 breaks.end());
    breaks.push_back(a);
    breaks.push_back(b);
    std::sort(breaks.begin(), breaks.end());
    double sum = 0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] - breaks[i] < 1e-15) continue;
        double piece_tol = abs_tol * (breaks[i + 1] - breaks[i]) / (b - a);
        sum += integrate_adaptive(f, breaks[i], breaks[i + 1], piece_tol, max_depth, 4);
    }
    return sum;
}

// 16-point Gauss-Legendre nodes and weights on [-1, 1].
struct Gauss16 {
    static constexpr std::array<double, 8> x = {
        0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
        0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
    static constexpr std::array<double, 8> w = {
        0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
        0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};
};

template <class Func>
double integrate_gauss16(const Func& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0;
    for (int i = 0; i < 8; ++i)
        s += Gauss16::w[i] * (f(c + h * Gauss16::x[i]) + f(c - h * Gauss16::x[i]));
    return s * h;
}

}  // namespace insp
