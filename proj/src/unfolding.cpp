#include "insp/unfolding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "insp/horizon_analytic.hpp"
#include "insp/quadrature.hpp"

namespace insp {

namespace {
constexpr double kPi = std::numbers::pi;
}

UnfoldingResult unfold(const Curve3& curve) {
    const auto& pts = curve.points();
    for (const Vec3& p : pts)
        if (norm2(p) == 0) throw std::domain_error("unfold: vertex at the origin");

    std::size_t n_out = pts.size() + (curve.closed() ? 1 : 0);
    std::vector<Vec2> planar;
    planar.reserve(n_out);
    double theta = 0;
    planar.emplace_back(norm(pts[0]), 0.0);
    for (std::size_t i = 1; i < n_out; ++i) {
        const Vec3& a = pts[(i - 1) % pts.size()];
        const Vec3& b = pts[i % pts.size()];
        theta += angle_between(a, b);
        double h = norm(b);
        planar.emplace_back(h * std::cos(theta), h * std::sin(theta));
    }

    UnfoldingResult r{Curve2(std::move(planar), false), theta, 0, 0};
    r.length_error = std::fabs(r.planar.length() - curve.length());
    for (std::size_t i = 0; i < r.planar.size(); ++i)
        r.height_error = std::fmax(
            r.height_error, std::fabs(norm(r.planar.points()[i]) - norm(pts[i % pts.size()])));
    return r;
}

double SpiralPiece::length() const {
    double L = 0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) L += norm(points[i + 1] - points[i]);
    return L;
}

double convexity_defect(const std::vector<Vec2>& pts) {
    double worst = 0;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        Vec2 u = pts[i - 1] - pts[i];
        Vec2 v = pts[i + 1] - pts[i];
        Vec2 w = -pts[i];
        // A support line with u, v, w on one closed side exists iff the three
        // directions fit inside some half-plane, i.e. the largest angular gap
        // between them is at least pi.
        double ang[3] = {std::atan2(u.y, u.x), std::atan2(v.y, v.x), std::atan2(w.y, w.x)};
        std::sort(ang, ang + 3);
        double g0 = ang[1] - ang[0];
        double g1 = ang[2] - ang[1];
        double g2 = 2 * kPi - (ang[2] - ang[0]);
        double max_gap = std::fmax(g0, std::fmax(g1, g2));
        worst = std::fmax(worst, kPi - max_gap);
    }
    return worst;
}

namespace {

double start_alpha_defect(const std::vector<Vec2>& pts) {
    if (pts.size() < 2) return 0;
    return std::fabs(kPi / 2 - angle_between(pts[0], pts[1] - pts[0]));
}

SpiralPiece make_piece(const std::vector<Vec2>& verts, std::size_t i, std::size_t j, double t0,
                       double t1, bool reversed) {
    SpiralPiece piece;
    piece.points.assign(verts.begin() + long(i), verts.begin() + long(j) + 1);
    if (reversed) std::reverse(piece.points.begin(), piece.points.end());
    piece.r = norm(piece.points.front());
    piece.R = norm(piece.points.back());
    piece.t0 = t0;
    piece.t1 = t1;
    piece.reversed = reversed;
    piece.orthogonal_start_defect = start_alpha_defect(piece.points);
    piece.convexity_defect = convexity_defect(piece.points);
    return piece;
}

}  // namespace

SpiralDecomposition decompose_spirals(const Curve2& curve, const SpiralTolerances& tol) {
    const std::size_t n = curve.size();
    for (const Vec2& p : curve.points())
        if (norm(p) < 1.0 - tol.min_height)
            throw std::domain_error("decompose_spirals: height below 1 beyond tolerance");

    // Linearize: closed curves are rotated so a global height minimum leads,
    // then the first vertex is appended to cover the wrap edge.
    std::vector<Vec2> verts;
    double shift = 0;
    if (curve.closed()) {
        std::size_t lo = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (norm(curve.points()[i]) < norm(curve.points()[lo])) lo = i;
        shift = curve.vertex_param(lo);
        verts.reserve(n + 1);
        for (std::size_t i = 0; i <= n; ++i) verts.push_back(curve.points()[(lo + i) % n]);
    } else {
        verts = curve.points();
    }

    std::vector<double> param(verts.size());
    param[0] = 0;
    for (std::size_t i = 1; i < verts.size(); ++i)
        param[i] = param[i - 1] + norm(verts[i] - verts[i - 1]);

    SpiralDecomposition out;
    out.parameter_shift = shift;

    auto edge_class = [&](std::size_t e) {
        double dh = norm(verts[e + 1]) - norm(verts[e]);
        if (dh > tol.plateau) return +1;
        if (dh < -tol.plateau) return -1;
        return 0;
    };

    std::size_t e = 0;
    const std::size_t n_edges = verts.size() - 1;
    while (e < n_edges) {
        int cls = edge_class(e);
        std::size_t begin = e;
        while (e < n_edges && edge_class(e) == cls) ++e;
        if (cls == 0) {
            out.flat_set_length += param[e] - param[begin];
            continue;
        }
        out.pieces.push_back(
            make_piece(verts, begin, e, param[begin], param[e], /*reversed=*/cls < 0));
    }
    out.orientation_flips.reserve(out.pieces.size());
    for (const SpiralPiece& p : out.pieces) out.orientation_flips.push_back(p.reversed);
    return out;
}

double spiral_efficiency(const SpiralPiece& piece) {
    if (piece.points.size() < 2) return radial_efficiency(std::fmax(piece.r, 1.0));
    // Composite Gauss nodes along each edge feed the discrete profile; along
    // one edge h sin(alpha) equals the edge line's pedal distance, so the
    // integrand is smooth.
    const double L = piece.length();
    std::vector<std::pair<double, PhasePoint>> profile;
    constexpr int kPanels = 4;
    profile.reserve((piece.points.size() - 1) * kPanels * 16);
    for (std::size_t i = 0; i + 1 < piece.points.size(); ++i) {
        Vec2 a = piece.points[i], b = piece.points[i + 1];
        double ell = norm(b - a);
        Vec2 dir = (b - a) / ell;
        double u0 = dot(a, dir);
        double d = std::sqrt(std::fmax(0.0, norm2(a) - u0 * u0));
        for (int panel = 0; panel < kPanels; ++panel) {
            double s0 = ell * panel / kPanels, s1 = ell * (panel + 1) / kPanels;
            double c = 0.5 * (s0 + s1), hw = 0.5 * (s1 - s0);
            for (int k = 0; k < 8; ++k) {
                for (double sgn : {+1.0, -1.0}) {
                    double s = c + sgn * hw * Gauss16::x[k];
                    double u = u0 + s;
                    double h = std::sqrt(d * d + u * u);
                    profile.emplace_back(Gauss16::w[k] * hw / L,
                                         PhasePoint(std::fmax(h, 1.0), std::atan2(d, u)));
                }
            }
        }
    }
    return efficiency_of_height_alpha_profile(profile);
}

SpiralAngleBoundReport check_spiral_angle_bound(const SpiralPiece& piece, double tol) {
    SpiralAngleBoundReport rep;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    if (piece.points.size() < 2) {
        rep.holds = true;
        rep.worst_margin = 0;
        return rep;
    }
    for (std::size_t i = 0; i + 1 < piece.points.size(); ++i) {
        double d = line_distance_to_origin(piece.points[i], piece.points[i + 1]);
        double h = norm(piece.points[i]);
        double margin = (d - piece.r) / h;  // sin(alpha) - r/h at the edge start
        if (margin < rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_edge = i;
        }
    }
    rep.holds = rep.worst_margin >= -tol;
    return rep;
}

WeightInequalityReport check_weight_inequality(const SpiralPiece& piece, int n_levels) {
    WeightInequalityReport rep;
    if (piece.points.size() < 2 || !(piece.R > piece.r))
        throw std::invalid_argument("check_weight_inequality: degenerate piece (r = R)");
    const std::size_t m = piece.points.size() - 1;

    // Pedal heights rho_i of the edge lines; the band [rho_i, rho_{i+1}] is
    // weighted by the lifted family of edge i, whose endpoint height caps it.
    rep.pedal_heights.resize(m + 1);
    for (std::size_t i = 0; i < m; ++i)
        rep.pedal_heights[i] = line_distance_to_origin(piece.points[i], piece.points[i + 1]);
    rep.pedal_heights[m] = piece.R;
    rep.pedal_monotone = true;
    for (std::size_t i = 0; i + 1 <= m; ++i)
        if (rep.pedal_heights[i + 1] < rep.pedal_heights[i] - 1e-9) rep.pedal_monotone = false;

    rep.length = piece.length();
    rep.min_weight = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        double h0 = norm(piece.points[i]);
        double h1 = norm(piece.points[i + 1]);
        double ell = norm(piece.points[i + 1] - piece.points[i]);
        rep.lhs += segment_horizon_formula(std::fmin(h0, h1), std::fmax(h0, h1), ell);

        double lo = rep.pedal_heights[i];
        double hi = std::fmin(rep.pedal_heights[i + 1], h1);
        if (hi <= lo) continue;
        // Substituting h = h1 sin(phi) removes the 1 / sqrt(h1^2 - h^2)
        // endpoint singularity of the weight.
        double phi0 = std::asin(std::fmin(1.0, lo / h1));
        double phi1 = std::asin(std::fmin(1.0, hi / h1));
        auto g = [&](double phi) {
            double h = h1 * std::sin(phi);
            return h * radial_efficiency(std::fmax(h, 1.0));
        };
        double piece_rhs = 0;
        for (int panel = 0; panel < n_levels; ++panel) {
            double a = phi0 + (phi1 - phi0) * panel / n_levels;
            double b = phi0 + (phi1 - phi0) * (panel + 1) / n_levels;
            piece_rhs += integrate_gauss16(g, a, b);
        }
        rep.rhs += piece_rhs;
        rep.weight_integral += std::sqrt(std::fmax(0.0, h1 * h1 - lo * lo)) -
                               std::sqrt(std::fmax(0.0, h1 * h1 - hi * hi));
        rep.min_weight = std::fmin(rep.min_weight, lo / std::sqrt(h1 * h1 - lo * lo));
    }
    rep.weight_lower_bound = piece.r / std::sqrt(piece.R * piece.R - piece.r * piece.r);
    rep.holds = rep.lhs <= rep.rhs + 1e-8;
    return rep;
}

std::pair<Vec2, Vec2> lift_one_edge(const Vec2& p0, const Vec2& p1, double t) {
    double r = norm(p0);
    double lifted = (1.0 + t) * r;
    if (lifted >= norm(p1))
        throw std::domain_error("lift_one_edge: lifted start height reaches the endpoint height");
    if (lifted < 1.0 - 1e-9)
        throw std::domain_error("lift_one_edge: lifted start height falls below 1");
    return {p0 * (1.0 + t), p1};
}

}  // namespace insp
