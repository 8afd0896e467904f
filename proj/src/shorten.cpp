#include "insp/shorten.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "insp/horizon_analytic.hpp"
#include "insp/inspection.hpp"

namespace insp {

namespace {

double support_min(const std::vector<Vec3>& pts, const std::vector<Vec3>& dirs) {
    double worst = std::numeric_limits<double>::infinity();
    for (const Vec3& u : dirs) {
        double best = -std::numeric_limits<double>::infinity();
        for (const Vec3& v : pts) best = std::fmax(best, dot(v, u));
        worst = std::fmin(worst, best);
        if (worst < 0) break;  // hopeless direction, no proposal will pass
    }
    return worst;
}

double polyline_length(const std::vector<Vec3>& pts, bool closed) {
    double L = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) L += norm(pts[i + 1] - pts[i]);
    if (closed) L += norm(pts.front() - pts.back());
    return L;
}

// Marks vertices whose individual move would drop some sampled support value
// below 1. The mask is computed from the current state for all vertices at
// once, so it introduces no ordering bias. Vertices that are the sole cover of
// a tight direction stay frozen until other vertices take the direction over.
std::vector<char> support_critical_mask(const std::vector<Vec3>& pts,
                                        const std::vector<Vec3>& proposal,
                                        const std::vector<Vec3>& dirs) {
    std::vector<char> frozen(pts.size(), 0);
    for (const Vec3& u : dirs) {
        double best = -std::numeric_limits<double>::infinity(), second = best;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            double d = dot(pts[i], u);
            if (d > best) {
                second = best;
                best = d;
                arg = i;
            } else if (d > second) {
                second = d;
            }
        }
        if (std::fmax(dot(proposal[arg], u), second) < 1.0) frozen[arg] = 1;
    }
    return frozen;
}

}  // namespace

ShortenTrace shorten(const Curve3& curve, const ShortenConfig& cfg) {
    if (!(cfg.step > 0) || !(cfg.shrink_factor > 0 && cfg.shrink_factor < 1) ||
        cfg.max_iters == 0 || cfg.inspect_samples == 0 || !(cfg.stop_rel_tol > 0))
        throw std::invalid_argument("shorten: invalid configuration");

    auto dirs = sample_directions(DirectionSampler::uniform(cfg.inspect_samples, cfg.seed));
    // The entry check absorbs discretization slack; accepted steps never do.
    InspectionReport initial = check_inspects(curve, dirs, 1e-4);
    if (!initial.inspects) throw std::domain_error("shorten: initial curve does not inspect the sphere");

    const std::size_t n = curve.size();
    const bool closed = curve.closed();
    std::vector<Vec3> pts = curve.points();
    double length = polyline_length(pts, closed);
    double step = cfg.step;

    std::vector<ShortenRecord> records;
    std::size_t accepted = 0;
    records.push_back({0, length, step, true, initial.min_support});

    std::vector<Vec3> proposal(n);
    std::vector<double> window;  // accepted lengths, for the 10-iteration stop rule
    window.push_back(length);

    for (std::size_t iter = 1; iter <= cfg.max_iters; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!closed && (i == 0 || i + 1 == n)) {
                proposal[i] = pts[i];
                continue;
            }
            const Vec3& prev = pts[(i + n - 1) % n];
            const Vec3& next = pts[(i + 1) % n];
            Vec3 pull = (prev + next) * 0.5 - pts[i];
            // step caps the displacement; the full midpoint is the limit move
            double m = norm(pull);
            proposal[i] = m <= step ? pts[i] + pull : pts[i] + pull * (step / m);
        }
        // Feasibility wall: proposals must keep the sampled support at 1 with
        // no tolerance credit, so sampling error only lengthens the result.
        double sup = support_min(proposal, dirs);
        bool accept = sup >= 1.0;
        if (!accept) {
            // Retry with support-critical vertices frozen; otherwise the first
            // hull contact blocks every later batch at any step size.
            std::vector<char> frozen = support_critical_mask(pts, proposal, dirs);
            bool any_move = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (frozen[i])
                    proposal[i] = pts[i];
                else if (!(proposal[i] == pts[i]))
                    any_move = true;
            }
            if (any_move) {
                sup = support_min(proposal, dirs);
                double masked_length = polyline_length(proposal, closed);
                accept = sup >= 1.0 && masked_length <= length;
            }
        }
        if (accept) {
            pts.swap(proposal);
            length = polyline_length(pts, closed);
            accepted++;
            window.push_back(length);
            // Recover step after rejections so one tight spot does not freeze
            // the whole descent permanently.
            step = std::fmin(step / cfg.shrink_factor, cfg.step);
        } else {
            step *= cfg.shrink_factor;
        }
        records.push_back({iter, length, step, accept, accept ? sup : records.back().min_support});

        if (window.size() >= 11) {
            double before = window[window.size() - 11];
            if ((before - length) / length < cfg.stop_rel_tol) break;
        }
        if (step < 1e-14) break;
    }
    return {std::move(records), Curve3(std::move(pts), closed), accepted};
}

DiagnoseReport diagnose(const Curve3& curve, std::uint64_t samples, std::uint64_t seed) {
    if (min_vertex_height(curve) < 1.0 - 1e-9)
        throw std::domain_error("diagnose: curve enters the unit ball");
    DiagnoseReport rep;
    rep.length = curve.length();
    rep.length_over_4pi = rep.length / (4 * std::numbers::pi);
    rep.horizon = mc_horizon(curve, DirectionSampler::uniform(samples, seed));
    rep.efficiency_mc = rep.horizon.value / rep.length;
    rep.efficiency_quadrature = curve_efficiency_quadrature(curve);
    rep.efficiency_bound_ok = rep.efficiency_mc <= 2.0 + 3.0 * rep.horizon.standard_error / rep.length;
    InspectionReport insp_rep =
        check_inspects(curve, DirectionSampler::uniform(samples, seed ^ 0x9e3779b97f4a7c15ULL), 1e-6);
    rep.inspects = insp_rep.inspects;
    rep.min_support = insp_rep.min_support;
    rep.tangent = validate_tangent_feasibility(curve, 1e-9);

    UnfoldingResult unf = unfold(curve);
    SpiralTolerances tol;
    tol.min_height = 0.5;  // diagnostics should survive mildly infeasible curves
    SpiralDecomposition dec = decompose_spirals(unf.planar, tol);
    rep.spiral_pieces = dec.pieces.size();
    rep.flat_set_length = dec.flat_set_length;
    for (const SpiralPiece& p : dec.pieces)
        rep.spiral_max_efficiency = std::fmax(rep.spiral_max_efficiency, spiral_efficiency(p));
    return rep;
}

}  // namespace insp
