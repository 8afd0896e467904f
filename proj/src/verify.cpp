#include "insp/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "insp/curve.hpp"
#include "insp/horizon_analytic.hpp"
#include "insp/inspection.hpp"
#include "insp/mc.hpp"
#include "insp/oracles.hpp"
#include "insp/shorten.hpp"
#include "insp/spherical.hpp"
#include "insp/synthetic.hpp"
#include "insp/unfolding.hpp"

namespace insp {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

struct CheckResult {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// Feasible (h0, h1, ell) triples drawn via a height, a tangent-line-safe
// angle, and a length; h1 follows from the planar law of cosines.
struct Triple {
    double h0, h1, ell;
};

Triple random_feasible_triple(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uh(1.05, 2.5), ua(0.0, 1.0), ul(0.1, 1.8);
    double h0 = uh(rng);
    double amin = std::asin(1.0 / h0);
    double alpha = amin + (kPi / 2 - amin) * ua(rng);
    double ell = ul(rng);
    double h1 = std::sqrt(h0 * h0 + ell * ell + 2 * h0 * ell * std::cos(alpha));
    if (h1 < h0) return {h1, h0, ell};
    return {h0, h1, ell};
}

std::pair<Cap, Cap> place_caps(const Triple& t) {
    Vec3 p0{t.h0, 0, 0};
    double cb = (t.h1 * t.h1 - t.h0 * t.h0 - t.ell * t.ell) / (2 * t.h0 * t.ell);
    cb = std::fmin(1.0, std::fmax(-1.0, cb));
    Vec3 dir{cb, std::sqrt(std::fmax(0.0, 1 - cb * cb)), 0};
    return {cap_from_viewpoint(p0), cap_from_viewpoint(p0 + dir * t.ell)};
}

CheckResult check_segment_closed_form_vs_oracle(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    const std::uint64_t n = opt.samples * 10;
    double worst_sigma = 0, worst_lens = 0;
    for (int k = 0; k < 50; ++k) {
        Triple t = random_feasible_triple(rng);
        double closed = segment_horizon(SegmentHorizonInput(t.h0, t.h1, t.ell));
        auto [c0, c1] = place_caps(t);
        CapPairEstimate mc = mc_cap_pair(c0, c1, DirectionSampler::uniform(n, opt.seed + 100 + k));
        double sigmas = std::fabs(mc.horizon - closed) / mc.horizon_se;
        double lens = std::fabs(cap_area(c0) + cap_area(c1) - 2 * cap_intersection_area(c0, c1) -
                                closed);
        worst_sigma = std::fmax(worst_sigma, sigmas);
        worst_lens = std::fmax(worst_lens, lens);
    }
    return {worst_sigma <= 3.0 && worst_lens < 1e-9,
            fmt("50 triples at %llu samples: worst |closed - MC| = %.2f SE, worst lens diff = %.2e",
                (unsigned long long)n, worst_sigma, worst_lens)};
}

CheckResult check_orthogonal_specialization() {
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        for (int j = 0; j < 100; ++j) {
            double h0 = 1.01 + (3.0 - 1.01) * i / 99.0;
            double ell = 0.01 + (3.0 - 0.01) * j / 99.0;
            double a = spiral_edge_horizon(h0, ell);
            double b = segment_horizon(
                SegmentHorizonInput(h0, std::sqrt(h0 * h0 + ell * ell), ell));
            worst = std::fmax(worst, std::fabs(a - b));
        }
    }
    return {worst < 1e-9, fmt("100x100 grid: max |difference| = %.2e", worst)};
}

CheckResult check_instantaneous_efficiency(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 2);
    std::uniform_real_distribution<double> uh(1.0 + 1e-4, 3.0), ua(0.0, 1.0);
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
        double h = uh(rng);
        double amin = std::asin(1.0 / h);
        double alpha = amin + (kPi / 2 - amin) * ua(rng);
        double cf = instantaneous_efficiency(PhasePoint(h, alpha));
        worst = std::fmax(worst, std::fabs(cf - efficiency_by_F_quadrature(h, alpha)));
    }
    // Radial-efficiency grid over [1, 3] with sqrt(2) included.
    double best = 0, best_h = 0;
    for (int i = 0; i <= 20000; ++i) {
        double h = 1.0 + 2.0 * i / 20000.0;
        if (i == 10000) h = kSqrt2;  // pin the maximizer onto the grid
        double e = radial_efficiency(h);
        if (e > best) {
            best = e;
            best_h = h;
        }
    }
    bool pass = worst < 1e-8 && std::fabs(best - 2.0) < 1e-10 && best_h == kSqrt2;
    return {pass, fmt("1000 Omega points: worst |closed - quadrature| = %.2e; grid max %.12f at h = %.9f",
                      worst, best, best_h)};
}

CheckResult check_edge_efficiency_bound() {
    double worst = 0;
    bool localized = true;
    double worst_outside = 0;
    for (int i = 0; i < 200; ++i) {
        for (int j = 0; j < 200; ++j) {
            double h0 = 1.0 + 2.0 * i / 199.0;
            double h1 = 1.0 + 2.0 * j / 199.0;
            if (h1 <= h0) continue;
            double e = spiral_edge_efficiency(h0, h1);
            worst = std::fmax(worst, e);
            bool inside = std::fabs(h0 - kSqrt2) < 0.05 && std::fabs(h1 - kSqrt2) < 0.05;
            if (e > 1.999 && !inside) localized = false;
            if (!inside) worst_outside = std::fmax(worst_outside, e);
        }
    }
    return {worst <= 2.0 + 1e-9 && localized,
            fmt("200x200 grid: max E = %.12f, max outside sqrt2-box = %.6f", worst, worst_outside)};
}

CheckResult check_lifting_derivatives(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 4);
    std::uniform_real_distribution<double> ur(1.05, 2.0), ugap(0.3, 1.5);
    double worst_rel = 0, worst_ratio = 0;
    for (int k = 0; k < 10; ++k) {
        double r = ur(rng), R = r + ugap(rng);
        LiftingDerivatives d = lifting_derivatives(r, R);
        const double step = 1e-5;
        auto H = [&](double t) {
            double h = r + t;
            return spiral_edge_horizon(h, std::sqrt(R * R - h * h));
        };
        auto L = [&](double t) {
            double h = r + t;
            return std::sqrt(R * R - h * h);
        };
        double fdH = (H(step) - H(-step)) / (2 * step);
        double fdL = (L(step) - L(-step)) / (2 * step);
        worst_rel = std::fmax(worst_rel, std::fabs(fdH - d.dH) / std::fabs(d.dH));
        worst_rel = std::fmax(worst_rel, std::fabs(fdL - d.dL) / std::fabs(d.dL));
        worst_ratio = std::fmax(worst_ratio,
                                std::fabs(d.ratio - 4 * std::sqrt(r * r - 1) / (r * r)));
    }
    return {worst_rel < 1e-6 && worst_ratio < 1e-9,
            fmt("10 pairs: worst FD relative error = %.2e, worst ratio defect = %.2e", worst_rel,
                worst_ratio)};
}

CheckResult check_unfolding(const VerifyOptions& opt) {
    double worst_len = 0, worst_h = 0, worst_eff = 0;
    for (int k = 0; k < 20; ++k) {
        Curve3 c = random_feasible_curve(opt.seed * 1000 + k);
        UnfoldingResult u = unfold(c);
        double max_h = 0;
        for (const Vec3& p : c.points()) max_h = std::fmax(max_h, norm(p));
        worst_len = std::fmax(worst_len, u.length_error / c.length());
        worst_h = std::fmax(worst_h, u.height_error / max_h);
        double e3 = curve_efficiency_quadrature(c);
        double e2 = curve_efficiency_quadrature(u.planar);
        worst_eff = std::fmax(worst_eff, std::fabs(e3 - e2));
    }
    return {worst_len <= 1e-9 && worst_h <= 1e-12 && worst_eff < 1e-10,
            fmt("20 curves: worst relative length error = %.2e, height error = %.2e, "
                "efficiency difference = %.2e",
                worst_len, worst_h, worst_eff)};
}

Curve3 great_circle(std::size_t n) {
    std::vector<Vec3> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double t = 2 * kPi * double(i) / double(n);
        pts.emplace_back(std::cos(t), std::sin(t), 0.0);
    }
    return Curve3(std::move(pts), true);
}

CheckResult check_crofton(const VerifyOptions& opt) {
    Curve3 gc = great_circle(2048);
    double worst_sigma = 0;
    int idx = 0;
    for (double rho : {kPi / 6, kPi / 4, kPi / 2}) {
        CroftonEstimate e =
            crofton_length(gc, rho, DirectionSampler::uniform(opt.samples, opt.seed + 40 + idx++));
        worst_sigma = std::fmax(worst_sigma, std::fabs(e.length - 2 * kPi) / e.standard_error);
    }
    Curve3 seam = baseball_seam({512, 1.0 / kSqrt2});
    CroftonEstimate s =
        crofton_length(seam, kPi / 4, DirectionSampler::uniform(opt.samples, opt.seed + 44));
    double seam_sigma = std::fabs(s.length - 4 * kPi / kSqrt2) / s.standard_error;
    double count_sigma = std::fabs(s.mean_crossings - 2.0) / s.mean_crossings_se;
    bool pass = worst_sigma <= 3.0 && seam_sigma <= 3.0 && count_sigma <= 3.0;
    return {pass,
            fmt("great circle worst = %.2f SE; seam length dev = %.2f SE, crossing count %.6f "
                "(dev %.2f SE)",
                worst_sigma, seam_sigma, s.mean_crossings, count_sigma)};
}

CheckResult check_seam_theorem(const VerifyOptions& opt) {
    Curve3 seam = baseball_seam({512, 1.0});
    double len_rel = std::fabs(seam.length() - 4 * kPi) / (4 * kPi);
    double inr = inradius_at_center(seam, {0, 0, 0}, DirectionSampler::fibonacci(100000));
    InspectionReport rep = check_inspects(seam, DirectionSampler::fibonacci(100000), 1e-5);
    HorizonEstimate h = mc_horizon(seam, DirectionSampler::uniform(opt.samples, opt.seed + 50));
    double eff = h.value / seam.length();
    double eff_sigma = std::fabs(eff - 2.0) / (h.standard_error / seam.length());
    bool pass = len_rel < 1e-5 && std::fabs(inr - 1.0) < 1e-5 && rep.inspects && eff_sigma <= 3.0;
    return {pass, fmt("length/4pi - 1 = %.2e, inradius - 1 = %.2e, inspects = %s, H/L = %.6f "
                      "(dev %.2f SE)",
                      len_rel, inr - 1.0, rep.inspects ? "yes" : "no", eff, eff_sigma)};
}

CheckResult check_shortener(const VerifyOptions& opt) {
    ShortenConfig cfg;
    cfg.seed = opt.seed;
    double bound = 4 * kPi * (1 - 1e-3);

    ShortenTrace seam_run = shorten(scaled(baseball_seam({16, 1.0}), 1.3), cfg);
    ShortenTrace octa_run = shorten(resample_constant_speed(octahedron_tour(2.0), 64), cfg);

    auto monotone = [](const ShortenTrace& t) {
        double prev = std::numeric_limits<double>::infinity();
        for (const ShortenRecord& r : t.records) {
            if (r.feasible) {
                if (r.length > prev + 1e-12) return false;
                prev = r.length;
            }
        }
        return true;
    };
    std::size_t near = 0;
    const auto& fin = seam_run.final_curve.points();
    for (const Vec3& p : fin) near += std::fabs(norm(p) - kSqrt2) < 0.05;
    double frac = double(near) / double(fin.size());

    double len_seam = seam_run.final_curve.length();
    double len_octa = octa_run.final_curve.length();
    bool pass = len_seam >= bound && len_octa >= bound && monotone(seam_run) &&
                monotone(octa_run) && frac >= 0.9;
    return {pass, fmt("final lengths / 4pi: seam start %.5f, octahedron start %.5f; monotone = "
                      "%s/%s; %.0f%% of heights within 0.05 of sqrt2",
                      len_seam / (4 * kPi), len_octa / (4 * kPi), monotone(seam_run) ? "yes" : "no",
                      monotone(octa_run) ? "yes" : "no", 100 * frac)};
}

CheckResult check_weight_inequality_random(const VerifyOptions& opt) {
    double worst_margin = -std::numeric_limits<double>::infinity();
    double worst_eff = 0;
    for (int k = 0; k < 30; ++k) {
        SpiralPiece piece;
        piece.points = random_polygonal_spiral(opt.seed * 77 + k);
        piece.r = norm(piece.points.front());
        piece.R = norm(piece.points.back());
        WeightInequalityReport rep = check_weight_inequality(piece);
        worst_margin = std::fmax(worst_margin, rep.lhs - rep.rhs);
        worst_eff = std::fmax(worst_eff, spiral_efficiency(piece));
    }
    return {worst_margin <= 1e-8 && worst_eff <= 2.0 + 1e-6,
            fmt("30 spirals: worst LHS - RHS = %.2e, max efficiency = %.9f", worst_margin,
                worst_eff)};
}

}  // namespace

bool run_acceptance(const VerifyOptions& opt, std::ostream& out) {
    struct Criterion {
        const char* name;
        CheckResult (*run)(const VerifyOptions&);
    };
    const Criterion criteria[] = {
        {"segment closed form vs Monte Carlo and lens assembly", check_segment_closed_form_vs_oracle},
        {"orthogonal-start specialization on the (h0, ell) grid",
         [](const VerifyOptions&) { return check_orthogonal_specialization(); }},
        {"instantaneous efficiency: quadrature agreement and radial maximum",
         check_instantaneous_efficiency},
        {"one-edge efficiency bound E <= 2 localized at sqrt2",
         [](const VerifyOptions&) { return check_edge_efficiency_bound(); }},
        {"lifting derivatives vs finite differences", check_lifting_derivatives},
        {"unfolding preserves length, heights and efficiency", check_unfolding},
        {"Crofton length of great circles and the seam", check_crofton},
        {"seam realizes the sharp bound", check_seam_theorem},
        {"shortener respects the bound and approaches the seam", check_shortener},
        {"weight inequality and spiral efficiency bound", check_weight_inequality_random},
    };
    bool all = true;
    int idx = 1;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r = c.run(opt);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out << (r.pass ? "PASS" : "FAIL") << "  " << idx++ << ". " << c.name << "\n      "
            << r.detail << fmt("  [%.1f s]", secs) << "\n";
        all = all && r.pass;
    }
    out << (all ? "all criteria passed\n" : "SOME CRITERIA FAILED\n");
    return all;
}

}  // namespace insp
