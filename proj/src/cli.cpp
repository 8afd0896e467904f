#include "insp/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "insp/curve_json.hpp"
#include "insp/horizon_analytic.hpp"
#include "insp/inspection.hpp"
#include "insp/mc.hpp"
#include "insp/shorten.hpp"
#include "insp/spherical.hpp"
#include "insp/unfolding.hpp"
#include "insp/verify.hpp"

namespace insp::cli {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

// JSON writer with 17-significant-digit doubles (lossless round-trip).
void dump17(const json& j, std::ostream& out, int indent) {
    std::string pad(std::size_t(indent) * 2, ' ');
    std::string pad1(std::size_t(indent + 1) * 2, ' ');
    if (j.is_object()) {
        out << "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            out << pad1 << json(key).dump() << ": ";
            dump17(value, out, indent + 1);
            out << (++i < j.size() ? ",\n" : "\n");
        }
        out << pad << "}";
    } else if (j.is_array()) {
        bool flat = true;
        for (const auto& v : j)
            if (v.is_structured()) flat = false;
        out << (flat ? "[" : "[\n");
        std::size_t i = 0;
        for (const auto& v : j) {
            if (!flat) out << pad1;
            dump17(v, out, indent + 1);
            out << (++i < j.size() ? (flat ? ", " : ",\n") : (flat ? "" : "\n"));
        }
        if (!flat) out << pad;
        out << "]";
    } else if (j.is_number_float()) {
        out << format_double_17(j.get<double>());
    } else {
        out << j.dump();
    }
}

void emit(const json& j, const std::string& out_path) {
    std::ostringstream ss;
    dump17(j, ss, 0);
    ss << "\n";
    if (out_path.empty())
        std::cout << ss.str();
    else
        write_file(out_path, ss.str());
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

json curve_to_json_value(const Curve2& c) {
    json pts = json::array();
    for (const Vec2& p : c.points()) pts.push_back({p.x, p.y});
    return {{"closed", c.closed()}, {"points", pts}};
}

DirectionSampler make_sampler(const std::string& scheme, std::uint64_t count, std::uint64_t seed) {
    if (scheme == "fibonacci") return DirectionSampler::fibonacci(count);
    return DirectionSampler::uniform(count, seed);
}

json sampler_json(const DirectionSampler& s) {
    json j{{"samples", s.count},
           {"scheme", s.scheme == DirectionSampler::Scheme::fibonacci ? "fibonacci" : "uniform"}};
    if (s.scheme == DirectionSampler::Scheme::seeded_uniform) j["seed"] = s.seed;
    return j;
}

struct Options {
    std::string curve_path, out_path, trace_path;
    std::string scheme = "uniform";
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 0;
    bool seed_given = false;
    double tol = 1e-6;
    double rho = kPi / 4;
    double scale = 1.0;
    std::size_t arcs = 256;
    std::size_t grid = 200;
    std::string table_kind = "edge";
    std::vector<double> center;
    std::size_t iters = 4000;
    double step = 0.5, shrink = 0.5, stop_rel_tol = 1e-7;
    std::uint64_t inspect_samples = 20000;
    unsigned threads = 0;
};

void require_seed(const Options& o, const std::string& cmd) {
    if (o.scheme != "fibonacci" && !o.seed_given)
        throw CLI::ValidationError(cmd + ": --seed is required for randomized sampling");
}

int cmd_seam(const Options& o) {
    Curve3 seam = baseball_seam({o.arcs, o.scale});
    emit_text(curve_to_json(seam), o.out_path);
    return 0;
}

int cmd_inspect(const Options& o) {
    Curve3 c = load_curve3(o.curve_path);
    require_seed(o, "inspect");
    DirectionSampler s = make_sampler(o.scheme, o.samples, o.seed);
    InspectionReport rep = check_inspects(c, s, o.tol);
    json j{{"inspects", rep.inspects},
           {"min_support", rep.min_support},
           {"uncovered_directions", rep.uncovered_directions},
           {"tol", rep.tol}};
    j.update(sampler_json(s));
    Vec3 center{0, 0, 0};
    if (!o.center.empty()) center = {o.center[0], o.center[1], o.center[2]};
    j["center"] = {center.x, center.y, center.z};
    j["inradius"] = inradius_at_center(c, center, s);
    emit(j, o.out_path);
    return 0;
}

int cmd_horizon(const Options& o) {
    Curve3 c = load_curve3(o.curve_path);
    require_seed(o, "horizon");
    DirectionSampler s = make_sampler(o.scheme, o.samples, o.seed);
    HorizonEstimate e = mc_horizon(c, s);
    json j{{"value", e.value},
           {"standard_error", e.standard_error},
           {"mean_crossings", e.mean_crossings},
           {"total_crossings", e.total_crossings}};
    j.update(sampler_json(s));
    emit(j, o.out_path);
    return 0;
}

int cmd_efficiency(const Options& o) {
    Curve3 c = load_curve3(o.curve_path);
    require_seed(o, "efficiency");
    DiagnoseReport rep = diagnose(c, o.samples, o.seed);
    json j{{"length", rep.length},
           {"length_over_4pi", rep.length_over_4pi},
           {"mc_horizon", rep.horizon.value},
           {"mc_horizon_se", rep.horizon.standard_error},
           {"efficiency_mc", rep.efficiency_mc},
           {"efficiency_quadrature", rep.efficiency_quadrature},
           {"efficiency_bound_ok", rep.efficiency_bound_ok},
           {"inspects", rep.inspects},
           {"min_support", rep.min_support},
           {"tangent_feasible", rep.tangent.feasible},
           {"worst_line_distance", rep.tangent.worst_line_distance},
           {"spiral_pieces", rep.spiral_pieces},
           {"spiral_max_efficiency", rep.spiral_max_efficiency},
           {"flat_set_length", rep.flat_set_length},
           {"samples", o.samples},
           {"seed", o.seed}};
    emit(j, o.out_path);
    return 0;
}

int cmd_unfold(const Options& o) {
    Curve3 c = load_curve3(o.curve_path);
    UnfoldingResult u = unfold(c);
    json rep{{"cone_angle_total", u.cone_angle_total},
             {"length_error", u.length_error},
             {"height_error", u.height_error}};
    if (!o.out_path.empty()) {
        // Planar curve to the file, report to stdout.
        write_file(o.out_path, curve_to_json(u.planar));
        emit(rep, "");
    } else {
        rep["planar"] = curve_to_json_value(u.planar);
        emit(rep, "");
    }
    return 0;
}

json piece_to_json(const SpiralPiece& p) {
    json pts = json::array();
    for (const Vec2& q : p.points) pts.push_back({q.x, q.y});
    return {{"points", pts},
            {"start_height", p.r},
            {"end_height", p.R},
            {"orthogonal_start_defect", p.orthogonal_start_defect},
            {"convexity_defect", p.convexity_defect},
            {"t0", p.t0},
            {"t1", p.t1},
            {"reversed", p.reversed},
            {"length", p.length()},
            {"efficiency", spiral_efficiency(p)}};
}

int cmd_spirals(const Options& o) {
    std::string text = read_file(o.curve_path);
    json rep;
    Curve2 planar = [&] {
        if (curve_json_dimension(text) == 2) return parse_curve2_json(text);
        UnfoldingResult u = unfold(parse_curve3_json(text));
        rep["unfolded_from_3d"] = true;
        rep["cone_angle_total"] = u.cone_angle_total;
        return u.planar;
    }();
    SpiralDecomposition dec = decompose_spirals(planar);
    json pieces = json::array();
    for (const SpiralPiece& p : dec.pieces) pieces.push_back(piece_to_json(p));
    rep["pieces"] = pieces;
    rep["flat_set_length"] = dec.flat_set_length;
    rep["parameter_shift"] = dec.parameter_shift;
    emit(rep, o.out_path);
    return 0;
}

int cmd_crofton(const Options& o) {
    Curve3 c = load_curve3(o.curve_path);
    require_seed(o, "crofton");
    DirectionSampler s = make_sampler(o.scheme, o.samples, o.seed);
    CroftonEstimate e = crofton_length(c, o.rho, s);
    json j{{"length", e.length},
           {"standard_error", e.standard_error},
           {"mean_crossings", e.mean_crossings},
           {"mean_crossings_se", e.mean_crossings_se},
           {"rho", o.rho}};
    j.update(sampler_json(s));
    emit(j, o.out_path);
    return 0;
}

int cmd_shorten(const Options& o) {
    Curve3 c = load_curve3(o.curve_path);
    if (!o.seed_given) throw CLI::ValidationError("shorten: --seed is required");
    ShortenConfig cfg;
    cfg.max_iters = o.iters;
    cfg.step = o.step;
    cfg.shrink_factor = o.shrink;
    cfg.inspect_samples = o.inspect_samples;
    cfg.seed = o.seed;
    cfg.stop_rel_tol = o.stop_rel_tol;
    ShortenTrace trace = shorten(c, cfg);
    if (!o.trace_path.empty()) {
        std::ostringstream csv;
        csv << "iter,length,step,feasible,min_support\n";
        for (const ShortenRecord& r : trace.records)
            csv << r.iter << "," << format_double_17(r.length) << "," << format_double_17(r.step)
                << "," << (r.feasible ? 1 : 0) << "," << format_double_17(r.min_support) << "\n";
        write_file(o.trace_path, csv.str());
    }
    if (!o.out_path.empty()) write_file(o.out_path, curve_to_json(trace.final_curve));
    json j{{"final_length", trace.final_curve.length()},
           {"length_over_4pi", trace.final_curve.length() / (4 * kPi)},
           {"iterations", trace.records.back().iter},
           {"accepted_steps", trace.accepted_steps},
           {"final_min_support", trace.records.back().min_support}};
    emit(j, "");
    return 0;
}

int cmd_table(const Options& o) {
    std::ostringstream csv;
    double observed_max = 0;
    if (o.table_kind == "edge") {
        csv << "h0,h1,E\n";
        for (std::size_t i = 0; i < o.grid; ++i) {
            for (std::size_t j = 0; j < o.grid; ++j) {
                double h0 = 1.0 + 2.0 * double(i) / double(o.grid - 1);
                double h1 = 1.0 + 2.0 * double(j) / double(o.grid - 1);
                if (h1 <= h0) continue;
                double e = spiral_edge_efficiency(h0, h1);
                observed_max = std::fmax(observed_max, e);
                csv << format_double_17(h0) << "," << format_double_17(h1) << ","
                    << format_double_17(e) << "\n";
            }
        }
    } else {
        csv << "h,alpha,E\n";
        for (std::size_t i = 0; i < o.grid; ++i) {
            double h = 1.0 + 2.0 * double(i) / double(o.grid - 1);
            double amin = std::asin(1.0 / h);
            for (std::size_t j = 0; j < o.grid; ++j) {
                double alpha = amin + (kPi / 2 - amin) * double(j) / double(o.grid - 1);
                double e = instantaneous_efficiency(PhasePoint(h, alpha));
                observed_max = std::fmax(observed_max, e);
                csv << format_double_17(h) << "," << format_double_17(alpha) << ","
                    << format_double_17(e) << "\n";
            }
        }
    }
    emit_text(csv.str(), o.out_path);
    std::cerr << "observed max E = " << format_double_17(observed_max) << "\n";
    return 0;
}

int cmd_verify(const Options& o) {
    VerifyOptions vo;
    vo.seed = o.seed_given ? o.seed : 7;
    vo.samples = o.samples;
    return run_acceptance(vo, std::cout) ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"geometry of closed curves inspecting the unit sphere"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "worker threads for sample loops (0 = hardware)");

    auto add_curve = [&](CLI::App* cmd) {
        cmd->add_option("--curve", o.curve_path, "input curve JSON file")->required();
    };
    auto add_sampling = [&](CLI::App* cmd) {
        cmd->add_option("--samples", o.samples, "number of sampled directions");
        cmd->add_option("--seed", o.seed, "RNG seed (required unless --scheme fibonacci)")
            ->each([&](const std::string&) { o.seed_given = true; });
        cmd->add_option("--scheme", o.scheme, "fibonacci | uniform")
            ->check(CLI::IsMember({"fibonacci", "uniform"}));
    };

    CLI::App* seam = app.add_subcommand("seam", "generate the four-semicircle seam curve");
    seam->add_option("--arcs", o.arcs, "segments per semicircle")->check(CLI::PositiveNumber);
    seam->add_option("--scale", o.scale, "inradius scale r");
    seam->add_option("-o,--out", o.out_path, "output curve file (default stdout)");

    CLI::App* inspect = app.add_subcommand("inspect", "certify sphere inspection by support sampling");
    add_curve(inspect);
    add_sampling(inspect);
    inspect->add_option("--tol", o.tol, "support tolerance");
    inspect->add_option("--center", o.center, "inradius center x,y,z")->expected(3)->delimiter(',');
    inspect->add_option("-o,--out", o.out_path, "output report file (default stdout)");

    CLI::App* horizon = app.add_subcommand("horizon", "Monte Carlo horizon of a curve");
    add_curve(horizon);
    add_sampling(horizon);
    horizon->add_option("-o,--out", o.out_path, "output report file (default stdout)");

    CLI::App* efficiency = app.add_subcommand("efficiency", "full efficiency diagnostics");
    add_curve(efficiency);
    add_sampling(efficiency);
    efficiency->add_option("-o,--out", o.out_path, "output report file (default stdout)");

    CLI::App* unfoldc = app.add_subcommand("unfold", "planar cone unfolding");
    add_curve(unfoldc);
    unfoldc->add_option("-o,--out", o.out_path, "write the planar curve here, report to stdout");

    CLI::App* spirals = app.add_subcommand("spirals", "spiral decomposition (3D input is unfolded)");
    add_curve(spirals);
    spirals->add_option("-o,--out", o.out_path, "output report file (default stdout)");

    CLI::App* crofton = app.add_subcommand("crofton", "Crofton length of a spherical curve");
    add_curve(crofton);
    add_sampling(crofton);
    crofton->add_option("--rho", o.rho, "circle radius in (0, pi/2]")->required();
    crofton->add_option("-o,--out", o.out_path, "output report file (default stdout)");

    CLI::App* shortenc = app.add_subcommand("shorten", "length descent under the inspection constraint");
    add_curve(shortenc);
    shortenc->add_option("--iters", o.iters, "maximum iterations");
    shortenc->add_option("--seed", o.seed, "RNG seed (required)")
        ->each([&](const std::string&) { o.seed_given = true; });
    shortenc->add_option("--step", o.step, "initial vertex displacement fraction");
    shortenc->add_option("--shrink", o.shrink, "step shrink factor on rejection");
    shortenc->add_option("--inspect-samples", o.inspect_samples, "support directions per check");
    shortenc->add_option("--stop-rel-tol", o.stop_rel_tol, "stop threshold over 10 iterations");
    shortenc->add_option("-o,--out", o.out_path, "output curve file");
    shortenc->add_option("--trace", o.trace_path, "CSV trace file");

    CLI::App* table = app.add_subcommand("table", "CSV efficiency grids");
    table->add_option("--grid", o.grid, "grid resolution")->check(CLI::Range(std::size_t(2), std::size_t(100000)));
    table->add_option("--kind", o.table_kind, "edge: E(h0,h1); inst: E(h,alpha)")
        ->check(CLI::IsMember({"edge", "inst"}));
    table->add_option("-o,--out", o.out_path, "output CSV file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--seed", o.seed, "RNG seed")->each([&](const std::string&) {
        o.seed_given = true;
    });
    verify->add_option("--samples", o.samples, "base Monte Carlo sample count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    set_thread_count(o.threads);
    try {
        if (seam->parsed()) return cmd_seam(o);
        if (inspect->parsed()) return cmd_inspect(o);
        if (horizon->parsed()) return cmd_horizon(o);
        if (efficiency->parsed()) return cmd_efficiency(o);
        if (unfoldc->parsed()) return cmd_unfold(o);
        if (spirals->parsed()) return cmd_spirals(o);
        if (crofton->parsed()) return cmd_crofton(o);
        if (shortenc->parsed()) return cmd_shorten(o);
        if (table->parsed()) return cmd_table(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace insp::cli
