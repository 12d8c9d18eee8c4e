// zdist: zero-distribution characteristics of entire functions of
// exponential type, evaluated on finite windows.

#include "zd/common.hpp"
#include "zd/criteria.hpp"
#include "zd/entire.hpp"
#include "zd/growth.hpp"
#include "zd/io.hpp"
#include "zd/log_sums.hpp"
#include "zd/window.hpp"
#include "zd/zero_sequence.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

struct CommonOpts {
    std::string zeros_path;
    std::string zeros_w_path;
    double b = 1.0;
    std::string d_spec = "zero"; // zero | invlog | PATH
    std::vector<double> r_list = {1.0, 2.0, 5.0, 10.0};
    double r_max = 1e4;
    int ppd = 20;
    double tol = 1e-8;
    std::string out_path;
    std::string surface_path;
    double trend_bounded = 0.01;
    double trend_divergent = 0.1;
    unsigned threads = 1;
    std::string g_sin;      // b value for g = sin(pi b z)
    std::string g_zeros;    // path to right-half-plane zeros of an even product
    std::string p_sin, p_zeros;
    std::string mu_sin, mu_zeros;
    std::string f_sin;
    std::string growth_path;
};

void add_grid_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--rmin", o.r_list, "inner radii r of the windows")->delimiter(',');
    cmd->add_option("--rmax", o.r_max, "largest outer radius R");
    cmd->add_option("--ppd", o.ppd, "R lattice points per decade");
}

void add_report_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--out", o.out_path, "JSON report path");
    cmd->add_option("--surface", o.surface_path, "CSV excess surface path");
    cmd->add_option("--trend-bounded", o.trend_bounded, "trend below which verdict is bounded");
    cmd->add_option("--trend-divergent", o.trend_divergent,
                    "trend above which verdict is divergent");
    cmd->add_option("--tol", o.tol, "absolute quadrature tolerance per window");
    cmd->add_option("--threads", o.threads, "worker threads (results are identical for any count)");
}

zd::WindowGrid make_grid(const CommonOpts& o) {
    return zd::WindowGrid::log_spaced(o.r_list, o.r_max, o.ppd);
}

std::optional<zd::GrowthFunction> make_d(const CommonOpts& o) {
    if (o.d_spec == "zero") return std::nullopt;
    if (o.d_spec == "invlog") {
        // d(R) = 1 / ln(e + R), sampled on a log lattice up to rmax.
        std::vector<std::pair<double, double>> samples;
        const double lo = *std::min_element(o.r_list.begin(), o.r_list.end());
        for (double x = lo;; x *= std::pow(10.0, 1.0 / 40.0)) {
            samples.emplace_back(x, 1.0 / std::log(std::exp(1.0) + x));
            if (x >= o.r_max) break;
        }
        return zd::GrowthFunction(zd::GrowthKind::d_like, std::move(samples));
    }
    return zd::load_growth_function(o.d_spec);
}

zd::LogModulus make_logmod(const std::string& sin_b, const std::string& zeros_path,
                           const char* what) {
    if (!sin_b.empty()) return zd::sin_axis_logmod(std::stod(sin_b));
    if (!zeros_path.empty())
        return zd::product_axis_logmod(zd::CanonicalProduct(zd::load_zero_sequence(zeros_path)));
    throw std::runtime_error(std::string("missing log-modulus specification for ") + what +
                             " (use --" + what + "-sin or --" + what + "-zeros)");
}

std::vector<std::pair<std::string, std::string>> echo_config(const std::string& command,
                                                             const CommonOpts& o) {
    std::ostringstream rl;
    for (std::size_t i = 0; i < o.r_list.size(); ++i) rl << (i ? "," : "") << o.r_list[i];
    std::vector<std::pair<std::string, std::string>> cfg = {
        {"command", command},
        {"rmin", rl.str()},
        {"rmax", std::to_string(o.r_max)},
        {"ppd", std::to_string(o.ppd)},
        {"tol", std::to_string(o.tol)},
        {"trend_bounded", std::to_string(o.trend_bounded)},
        {"trend_divergent", std::to_string(o.trend_divergent)},
    };
    // Deliberately not echoed: --threads (reports are byte-identical for
    // any worker count, and echoing it would break that).
    if (!o.zeros_path.empty()) cfg.emplace_back("zeros", o.zeros_path);
    if (!o.zeros_w_path.empty()) cfg.emplace_back("zeros_w", o.zeros_w_path);
    if (!o.d_spec.empty()) cfg.emplace_back("d", o.d_spec);
    return cfg;
}

int emit_report(const zd::CriterionReport& rep, const CommonOpts& o,
                const std::vector<std::pair<std::string, std::string>>& cfg) {
    const std::string json = zd::report_to_json(rep, cfg);
    if (o.out_path.empty())
        std::cout << json;
    else
        zd::write_text_atomic(o.out_path, json);
    if (!o.surface_path.empty())
        zd::write_text_atomic(o.surface_path, zd::report_surface_csv(rep));
    switch (rep.verdict) {
        case zd::Verdict::bounded: return 0;
        case zd::Verdict::divergent: return 2;
        case zd::Verdict::inconclusive: return 3;
    }
    return 3;
}

int run_analyze(const CommonOpts& o) {
    const zd::ZeroSequence z = zd::load_zero_sequence(o.zeros_path);
    const zd::WindowGrid grid = make_grid(o);
    const auto rows = zd::log_sum_table(z, grid);

    std::ostringstream os;
    const auto sep = z.empty() ? zd::SeparationReport{} : zd::separation_margin(z);
    const double r_lo = *std::min_element(o.r_list.begin(), o.r_list.end());
    const double density = z.empty() ? 0.0 : zd::upper_density(z, r_lo);
    os.precision(17);
    os << "{\n  \"tool\": \"zdist\",\n  \"version\": \"" << zd::kVersion << "\",\n"
       << "  \"command\": \"analyze\",\n"
       << "  \"zeros\": \"" << o.zeros_path << "\",\n"
       << "  \"points\": " << z.size() << ",\n"
       << "  \"upper_density_estimate\": " << density << ",\n"
       << "  \"separation_margin\": " << sep.margin << ",\n"
       << "  \"separated\": " << (sep.separated ? "true" : "false") << ",\n"
       << "  \"imaginary_axis_points\": " << zd::imaginary_axis_count(z) << ",\n"
       << "  \"windows\": " << grid.size() << "\n}\n";
    if (o.out_path.empty())
        std::cout << os.str();
    else
        zd::write_text_atomic(o.out_path, os.str());
    if (!o.surface_path.empty())
        zd::write_text_atomic(o.surface_path, zd::log_sum_table_csv(rows));
    return 0;
}

int run_check(const std::string& kind, const CommonOpts& o) {
    const zd::WindowGrid grid = make_grid(o);
    const zd::Thresholds th{o.trend_bounded, o.trend_divergent};
    const auto d = make_d(o);
    const zd::GrowthFunction* dp = d ? &*d : nullptr;
    zd::CriterionReport rep;
    if (kind == "mr") {
        rep = zd::mr_check(zd::load_zero_sequence(o.zeros_path), o.b, dp, grid, th);
    } else if (kind == "dominance") {
        rep = zd::dominance_check(zd::load_zero_sequence(o.zeros_path),
                                  zd::load_zero_sequence(o.zeros_w_path), dp, grid, th);
    } else if (kind == "logmod") {
        rep = zd::logmod_dominance_check(zd::load_zero_sequence(o.zeros_path),
                                         make_logmod(o.g_sin, o.g_zeros, "g"), dp, grid,
                                         o.tol, th);
    } else if (kind == "multiplier") {
        rep = zd::multiplier_check(make_logmod(o.p_sin, o.p_zeros, "p"),
                                   make_logmod(o.g_sin, o.g_zeros, "g"), dp, grid, o.tol, th);
    } else if (kind == "width") {
        rep = zd::width_check(make_logmod(o.mu_sin, o.mu_zeros, "mu"), o.b, dp, grid,
                              o.tol, th);
    } else if (kind == "completeness") {
        rep = zd::completeness_diagnostic(zd::load_zero_sequence(o.zeros_path), o.b, grid, th);
    } else {
        throw std::runtime_error("unknown check kind: " + kind);
    }
    auto cfg = echo_config("check " + kind, o);
    cfg.emplace_back("b", std::to_string(o.b));
    return emit_report(rep, o, cfg);
}

int run_gap(const CommonOpts& o) {
    const zd::ZeroSequence zf = zd::load_zero_sequence(o.zeros_path);
    const zd::WindowGrid grid = make_grid(o);
    const zd::Thresholds th{o.trend_bounded, o.trend_divergent};
    zd::LogModulus f;
    if (!o.f_sin.empty()) {
        f = zd::sin_axis_logmod(std::stod(o.f_sin));
    } else {
        // Even product over the right-half-plane part of the zero file;
        // zf should then contain those points together with their mirrors.
        std::vector<std::complex<double>> rh;
        for (const auto& p : zf.points())
            if (p.real() > 0.0) rh.push_back(p);
        f = zd::product_axis_logmod(zd::CanonicalProduct(zd::ZeroSequence(std::move(rh))));
    }
    const auto rep = zd::lemma_gap(f, zf, grid, o.tol, th);
    return emit_report(rep, o, echo_config("gap", o));
}

int run_synthesize(const CommonOpts& o) {
    const zd::GrowthFunction q = zd::load_growth_function(o.growth_path);
    const auto seq = zd::synthesize_sequence(q, o.r_max);
    if (o.out_path.empty()) {
        std::cout << "re,im\n";
        for (const auto& p : seq.points()) {
            std::cout.precision(17);
            std::cout << p.real() << "," << p.imag() << "\n";
        }
    } else {
        zd::save_zero_sequence_csv(seq, o.out_path);
    }
    return 0;
}

int run_pipeline(const CommonOpts& o) {
    const zd::WindowGrid grid = make_grid(o);
    const zd::Thresholds th{o.trend_bounded, o.trend_divergent};
    const auto d = make_d(o);
    if (!d) throw std::runtime_error("pipeline requires a nonzero --d (path or invlog)");
    const auto res = zd::majorant_pipeline(zd::load_zero_sequence(o.zeros_path),
                                           zd::load_zero_sequence(o.zeros_w_path), *d, grid,
                                           o.tol, th);
    auto cfg = echo_config("pipeline", o);
    for (std::size_t i = 0; i < res.stages.size(); ++i)
        cfg.emplace_back("stage_" + std::to_string(i), res.stages[i]);
    return emit_report(res.report, o, cfg);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-distribution characteristics of entire functions of exponential type"};
    app.require_subcommand(1);
    CommonOpts o;

    auto* analyze = app.add_subcommand("analyze", "density, separation and log-sum table");
    analyze->add_option("--zeros", o.zeros_path, "zero sequence file")->required();
    add_grid_opts(analyze, o);
    add_report_opts(analyze, o);

    auto* check = app.add_subcommand("check", "evaluate one growth criterion");
    std::string kind;
    check->add_option("kind", kind, "mr | dominance | logmod | multiplier | width | completeness")
        ->required();
    check->add_option("--zeros", o.zeros_path, "zero sequence file (Z)");
    check->add_option("--zeros-w", o.zeros_w_path, "comparison sequence file (W)");
    check->add_option("--b", o.b, "type parameter b");
    check->add_option("--d", o.d_spec, "zero | invlog | growth-function CSV path");
    check->add_option("--g-sin", o.g_sin, "g = sin(pi b z) with this b");
    check->add_option("--g-zeros", o.g_zeros, "g = even product over this zero file");
    check->add_option("--p-sin", o.p_sin, "p = sin(pi b z) with this b");
    check->add_option("--p-zeros", o.p_zeros, "p = even product over this zero file");
    check->add_option("--mu-sin", o.mu_sin, "mu_hat = sin(pi b z) with this b");
    check->add_option("--mu-zeros", o.mu_zeros, "mu_hat = even product over this zero file");
    add_grid_opts(check, o);
    add_report_opts(check, o);

    auto* gap = app.add_subcommand("gap", "J vs half-plane log-sum gap functional");
    gap->add_option("--zeros", o.zeros_path, "zero sequence of f")->required();
    gap->add_option("--f-sin", o.f_sin, "f = sin(pi b z) with this b");
    add_grid_opts(gap, o);
    add_report_opts(gap, o);

    auto* synth = app.add_subcommand("synthesize", "positive sequence with counting floor(Q)");
    synth->add_option("--growth", o.growth_path, "Q growth-function CSV")->required();
    synth->add_option("--rmax", o.r_max, "synthesize points up to this radius");
    synth->add_option("--out", o.out_path, "output sequence CSV");

    auto* pipe = app.add_subcommand("pipeline", "majorant-product chain");
    pipe->add_option("--zeros", o.zeros_path, "zero sequence file (Z)")->required();
    pipe->add_option("--zeros-w", o.zeros_w_path, "comparison sequence file (W)")->required();
    pipe->add_option("--d", o.d_spec, "invlog | growth-function CSV path")->required();
    add_grid_opts(pipe, o);
    add_report_opts(pipe, o);

    CLI11_PARSE(app, argc, argv);
    zd::set_thread_count(o.threads);

    try {
        if (analyze->parsed()) return run_analyze(o);
        if (check->parsed()) return run_check(kind, o);
        if (gap->parsed()) return run_gap(o);
        if (synth->parsed()) return run_synthesize(o);
        if (pipe->parsed()) return run_pipeline(o);
    } catch (const zd::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
