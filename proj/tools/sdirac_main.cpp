// sdirac: spectra, Green's-function kernels, wavefunction export and the
// verification suites for supersymmetric Dirac Hamiltonians.
//
// Exit codes: 0 ok, 1 computation failure, 2 usage/config error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "sdirac/errors.hpp"
#include "sdirac/io.hpp"
#include "sdirac/oracles.hpp"
#include "sdirac/spectra.hpp"
#include "sdirac/susy.hpp"
#include "sdirac/verify.hpp"
#include "sdirac/wavefunctions.hpp"

namespace {

using namespace sdirac;

struct RunConfig {
    std::string model = "dirac-oscillator";
    double omega = 1.0;
    double gamma = 1.0;
    double m = 1.0, m0 = -1.0, c = 1.0, hbar = 1.0; // m0 < 0 means "m0 = m"
    std::string jmax = "5/2";
    int nmax = 3;
    double rmax = -1.0; // model default when negative
    int npoints = 4000;
    std::string format = "json";
    std::string output;    // empty = stdout
    std::string config;    // optional key=value file
    double tol_override = -1.0;
};

PhysicalParams params_of(const RunConfig& cfg) {
    PhysicalParams p;
    p.m = cfg.m;
    p.m0 = cfg.m0 < 0.0 ? cfg.m : cfg.m0;
    p.c = cfg.c;
    p.hbar = cfg.hbar;
    if (cfg.model == "free-broken") p.m0 = 0.0; // the broken realisation has M0 = 0
    p.validate();
    return p;
}

ModelSpec model_of(const RunConfig& cfg) {
    if (cfg.model == "free") return FreeDirac{};
    if (cfg.model == "free-broken") return FreeDiracBrokenSusy{};
    if (cfg.model == "dirac-oscillator") return DiracOscillator{cfg.omega};
    if (cfg.model == "linear") return LinearSuperpotential{cfg.gamma};
    if (cfg.model == "dirac-oscillator-1d") return DiracOscillator1D{cfg.omega};
    throw DomainError("unknown model '" + cfg.model +
                      "' (free|free-broken|dirac-oscillator|linear|dirac-oscillator-1d)");
}

// file keys mirror the long flag names; flags override the file
void apply_config_file(RunConfig& cfg, const std::set<std::string>& flags_seen) {
    if (cfg.config.empty()) return;
    const auto kv = parse_config_file(cfg.config);
    auto want = [&](const char* key) {
        return kv.count(key) > 0 && flags_seen.count(key) == 0;
    };
    if (want("model")) cfg.model = kv.at("model");
    if (want("omega")) cfg.omega = std::stod(kv.at("omega"));
    if (want("gamma")) cfg.gamma = std::stod(kv.at("gamma"));
    if (want("m")) cfg.m = std::stod(kv.at("m"));
    if (want("m0")) cfg.m0 = std::stod(kv.at("m0"));
    if (want("c")) cfg.c = std::stod(kv.at("c"));
    if (want("hbar")) cfg.hbar = std::stod(kv.at("hbar"));
    if (want("jmax")) cfg.jmax = kv.at("jmax");
    if (want("nmax")) cfg.nmax = std::stoi(kv.at("nmax"));
    if (want("rmax")) cfg.rmax = std::stod(kv.at("rmax"));
    if (want("npoints")) cfg.npoints = std::stoi(kv.at("npoints"));
    if (want("format")) cfg.format = kv.at("format");
    if (want("output")) cfg.output = kv.at("output");
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::fputs(text.c_str(), stdout);
        if (!text.empty() && text.back() != '\n') std::fputc('\n', stdout);
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw DomainError("cannot open output file '" + cfg.output + "'");
    out << text;
}

std::string spectrum_json(const ModelSpec& ms, const PhysicalParams& p,
                          const std::vector<SpectralLine>& lines) {
    JsonWriter w;
    w.begin_object();
    w.key("model");
    w.value_string(model_name(ms));
    w.key("eps0");
    w.value_number(epsilon0(p));
    try {
        const ContinuumBranch cb = continuum_branch(ms, p);
        w.key("continuum_threshold");
        w.value_number(cb.threshold);
    } catch (const NoContinuumError&) {
        w.key("continuum_threshold");
        w.value_string("none");
    }
    w.key("lines");
    w.begin_array();
    for (const auto& line : lines) {
        w.begin_object();
        w.key("twice_j");
        w.value_int(line.ch.twice_j);
        w.key("degeneracy");
        w.value_int(line.ch.twice_j + 1);
        w.key("sigma");
        w.value_int(line.ch.sigma);
        w.key("n");
        w.value_int(line.n);
        w.key("branch");
        w.value_int(line.branch);
        w.key("eps");
        w.value_number(line.eps);
        w.key("E");
        w.value_number(line.E);
        w.key("flag");
        w.value_string(line.zero_mode ? "zero mode, unpaired (infinitely degenerate in j)" : "");
        w.key("paired_with");
        const auto partner = susy_partner_index(line.model, line, p);
        if (partner) {
            w.value_string("2j=" + std::to_string(partner->ch.twice_j) +
                           ",sigma=" + std::to_string(partner->ch.sigma) +
                           ",n=" + std::to_string(partner->n) +
                           ",branch=" + std::to_string(partner->branch));
        } else {
            w.value_string("none");
        }
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

std::string spectrum_csv(const std::vector<SpectralLine>& lines) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& line : lines)
        rows.push_back({std::to_string(line.ch.twice_j), std::to_string(line.ch.twice_j + 1),
                        std::to_string(line.ch.sigma), std::to_string(line.n),
                        std::to_string(line.branch), format_sci(line.eps), format_sci(line.E),
                        line.zero_mode ? "zero-mode" : ""});
    return csv_table({"twice_j", "degeneracy", "sigma", "n", "branch", "eps", "E", "flag"}, rows);
}

int cmd_spectrum(const RunConfig& cfg) {
    const PhysicalParams p = params_of(cfg);
    const ModelSpec ms = model_of(cfg);
    const int tjmax = parse_half_integer_doubled(cfg.jmax);

    std::vector<SpectralLine> lines = spectrum_table(ms, p, tjmax, cfg.nmax, true);
    if (lines.empty()) {
        // purely continuous spectrum: report the threshold and fail per contract
        try {
            const ContinuumBranch cb = continuum_branch(ms, p);
            std::fprintf(stderr,
                         "spectrum: %s has a purely continuous spectrum; threshold E = %s\n",
                         model_name(ms).c_str(), format_sci(cb.threshold).c_str());
        } catch (const NoContinuumError&) {
            std::fprintf(stderr, "spectrum: no discrete lines found\n");
        }
        return 1;
    }
    // fix the partner display to use the run parameters
    if (cfg.format == "csv")
        emit(cfg, spectrum_csv(lines));
    else
        emit(cfg, spectrum_json(ms, p, lines));
    return 0;
}

int cmd_greens(const RunConfig& cfg, const std::string& zeta_s, const std::string& z_s,
               const std::string& channel_s, const std::string& sector_s, double r1, double r2,
               const std::string& p1_s, const std::string& p2_s, const std::string& jmax_s) {
    const PhysicalParams p = params_of(cfg);
    const ModelSpec ms = model_of(cfg);

    JsonWriter w;
    w.begin_object();
    w.key("model");
    w.value_string(model_name(ms));

    if (!z_s.empty()) {
        // full 4x4 kernel between two 3D points
        const Complex z = parse_complex(z_s);
        const Vec3 a = parse_vec3(p2_s), b = parse_vec3(p1_s);
        Matrix4c G;
        if (std::holds_alternative<FreeDirac>(ms)) {
            G = free_dirac_green(a, b, z, p);
        } else {
            const int tjmax = jmax_s.empty() ? 25 : parse_half_integer_doubled(jmax_s);
            ChannelKernel gp, gm;
            if (const auto* osc = std::get_if<DiracOscillator>(&ms)) {
                const double omega = osc->omega;
                gp = [omega, z, &p](const Channel& ch, double ro, double ri) {
                    ResolventQuery q{z * z, ro, ri, ch, +1};
                    return oscillator_radial_kernel(q, omega, p);
                };
                gm = [omega, z, &p](const Channel& ch, double ro, double ri) {
                    ResolventQuery q{z * z, ro, ri, ch, -1};
                    return oscillator_radial_kernel(q, omega, p);
                };
            } else if (const auto* lin = std::get_if<LinearSuperpotential>(&ms)) {
                const double gamma = lin->gamma;
                gp = [gamma, z, &p](const Channel& ch, double ro, double ri) {
                    ResolventQuery q{z * z, ro, ri, ch, +1};
                    return linear_radial_kernel(q, gamma, p);
                };
                gm = [gamma, z, &p](const Channel& ch, double ro, double ri) {
                    ResolventQuery q{z * z, ro, ri, ch, -1};
                    return linear_radial_kernel(q, gamma, p);
                };
            } else {
                throw DomainError("greens: 4x4 blocks need free, oscillator or linear model");
            }
            const Green4Evaluator ev = dirac_green_blocks(gp, gm, z, ms, p);
            G = ev(a, b, tjmax);
        }
        w.key("z");
        w.value_complex(z);
        w.key("matrix");
        w.begin_array();
        for (int i = 0; i < 4; ++i) {
            w.begin_array();
            for (int k = 0; k < 4; ++k) w.value_complex(G[i][k]);
            w.end_array();
        }
        w.end_array();
        w.end_object();
        emit(cfg, w.str());
        return 0;
    }

    // sector kernel at fixed channel
    const Complex zeta = parse_complex(zeta_s);
    ResolventQuery q;
    q.zeta = zeta;
    q.r_out = r2;
    q.r_in = r1;
    q.sector = (sector_s == "-" || sector_s == "-1") ? -1 : +1;
    {
        // channel token like j=1/2,sigma=+1
        int tj = 1, sg = +1;
        std::string tok = channel_s;
        const auto comma = tok.find(',');
        const std::string jpart = tok.substr(0, comma);
        const std::string spart = comma == std::string::npos ? "" : tok.substr(comma + 1);
        if (jpart.rfind("j=", 0) == 0) tj = parse_half_integer_doubled(jpart.substr(2));
        if (spart.rfind("sigma=", 0) == 0) sg = std::stoi(spart.substr(6));
        q.ch = Channel(tj, tj >= 1 ? 1 : tj, sg);
    }

    KernelParams kp;
    Complex g;
    if (const auto* osc = std::get_if<DiracOscillator>(&ms)) {
        g = oscillator_radial_kernel(q, osc->omega, p, &kp);
    } else if (const auto* lin = std::get_if<LinearSuperpotential>(&ms)) {
        g = linear_radial_kernel(q, lin->gamma, p, &kp);
    } else if (std::holds_alternative<FreeDirac>(ms)) {
        g = free_radial_kernel(q, p);
        kp.mu = mu_of_zeta(q.zeta, p);
    } else {
        throw DomainError("greens: sector kernels exist for free, oscillator, linear models");
    }
    w.key("zeta");
    w.value_complex(zeta);
    w.key("twice_j");
    w.value_int(q.ch.twice_j);
    w.key("sigma");
    w.value_int(q.ch.sigma);
    w.key("sector");
    w.value_int(q.sector);
    w.key("r_in");
    w.value_number(q.r_in);
    w.key("r_out");
    w.value_number(q.r_out);
    w.key("kernel");
    w.value_complex(g);
    w.key("params");
    w.begin_object();
    w.key("mu");
    w.value_complex(kp.mu);
    w.key("nu");
    w.value_complex(kp.nu);
    w.key("rho");
    w.value_number(kp.rho);
    w.key("Lambda");
    w.value_number(kp.Lambda);
    w.key("Omega");
    w.value_complex(kp.Omega);
    w.end_object();
    w.end_object();
    emit(cfg, w.str());
    return 0;
}

int cmd_states(const RunConfig& cfg, const std::string& j_s, const std::string& sigma_s, int n,
               int branch) {
    const PhysicalParams p = params_of(cfg);
    const ModelSpec ms = model_of(cfg);
    const Channel ch(parse_half_integer_doubled(j_s), 1, std::stoi(sigma_s));
    RadialGrid g = default_grid(ms, p, cfg.npoints);
    if (cfg.rmax > 0.0) g = RadialGrid(0.0, cfg.rmax, cfg.npoints);

    const SpectralLine line = make_line(ms, ch, n, branch, p);
    const SpinorField field = build_4spinor(line, ms, p, g);

    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < g.n_points; ++i)
        rows.push_back({format_sci(g.r(i)), format_sci(field.upper.radial.values[i].real()),
                        format_sci(field.upper.radial.values[i].imag()),
                        format_sci(field.lower.radial.values[i].real()),
                        format_sci(field.lower.radial.values[i].imag())});
    emit(cfg, csv_table({"r", "upper_re", "upper_im", "lower_re", "lower_im"}, rows));
    return 0;
}

int cmd_poles(const RunConfig& cfg, double zeta_lo, double zeta_hi, const std::string& j_s,
              const std::string& sigma_s, const std::string& sector_s) {
    const PhysicalParams p = params_of(cfg);
    const ModelSpec ms = model_of(cfg);
    const Channel ch(parse_half_integer_doubled(j_s), 1, std::stoi(sigma_s));
    const int sector = (sector_s == "-" || sector_s == "-1") ? -1 : +1;

    const PoleScan scan = pole_scan(ms, ch, sector, zeta_lo, zeta_hi, p);
    JsonWriter w;
    w.begin_object();
    w.key("model");
    w.value_string(model_name(ms));
    w.key("twice_j");
    w.value_int(ch.twice_j);
    w.key("sigma");
    w.value_int(ch.sigma);
    w.key("sector");
    w.value_int(sector);
    w.key("window");
    w.begin_array();
    w.value_number(zeta_lo);
    w.value_number(zeta_hi);
    w.end_array();
    w.key("poles");
    w.begin_array();
    for (std::size_t k = 0; k < scan.zetas.size(); ++k) {
        w.begin_object();
        w.key("n");
        w.value_int(scan.n_index[k]);
        w.key("zeta");
        w.value_number(scan.zetas[k]);
        w.key("E_plus");
        w.value_number(std::sqrt(scan.zetas[k]));
        w.end_object();
    }
    w.end_array();
    w.key("window_truncated");
    w.value_bool(scan.window_truncated);
    if (scan.window_truncated) {
        w.key("first_excluded_n");
        w.value_int(scan.first_excluded_n);
    }
    w.end_object();
    emit(cfg, w.str());
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, const std::string& model_filter) {
    const PhysicalParams p = params_of(cfg);
    std::optional<std::string> filter;
    if (!model_filter.empty()) filter = model_filter;
    const SuiteRun run = run_suite(suite, filter, p, true);
    emit(cfg, suite_report_json(run));
    for (const auto& rep : run.reports) {
        for (const auto& c : rep.checks)
            if (!c.pass)
                std::fprintf(stderr, "FAIL %s / %s: measured %.3e tolerance %.3e\n",
                             rep.name.c_str(), c.name.c_str(), c.measured, c.tolerance);
    }
    return run.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"supersymmetric Dirac Hamiltonians: spectra, kernels, verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::set<std::string> seen;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--model", cfg.model, "free|free-broken|dirac-oscillator|linear|dirac-oscillator-1d");
        sub->add_option("--omega", cfg.omega, "oscillator frequency");
        sub->add_option("--gamma", cfg.gamma, "linear superpotential slope");
        sub->add_option("--m", cfg.m, "mass parameter");
        sub->add_option("--m0", cfg.m0, "rest mass (default: m)");
        sub->add_option("--c", cfg.c, "speed of light");
        sub->add_option("--hbar", cfg.hbar, "Planck constant");
        sub->add_option("--rmax", cfg.rmax, "grid extent");
        sub->add_option("--npoints", cfg.npoints, "grid points");
        sub->add_option("--format", cfg.format, "json|csv");
        sub->add_option("--output", cfg.output, "output path (default stdout)");
        sub->add_option("--config", cfg.config, "key=value config file (flags override)");
    };

    auto* sp = app.add_subcommand("spectrum", "discrete spectrum table");
    add_common(sp);
    sp->add_option("--jmax", cfg.jmax, "largest j, e.g. 5/2");
    sp->add_option("--nmax", cfg.nmax, "largest radial index");

    std::string zeta_s, z_s, channel_s = "j=1/2,sigma=+1", sector_s = "+";
    double r1 = 0.7, r2 = 1.2;
    std::string p1_s = "0,0,0", p2_s = "0,0,1", jmax_pw;
    auto* gr = app.add_subcommand("greens", "resolvent kernel evaluation");
    add_common(gr);
    gr->add_option("--zeta", zeta_s, "complex zeta 'a+bi' (sector kernel)");
    gr->add_option("--z", z_s, "complex z 'a+bi' (full 4x4 kernel)");
    gr->add_option("--channel", channel_s, "j=1/2,sigma=+1");
    gr->add_option("--sector", sector_s, "+|-");
    gr->add_option("--r1", r1, "first radius");
    gr->add_option("--r2", r2, "second radius");
    gr->add_option("--p1", p1_s, "source point x,y,z");
    gr->add_option("--p2", p2_s, "field point x,y,z");
    gr->add_option("--jmax-partial-wave", jmax_pw, "partial-wave cutoff j");

    std::string st_j = "1/2", st_sigma = "1";
    int st_n = 0, st_branch = 1;
    auto* st = app.add_subcommand("states", "wavefunction CSV export");
    add_common(st);
    st->add_option("--j", st_j, "total angular momentum, e.g. 1/2");
    st->add_option("--sigma", st_sigma, "+1|-1");
    st->add_option("--n", st_n, "radial index");
    st->add_option("--branch", st_branch, "+1|-1");

    double po_lo = 0.5, po_hi = 18.0;
    std::string po_j = "1/2", po_sigma = "1", po_sector = "+";
    auto* po = app.add_subcommand("poles", "bound-state pole scan");
    add_common(po);
    po->add_option("--zeta-min", po_lo, "window lower edge");
    po->add_option("--zeta-max", po_hi, "window upper edge");
    po->add_option("--j", po_j, "channel j");
    po->add_option("--sigma", po_sigma, "+1|-1");
    po->add_option("--sector", po_sector, "+|-");

    std::string ve_suite = "all", ve_model;
    auto* ve = app.add_subcommand("verify", "run verification suites");
    add_common(ve);
    ve->add_option("--suite", ve_suite, "algebra|spectra|kernels|intertwining|limits|all");
    ve->add_option("--filter-model", ve_model, "restrict the algebra suite to one model");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (const auto* sub : {sp, gr, st, po, ve})
            if (sub->parsed())
                for (const auto* opt : sub->get_options())
                    if (opt->count() > 0 && opt->get_name().size() > 2)
                        seen.insert(opt->get_name().substr(2));
        apply_config_file(cfg, seen);
        if (cfg.model == "free-broken") cfg.m0 = 0.0;

        if (sp->parsed()) return cmd_spectrum(cfg);
        if (gr->parsed())
            return cmd_greens(cfg, zeta_s, z_s, channel_s, sector_s, r1, r2, p1_s, p2_s, jmax_pw);
        if (st->parsed()) return cmd_states(cfg, st_j, st_sigma, st_n, st_branch);
        if (po->parsed()) return cmd_poles(cfg, po_lo, po_hi, po_j, po_sigma, po_sector);
        if (ve->parsed()) return cmd_verify(cfg, ve_suite, ve_model);
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
