// sdf-dirac: command-line front end.
//
// Subcommands:
//   solve         bound-state energies of one (n, kappa) configuration
//   table         regenerate a full reference table, optionally diffed
//   wavefunction  sampled spinor components as CSV
//   verify        dual-oracle verification report (shooting / NU / both)
//   approx        centrifugal-replacement diagnostic curves
//
// Exit codes: 0 success, 1 usage or validation error, 2 computational failure.

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdfdirac/sdfdirac.hpp"

namespace {

using nlohmann::json;
using namespace sdfdirac;

struct StateFlags {
    std::string symmetry = "spin";
    double M = 1.0;
    double D = 15.0;
    double a = 0.1;
    double r_e = 0.8;
    double C = 0.0;
    double A = 0.0;
    int n = 0;
    int kappa = -2;
};

void add_state_flags(CLI::App* cmd, StateFlags& f) {
    cmd->add_option("--symmetry", f.symmetry, "spin | pseudospin")
        ->check(CLI::IsMember({"spin", "pseudospin"}));
    cmd->add_option("--M", f.M, "rest mass (fm^-1)");
    cmd->add_option("--D", f.D, "dissociation energy (fm^-1)");
    cmd->add_option("--a", f.a, "potential range (fm^-1)");
    cmd->add_option("--re", f.r_e, "equilibrium distance (fm)");
    cmd->add_option("--C", f.C, "C_s (spin) or C_ps (pseudospin), fm^-1");
    cmd->add_option("--A", f.A, "tensor strength A = gamma Z");
    cmd->add_option("--n", f.n, "radial index (>= 0)");
    cmd->add_option("--kappa", f.kappa, "spin-orbit quantum number (!= 0)");
}

ProblemSpec to_spec(const StateFlags& f) {
    const Symmetry kind = f.symmetry == "spin" ? Symmetry::spin : Symmetry::pseudospin;
    if (!(f.D > 0.0) || !(f.r_e > 0.0) || !(f.a > 0.0))
        throw NonPositiveParameter("D, re and a must all be > 0");
    return validate_problem(ProblemSpec{f.M, make_potential_params(f.D, f.r_e, f.a),
                                        SymmetryLimit{kind, f.C}, TensorParams{f.A},
                                        QuantumNumbers{f.n, f.kappa}});
}

/// Writes to --out or stdout.
struct Sink {
    std::string path;

    template <class Fn> void write(Fn&& fn) const {
        if (path.empty()) {
            fn(std::cout);
        } else {
            std::ofstream os(path);
            if (!os)
                throw DomainError("cannot open output file: " + path);
            fn(os);
        }
    }
};

std::string now_stamp() {
    const std::time_t t = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// ---------------------------------------------------------------- solve

int cmd_solve(const StateFlags& flags, const std::string& format, const Sink& sink,
              std::optional<double> emin, std::optional<double> emax, int grid) {
    const ProblemSpec spec = to_spec(flags);
    SearchConfig cfg;
    cfg.grid_points = grid;
    cfg.E_min = emin;
    cfg.E_max = emax;
    const auto roots = solve_energy(spec, cfg);

    sink.write([&](std::ostream& os) {
        if (format == "json") {
            json out;
            out["symmetry"] = to_string(spec.limit.kind);
            out["n"] = spec.state.n;
            out["kappa"] = spec.state.kappa;
            out["roots"] = json::array();
            for (const auto& r : roots)
                out["roots"].push_back({{"E", r.E},
                                        {"residual", r.residual_at_root},
                                        {"bracket", {r.bracket.lo, r.bracket.hi}},
                                        {"admissible", r.admissible},
                                        {"iterations", r.iterations}});
            os << out.dump(2) << '\n';
        } else if (format == "csv") {
            os << "E,residual,bracket_lo,bracket_hi,admissible,iterations\n";
            for (const auto& r : roots)
                os << fmt_g(r.E) << ',' << fmt_g(r.residual_at_root, 6) << ','
                   << fmt_g(r.bracket.lo) << ',' << fmt_g(r.bracket.hi) << ','
                   << (r.admissible ? 1 : 0) << ',' << r.iterations << '\n';
        } else {
            os << to_string(spec.limit.kind) << " limit, n=" << spec.state.n
               << " kappa=" << spec.state.kappa << "\n";
            for (const auto& r : roots)
                os << "  E = " << fmt_g(r.E) << "  (|residual| = "
                   << fmt_g(std::abs(r.residual_at_root), 3)
                   << (r.admissible ? ", admissible" : ", not admissible") << ")\n";
        }
    });
    return 0;
}

// ---------------------------------------------------------------- table

int cmd_table(const std::string& preset_name, const std::string& format, const Sink& sink,
              const std::string& diff_path, bool stamp) {
    const Preset preset = make_preset(preset_from_string(preset_name));
    const auto rows = spectrum_table(preset);

    sink.write([&](std::ostream& os) {
        if (format == "json") {
            os << table_to_json(rows, preset.kind).dump(2) << '\n';
        } else if (format == "csv") {
            write_table_csv(os, rows, preset.kind, stamp ? now_stamp() : std::string{});
        } else {
            os << "# " << preset_name << " (" << to_string(preset.kind) << ")\n";
            for (const auto& r : rows) {
                os << "C=" << fmt_g(r.block.C, 3) << " re=" << fmt_g(r.block.r_e, 3)
                   << " A=" << fmt_g(r.A, 3) << "  " << to_string(r.label_negative)
                   << " E=" << fmt_g(r.E_negative) << "   " << to_string(r.label_positive)
                   << " E=" << fmt_g(r.E_positive) << "   split=" << fmt_g(r.splitting, 4)
                   << '\n';
            }
        }
    });

    if (!diff_path.empty()) {
        std::ifstream is(diff_path);
        if (!is)
            throw DomainError("cannot open reference file: " + diff_path);
        const auto ref = read_reference_csv(is);
        const double worst = max_abs_table_diff(rows, ref, preset.kind);
        std::cerr << "max |dE| against " << diff_path << " over " << ref.size()
                  << " reference energies: " << fmt_g(worst, 6) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- wavefunction

int cmd_wavefunction(const StateFlags& flags, std::optional<double> rmax, int points,
                     bool do_normalize, const Sink& sink) {
    if (points < 2)
        throw ParameterOutOfRange("--points must be >= 2");
    const ProblemSpec spec = to_spec(flags);
    const auto roots = solve_energy(spec);
    const EnergyRoot* root = nullptr;
    for (const auto& r : roots)
        if (r.admissible) {
            root = &r;
            break;
        }
    if (!root)
        throw NonNormalizable("no admissible bound state for this configuration");

    const double a = spec.potential.a;
    const double r_hi = rmax.value_or(200.0 / a);
    const auto grid = log_grid(1e-4 / a, r_hi, points);
    auto samples = sample_component(grid, *root, spec);

    double norm_constant = 1.0;
    double norm_integral = 0.0;
    if (do_normalize) {
        auto f = [&](double r) { return radial_component(r, *root, spec); };
        auto [scaled, norm] = normalize(std::move(samples), f, 200.0 / a);
        samples = std::move(scaled);
        norm_constant = norm.constant;
        norm_integral = integrate_gl(
            [&](double r) {
                const double v = norm.constant * f(r);
                return v * v;
            },
            0.0, norm.r_max, 128, 32);
    }
    const auto partner = partner_component(samples, *root, spec);

    const char* primary_name = spec.limit.kind == Symmetry::spin ? "F" : "G";
    const char* partner_name = spec.limit.kind == Symmetry::spin ? "G_partner" : "F_partner";
    sink.write([&](std::ostream& os) {
        os << "# " << to_string(spec.limit.kind) << " limit, n=" << spec.state.n
           << " kappa=" << spec.state.kappa << ", E = " << fmt_g(root->E) << "\n";
        os << "# normalized: " << (do_normalize ? "true" : "false")
           << ", norm_constant: " << fmt_g(norm_constant) << "\n";
        if (do_normalize)
            os << "# norm_integral: " << fmt_g(norm_integral) << "\n";
        os << "r,z," << primary_name << ',' << partner_name << '\n';
        for (std::size_t i = 0; i < samples.size(); ++i)
            os << fmt_g(samples[i].r) << ',' << fmt_g(samples[i].z) << ','
               << fmt_g(samples[i].value) << ',' << fmt_g(partner[i].value) << '\n';
    });
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyRow {
    double C, r_e, A;
    int n, kappa;
    double E_analytic;
    std::optional<double> E_shoot;
    std::optional<double> nu_residual;
    std::string failure;
};

VerifyRow verify_state(const ProblemSpec& spec, bool with_shooting, bool with_nu) {
    VerifyRow row{spec.limit.C, spec.potential.r_e, spec.tensor.A,
                  spec.state.n,  spec.state.kappa,  0.0,
                  std::nullopt,  std::nullopt,      {}};
    const auto roots = solve_energy(spec);
    const EnergyRoot* best = nullptr;
    for (const auto& r : roots)
        if (r.admissible) {
            best = &r;
            break;
        }
    if (!best)
        throw NoRootFound("no admissible analytic root");
    row.E_analytic = best->E;
    if (with_shooting) {
        const auto sh =
            shoot_eigenvalue(spec, Interval{best->E - 1e-6, best->E + 1e-6});
        row.E_shoot = sh.E;
    }
    if (with_nu)
        row.nu_residual = nu_quantization_residual(best->E, spec);
    return row;
}

int cmd_verify(const std::string& preset_name, const StateFlags& flags, bool has_state,
               const std::string& oracle, double tol_shoot, double tol_nu,
               const Sink& sink) {
    const bool with_shooting = oracle == "shooting" || oracle == "both";
    const bool with_nu = oracle == "nu" || oracle == "both";

    std::vector<ProblemSpec> states;
    if (!preset_name.empty()) {
        const Preset preset = make_preset(preset_from_string(preset_name));
        for (const auto& block : preset.blocks)
            for (const double A : preset.tensor_strengths)
                for (const int n : preset.radial_indices)
                    for (int ell = 1; ell <= preset.ell_max; ++ell)
                        for (const int kappa :
                             {preset.kind == Symmetry::spin ? -(ell + 1) : -ell,
                              preset.kind == Symmetry::spin ? ell : ell + 1})
                            states.push_back(ProblemSpec{
                                preset.M, make_potential_params(preset.D, block.r_e, preset.a),
                                SymmetryLimit{preset.kind, block.C}, TensorParams{A},
                                QuantumNumbers{n, kappa}});
    } else if (has_state) {
        states.push_back(to_spec(flags));
    } else {
        throw ParameterOutOfRange("verify needs --preset or explicit state flags");
    }

    std::vector<VerifyRow> rows(states.size());
    parallel_for(states.size(), [&](std::size_t i) {
        try {
            rows[i] = verify_state(states[i], with_shooting, with_nu);
        } catch (const Error& e) {
            rows[i] = VerifyRow{states[i].limit.C,   states[i].potential.r_e,
                                states[i].tensor.A,  states[i].state.n,
                                states[i].state.kappa, std::nan(""),
                                std::nullopt,        std::nullopt,
                                e.what()};
        }
    });

    bool all_ok = true;
    json out;
    out["oracle"] = oracle;
    out["tolerances"] = {{"shooting", tol_shoot}, {"nu", tol_nu}};
    out["states"] = json::array();
    for (const auto& r : rows) {
        bool ok = r.failure.empty();
        json e{{"C", r.C},    {"r_e", r.r_e}, {"A", r.A},
               {"n", r.n},    {"kappa", r.kappa}, {"E_analytic", r.E_analytic}};
        if (r.E_shoot) {
            const double dE = std::abs(*r.E_shoot - r.E_analytic);
            e["E_shoot"] = *r.E_shoot;
            e["delta_E"] = dE;
            ok = ok && dE <= tol_shoot;
        }
        if (r.nu_residual) {
            e["nu_residual"] = *r.nu_residual;
            ok = ok && std::abs(*r.nu_residual) <= tol_nu;
        }
        if (!r.failure.empty())
            e["error"] = r.failure;
        e["pass"] = ok;
        all_ok = all_ok && ok;
        out["states"].push_back(e);
    }
    out["all_within_tolerance"] = all_ok;
    sink.write([&](std::ostream& os) { os << out.dump(2) << '\n'; });
    return all_ok ? 0 : 2;
}

// ---------------------------------------------------------------- approx

int cmd_approx(const std::vector<double>& a_values, double rmin, double rmax, int points,
               const Sink& sink) {
    if (!(rmin > 0.0))
        throw DomainError("--rmin must be > 0");
    if (!(rmax > rmin))
        throw DomainError("--rmax must exceed --rmin");
    if (points < 2)
        throw ParameterOutOfRange("--points must be >= 2");
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = rmin + (rmax - rmin) * i / (points - 1);

    std::vector<std::vector<ApproxCurvePoint>> curves;
    curves.reserve(a_values.size());
    for (const double a : a_values)
        curves.push_back(approx_curves(a, grid));

    sink.write([&](std::ostream& os) {
        os << "# centrifugal term and its exponential-form replacement\n";
        os << "r,f1";
        for (const double a : a_values)
            os << ",f2(a=" << fmt_g(a, 3) << ')';
        os << '\n';
        for (int i = 0; i < points; ++i) {
            os << fmt_g(grid[i]) << ',' << fmt_g(curves.front()[i].f1);
            for (const auto& c : curves)
                os << ',' << fmt_g(c[i].f2);
            os << '\n';
        }
    });
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relativistic bound states of the shifted Deng-Fan well with a "
                 "Yukawa-like tensor interaction"};
    app.require_subcommand(1);

    StateFlags flags;
    std::string format = "pretty";
    Sink sink;
    std::optional<double> emin, emax;
    int grid = 2000;

    auto* solve = app.add_subcommand("solve", "solve one (n, kappa) configuration");
    add_state_flags(solve, flags);
    solve->add_option("--format", format, "csv | json | pretty")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    solve->add_option("--out", sink.path, "output path (default: stdout)");
    solve->add_option("--emin", emin, "search window lower edge");
    solve->add_option("--emax", emax, "search window upper edge");
    solve->add_option("--grid", grid, "scan points per admissible window");

    std::string preset_name, diff_path;
    bool stamp = false;
    auto* table = app.add_subcommand("table", "regenerate a reference table");
    table->add_option("--preset", preset_name, "table1 | table2")->required();
    table->add_option("--format", format, "csv | json | pretty")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    table->add_option("--out", sink.path, "output path (default: stdout)");
    table->add_option("--diff", diff_path, "reference CSV to compare against");
    table->add_flag("--stamp", stamp, "add a generation timestamp header");

    std::optional<double> rmax;
    int points = 2000;
    bool do_normalize = false;
    auto* wf = app.add_subcommand("wavefunction", "sample spinor components");
    add_state_flags(wf, flags);
    wf->add_option("--rmax", rmax, "outer grid radius (default 200/a)");
    wf->add_option("--points", points, "number of grid points");
    wf->add_flag("--normalize", do_normalize, "rescale to unit L2 norm");
    wf->add_option("--out", sink.path, "output path (default: stdout)");

    std::string oracle = "both";
    double tol_shoot = 1e-8, tol_nu = 1e-6;
    std::string verify_preset;
    auto* verify = app.add_subcommand("verify", "dual-oracle verification report");
    add_state_flags(verify, flags);
    verify->add_option("--preset", verify_preset, "table1 | table2");
    verify->add_option("--oracle", oracle, "shooting | nu | both")
        ->check(CLI::IsMember({"shooting", "nu", "both"}));
    verify->add_option("--tol-shoot", tol_shoot, "max |E_shoot - E_analytic|");
    verify->add_option("--tol-nu", tol_nu, "max |lambda - lambda_n| at the root");
    verify->add_option("--out", sink.path, "output path (default: stdout)");

    std::vector<double> a_values{0.1, 0.5, 1.0};
    double rmin_a = 0.05, rmax_a = 20.0;
    int points_a = 400;
    auto* approx = app.add_subcommand("approx", "centrifugal replacement curves");
    approx->add_option("--a-values", a_values, "range parameters")->delimiter(',');
    approx->add_option("--rmin", rmin_a, "first radius");
    approx->add_option("--rmax", rmax_a, "last radius");
    approx->add_option("--points", points_a, "number of points");
    approx->add_option("--out", sink.path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (solve->parsed())
            return cmd_solve(flags, format, sink, emin, emax, grid);
        if (table->parsed())
            return cmd_table(preset_name, format, sink, diff_path, stamp);
        if (wf->parsed())
            return cmd_wavefunction(flags, rmax, points, do_normalize, sink);
        if (verify->parsed())
            return cmd_verify(verify_preset, flags, verify_preset.empty(), oracle,
                              tol_shoot, tol_nu, sink);
        if (approx->parsed())
            return cmd_approx(a_values, rmin_a, rmax_a, points_a, sink);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const NonPositiveParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const InvalidKappa& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ParameterOutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "computation failed: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
