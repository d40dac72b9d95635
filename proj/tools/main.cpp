#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncp/actions.hpp"
#include "ncp/config.hpp"
#include "ncp/cotangent.hpp"
#include "ncp/io.hpp"
#include "ncp/kibler.hpp"
#include "ncp/polynomials.hpp"
#include "ncp/quadrature.hpp"
#include "ncp/radial.hpp"
#include "ncp/types.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string config_path;
    std::string potential = "cotangent";
    std::string out_path;
    std::string format = "csv";
    int samples = 2000;
    int nmax = 5;
    double range = 6.0 * M_PI;
    std::optional<double> mu, kappa, rho, gamma, hbar, energy_abs, alpha_theta, alpha_phi;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "parameter file (key = value lines)")
        ->required();
    cmd->add_option("--potential", opts.potential, "cotangent | kibler")
        ->check(CLI::IsMember({"cotangent", "kibler"}));
    cmd->add_option("--out", opts.out_path, "output path (default stdout)");
    cmd->add_option("--format", opts.format, "csv | json | svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    cmd->add_option("--samples", opts.samples, "trajectory sample count")->check(CLI::PositiveNumber);
    cmd->add_option("--nmax", opts.nmax, "largest quantum number per component")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--range", opts.range, "angle range sampled, radians");
    cmd->add_option("--mu", opts.mu, "override mu");
    cmd->add_option("--kappa", opts.kappa, "override kappa");
    cmd->add_option("--rho", opts.rho, "override rho");
    cmd->add_option("--gamma", opts.gamma, "override gamma");
    cmd->add_option("--hbar", opts.hbar, "override hbar");
    cmd->add_option("--energy-abs", opts.energy_abs, "override energy_abs");
    cmd->add_option("--alpha-theta", opts.alpha_theta, "override alpha_theta");
    cmd->add_option("--alpha-phi", opts.alpha_phi, "override alpha_phi");
}

ncp::ModelConfig resolve_config(const CommonOpts& opts) {
    ncp::ModelConfig config = ncp::load_config(opts.config_path);
    if (opts.mu) config.params.mu = *opts.mu;
    if (opts.kappa) config.params.kappa = *opts.kappa;
    if (opts.rho) config.params.rho = *opts.rho;
    if (opts.gamma) config.params.gamma = *opts.gamma;
    if (opts.hbar) config.params.hbar = *opts.hbar;
    if (opts.energy_abs) config.consts.energy_abs = *opts.energy_abs;
    if (opts.alpha_theta) config.consts.alpha_theta = *opts.alpha_theta;
    if (opts.alpha_phi) config.consts.alpha_phi = *opts.alpha_phi;
    config.params.validate();
    config.consts.validate();
    return config;
}

ncp::PotentialKind kind_of(const CommonOpts& opts) {
    return opts.potential == "kibler" ? ncp::PotentialKind::Kibler
                                      : ncp::PotentialKind::Cotangent;
}

/// Writes `text` to opts.out_path, or stdout when no path was given.
void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + opts.out_path);
    out << text;
}

int cmd_validate(const CommonOpts& opts) {
    const ncp::ModelConfig config = resolve_config(opts);
    const ncp::ValidationReport report =
        ncp::validate(config.params, config.consts, kind_of(opts));
    std::ostringstream out;
    out << "potential: " << opts.potential << "\n";
    out << "bound: " << (report.is_bound ? "yes" : "no") << "\n";
    for (const auto& v : report.violated_constraints)
        out << "violated: " << v.name << "  (lhs " << v.lhs << " vs rhs " << v.rhs << ")\n";
    for (const auto& note : report.degenerate_notes) out << "marginal: " << note << "\n";
    emit(opts, out.str());
    return report.is_bound ? kExitOk : kExitDomain;
}

int cmd_orbit(const CommonOpts& opts) {
    const ncp::ModelConfig config = resolve_config(opts);
    const ncp::PotentialKind kind = kind_of(opts);
    const ncp::Trajectory traj =
        kind == ncp::PotentialKind::Cotangent
            ? ncp::sample_orbit_cotangent(config.params, config.consts, opts.range, opts.samples)
            : ncp::sample_orbit_kibler(config.params, config.consts, opts.range, opts.samples);
    std::ostringstream out;
    if (opts.format == "csv") {
        ncp::write_trajectory_csv(out, traj);
    } else if (opts.format == "json") {
        ncp::write_trajectory_json(out, traj, config, kind, opts.samples, opts.range);
    } else {
        ncp::write_trajectory_svg(out, traj);
    }
    emit(opts, out.str());
    return kExitOk;
}

int cmd_surface(const CommonOpts& opts) {
    const ncp::ModelConfig config = resolve_config(opts);
    if (kind_of(opts) == ncp::PotentialKind::Cotangent) {
        if (config.params.gamma != 0.0) {
            std::cerr << "error: the cotangent orbit is confined to a cone only for gamma = 0; "
                         "gamma = "
                      << config.params.gamma << " has no fixed surface\n";
            return kExitDomain;
        }
        emit(opts, ncp::cone_json(ncp::cone_geometry(config.params, config.consts)) + "\n");
    } else {
        const ncp::RadialOrbit radial =
            ncp::radial_turning_points(config.params, config.consts);
        emit(opts,
             ncp::quadric_json(ncp::quadric_surface(config.params, config.consts, radial)) + "\n");
    }
    return kExitOk;
}

int cmd_actions(const CommonOpts& opts) {
    const ncp::ModelConfig config = resolve_config(opts);
    const ncp::PotentialKind kind = kind_of(opts);
    const ncp::ActionSet actions =
        ncp::actions_from_constants(config.params, config.consts, kind);
    const ncp::Frequencies freq = ncp::frequencies(config.params, actions);
    nlohmann::json doc;
    doc["potential"] = opts.potential;
    doc["j_r"] = actions.j_r;
    doc["j_theta"] = actions.j_theta;
    doc["j_phi"] = actions.j_phi;
    doc["energy"] = ncp::hamiltonian(config.params, actions);
    doc["omega_r"] = freq.omega_r;
    doc["omega_theta"] = freq.omega_theta;
    doc["omega_phi"] = freq.omega_phi;
    emit(opts, doc.dump(2) + "\n");
    return kExitOk;
}

int cmd_spectrum(const CommonOpts& opts) {
    const ncp::ModelConfig config = resolve_config(opts);
    const ncp::PotentialKind kind = kind_of(opts);
    std::ostringstream csv;
    nlohmann::json rows = nlohmann::json::array();
    csv << "n_r,n_theta,n_phi,e_bsq,e_qm,rel_diff,status\n";
    for (int nr = 0; nr <= opts.nmax; ++nr)
        for (int nt = 0; nt <= opts.nmax; ++nt)
            for (int np = 0; np <= opts.nmax; ++np) {
                const ncp::QuantumNumbers qn{nr, nt, np};
                try {
                    const double eb = ncp::bsq_energy(config.params, qn, kind);
                    const double eq = ncp::qm_energy(config.params, qn, kind);
                    const double rel = std::fabs(eb - eq) / std::fabs(eq);
                    char line[160];
                    std::snprintf(line, sizeof line, "%d,%d,%d,%.15g,%.15g,%.3g,bound\n", nr, nt,
                                  np, eb, eq, rel);
                    csv << line;
                    rows.push_back({{"n_r", nr},
                                    {"n_theta", nt},
                                    {"n_phi", np},
                                    {"e_bsq", eb},
                                    {"e_qm", eq},
                                    {"rel_diff", rel},
                                    {"status", "bound"}});
                } catch (const ncp::NoBoundState&) {
                    csv << nr << ',' << nt << ',' << np << ",,,,no_bound_state\n";
                    rows.push_back({{"n_r", nr},
                                    {"n_theta", nt},
                                    {"n_phi", np},
                                    {"status", "no_bound_state"}});
                }
            }
    if (opts.format == "json") {
        nlohmann::json doc;
        doc["potential"] = opts.potential;
        doc["nmax"] = opts.nmax;
        doc["levels"] = rows;
        emit(opts, doc.dump(2) + "\n");
    } else {
        emit(opts, csv.str());
    }
    return kExitOk;
}

struct Check {
    std::string name;
    double value;
    double tol;
    bool converged = true;
};

int cmd_verify(const CommonOpts& opts) {
    const ncp::ModelConfig config = resolve_config(opts);
    const ncp::PotentialKind kind = kind_of(opts);
    const ncp::PhysicalParams& params = config.params;
    const ncp::SeparationConstants& consts = config.consts;
    std::vector<Check> checks;
    auto run = [&](const std::string& name, double tol, auto&& fn) {
        Check c{name, 0.0, tol};
        try {
            c.value = fn();
        } catch (const ncp::OracleFailure& e) {
            c.value = e.achieved_error;
            c.converged = false;
        }
        checks.push_back(c);
    };

    run("bound-parameter validation", 0.5, [&] {
        return ncp::validate(params, consts, kind).is_bound ? 0.0 : 1.0;
    });
    run("J_r closed form vs quadrature", 1e-10, [&] {
        return std::fabs(ncp::j_r(params, consts) - ncp::j_r_quadrature(params, consts, 1e-12));
    });
    run("J_theta closed form vs quadrature", 1e-10, [&] {
        const double closed = kind == ncp::PotentialKind::Cotangent
                                  ? ncp::j_theta_cotangent(params, consts)
                                  : ncp::j_theta_kibler(params, consts);
        return std::fabs(closed - ncp::j_theta_quadrature(params, consts, kind, 1e-12));
    });
    run("H(J) round trip", 1e-12, [&] {
        const ncp::ActionSet actions = ncp::actions_from_constants(params, consts, kind);
        return std::fabs(ncp::hamiltonian(params, actions) + consts.energy_abs) /
               consts.energy_abs;
    });
    if (kind == ncp::PotentialKind::Cotangent) {
        run("psi(phi) closed form vs quadrature", 1e-9, [&] {
            const ncp::CotangentOrbitConstants cc = ncp::cotangent_constants(params, consts);
            double worst = 0.0;
            for (int i = 1; i <= 12; ++i) {
                const double phi = 6.0 * M_PI * i / 12.0;
                worst = std::fmax(worst, std::fabs(ncp::psi_of_phi(cc, phi) -
                                                   ncp::psi_of_phi_quadrature(params, consts, phi,
                                                                              1e-12)));
            }
            return worst;
        });
        if (params.gamma == 0.0) {
            run("cone confinement residual", 1e-8, [&] {
                const ncp::Trajectory traj =
                    ncp::sample_orbit_cotangent(params, consts, 6.0 * M_PI, 2000);
                const ncp::CotangentOrbitConstants cc = ncp::cotangent_constants(params, consts);
                double worst = 0.0;
                for (const auto& s : traj.samples) {
                    const double res =
                        s.z - cc.C * s.x - cc.B * std::sqrt(s.x * s.x + s.y * s.y);
                    worst = std::fmax(worst, std::fabs(res) / s.r);
                }
                return worst;
            });
        }
    } else {
        run("phi(psi) closed form vs quadrature", 1e-9, [&] {
            const ncp::KiblerOrbitConstants kc = ncp::kibler_constants(params, consts);
            double worst = 0.0;
            for (int i = 1; i <= 12; ++i) {
                const double psi = 6.0 * M_PI * i / 12.0;
                worst = std::fmax(worst, std::fabs(ncp::phi_of_psi(kc, psi) -
                                                   ncp::phi_of_psi_quadrature(params, consts, psi,
                                                                              1e-12)));
            }
            return worst;
        });
        run("quadric confinement residual", 1e-9, [&] {
            const ncp::RadialOrbit radial = ncp::radial_turning_points(params, consts);
            const ncp::QuadricSurface quad = ncp::quadric_surface(params, consts, radial);
            const ncp::Trajectory traj =
                ncp::sample_orbit_kibler(params, consts, 6.0 * M_PI, 2000);
            const double rhs = 2.0 * radial.r1 * radial.r2;
            double worst = 0.0;
            for (const auto& s : traj.samples)
                worst = std::fmax(worst, std::fabs(quad.p * s.r + quad.q * s.z - rhs) / rhs);
            return worst;
        });
    }
    run("energy conservation along orbit", 1e-5, [&] {
        const double angle_span = 6.0 * M_PI;
        double periods;  // radial periods covered by the sampled span
        if (kind == ncp::PotentialKind::Cotangent) {
            const ncp::CotangentOrbitConstants cc = ncp::cotangent_constants(params, consts);
            periods = ncp::psi_of_phi(cc, angle_span) / (2.0 * M_PI);
        } else {
            periods = angle_span / (2.0 * M_PI);
        }
        const int n = static_cast<int>(std::ceil(4000.0 * periods)) + 1;
        const ncp::Trajectory traj =
            kind == ncp::PotentialKind::Cotangent
                ? ncp::sample_orbit_cotangent(params, consts, angle_span, n)
                : ncp::sample_orbit_kibler(params, consts, angle_span, n);
        return ncp::energy_along_orbit(params, traj, kind, consts.energy_abs);
    });
    run("semiclassical vs wave-equation spectrum", 1e-13, [&] {
        double worst = 0.0;
        for (int nr = 0; nr <= 4; ++nr)
            for (int nt = 0; nt <= 4; ++nt)
                for (int np = 0; np <= 4; ++np) {
                    const ncp::QuantumNumbers qn{nr, nt, np};
                    try {
                        const double eb = ncp::bsq_energy(params, qn, kind);
                        const double eq = ncp::qm_energy(params, qn, kind);
                        worst = std::fmax(worst, std::fabs(eb - eq) / std::fabs(eq));
                    } catch (const ncp::NoBoundState&) {
                    }
                }
        return worst;
    });

    std::ostringstream out;
    bool all_pass = true;
    for (const auto& c : checks) {
        const bool pass = c.converged && c.value < c.tol;
        all_pass = all_pass && pass;
        out << (pass ? "PASS" : "FAIL") << "  " << c.name << ": " << c.value << " (tol " << c.tol
            << ")" << (c.converged ? "" : "  [oracle did not converge]") << "\n";
    }
    out << (all_pass ? "all checks passed\n" : "verification failed\n");
    emit(opts, out.str());
    return all_pass ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound orbits, actions, and spectra of two non-central Coulombic potentials"};
    app.require_subcommand(1);
    CommonOpts opts;
    auto* validate = app.add_subcommand("validate", "check the bound-orbit constraints");
    auto* orbit = app.add_subcommand("orbit", "sample a bound orbit to csv/json/svg");
    auto* surface = app.add_subcommand("surface", "emit the orbit-confining surface");
    auto* actions = app.add_subcommand("actions", "action variables, energy, frequencies");
    auto* spectrum = app.add_subcommand("spectrum", "semiclassical vs wave-equation spectrum");
    auto* verify = app.add_subcommand("verify", "closed forms vs independent quadrature");
    for (auto* cmd : {validate, orbit, surface, actions, spectrum, verify}) add_common(cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(opts);
        if (orbit->parsed()) return cmd_orbit(opts);
        if (surface->parsed()) return cmd_surface(opts);
        if (actions->parsed()) return cmd_actions(opts);
        if (spectrum->parsed()) return cmd_spectrum(opts);
        if (verify->parsed()) return cmd_verify(opts);
    } catch (const ncp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ncp::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
