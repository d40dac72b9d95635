#include "ncp/types.hpp"

#include <cmath>

namespace ncp {

namespace {

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

void check_constraint(ValidationReport& report, const std::string& name, double lhs, double rhs) {
    if (lhs < rhs) {
        report.violated_constraints.push_back({name, lhs, rhs});
    } else if (lhs == rhs) {
        report.degenerate = true;
        report.degenerate_notes.push_back(name + " holds with equality");
    }
}

}  // namespace

void PhysicalParams::validate() const {
    if (!(std::isfinite(mu) && mu > 0.0)) throw DomainError("mu must be positive and finite");
    if (!(std::isfinite(kappa) && kappa > 0.0)) throw DomainError("kappa must be positive and finite");
    if (!(std::isfinite(hbar) && hbar > 0.0)) throw DomainError("hbar must be positive and finite");
    if (!finite_nonneg(rho)) throw DomainError("rho must be non-negative and finite");
    if (!finite_nonneg(gamma)) throw DomainError("gamma must be non-negative and finite");
}

void SeparationConstants::validate() const {
    if (!(std::isfinite(energy_abs) && energy_abs > 0.0))
        throw DomainError("energy_abs (|epsilon|) must be positive: bound sector only");
    if (!finite_nonneg(alpha_theta)) throw DomainError("alpha_theta must be non-negative and finite");
    if (!finite_nonneg(alpha_phi)) throw DomainError("alpha_phi must be non-negative and finite");
}

void QuantumNumbers::validate() const {
    if (n_r < 0) throw DomainError("n_r must be >= 0");
    if (n_theta < 0) throw DomainError("n_theta must be >= 0");
}

std::string to_string(PotentialKind kind) {
    return kind == PotentialKind::Cotangent ? "cotangent" : "kibler";
}

double effective_alpha_phi(const PhysicalParams& params, const SeparationConstants& consts) {
    params.validate();
    consts.validate();
    return std::sqrt(consts.alpha_phi * consts.alpha_phi + 2.0 * params.mu * params.gamma);
}

ValidationReport validate_cotangent(const PhysicalParams& params, const SeparationConstants& consts) {
    params.validate();
    consts.validate();
    ValidationReport report;
    const double at2 = consts.alpha_theta * consts.alpha_theta;
    const double ap2 = consts.alpha_phi * consts.alpha_phi;
    const double aeff = effective_alpha_phi(params, consts);
    const double aeff2 = aeff * aeff;
    const double mr = params.mu * params.rho;

    check_constraint(report, "(i) alpha_theta^2 <= kappa^2 mu / (2|eps|)",
                     params.kappa * params.kappa * params.mu / (2.0 * consts.energy_abs), at2);
    check_constraint(report, "(ii) alpha_eff^2 (alpha_theta^2 - alpha_eff^2) + mu^2 rho^2 >= 0",
                     aeff2 * (at2 - aeff2) + mr * mr, 0.0);
    check_constraint(report, "(iii) alpha_phi^2 >= 0", ap2, 0.0);

    if (at2 == params.kappa * params.kappa * params.mu / (2.0 * consts.energy_abs))
        report.degenerate_notes.push_back("circular radius: r1 = r2");
    report.is_bound = report.violated_constraints.empty();
    return report;
}

ValidationReport validate_kibler(const PhysicalParams& params, const SeparationConstants& consts) {
    params.validate();
    consts.validate();
    ValidationReport report;
    const double at2 = consts.alpha_theta * consts.alpha_theta;
    const double aeff = effective_alpha_phi(params, consts);
    const double aeff2 = aeff * aeff;
    const double mr = params.mu * params.rho;

    check_constraint(report, "(i) alpha_theta^2 <= kappa^2 mu / (2|eps|)",
                     params.kappa * params.kappa * params.mu / (2.0 * consts.energy_abs), at2);
    check_constraint(report, "(ii) alpha_theta^2 (alpha_theta^2 - alpha_eff^2) + mu^2 rho^2 >= 0",
                     at2 * (at2 - aeff2) + mr * mr, 0.0);
    check_constraint(report, "(iii) alpha_eff^2 >= 2 mu rho", aeff2, 2.0 * mr);

    report.is_bound = report.violated_constraints.empty();
    return report;
}

ValidationReport validate(const PhysicalParams& params, const SeparationConstants& consts,
                          PotentialKind kind) {
    return kind == PotentialKind::Cotangent ? validate_cotangent(params, consts)
                                            : validate_kibler(params, consts);
}

double potential_energy(const PhysicalParams& params, PotentialKind kind, double r, double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    double v2;
    if (kind == PotentialKind::Cotangent)
        v2 = -params.rho * c / s + params.gamma / (s * s);
    else
        v2 = -params.rho * c / (s * s) + params.gamma / (s * s);
    return -params.kappa / r + v2 / (r * r);
}

}  // namespace ncp
