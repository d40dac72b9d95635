#include "ncp/actions.hpp"

#include <cmath>

namespace ncp {

double j_r(const PhysicalParams& params, const SeparationConstants& consts) {
    params.validate();
    consts.validate();
    const double value =
        params.kappa * std::sqrt(params.mu / (2.0 * consts.energy_abs)) - consts.alpha_theta;
    if (value < 0.0)
        throw DomainError("J_r < 0: alpha_theta^2 > kappa^2 mu/(2|eps|) (constraint (i))");
    return value;
}

double j_theta_cotangent(const PhysicalParams& params, const SeparationConstants& consts) {
    const double aeff = effective_alpha_phi(params, consts);
    const double at2 = consts.alpha_theta * consts.alpha_theta;
    const double mr = params.mu * params.rho;
    const double value =
        std::sqrt(0.5 * (std::sqrt(at2 * at2 + 4.0 * mr * mr) + at2)) - aeff;
    if (value < 0.0) throw DomainError("J_theta < 0: constraint (ii) violated");
    return value;
}

double j_theta_kibler(const PhysicalParams& params, const SeparationConstants& consts) {
    const double aeff2 = std::pow(effective_alpha_phi(params, consts), 2);
    const double mr = params.mu * params.rho;
    if (aeff2 < 2.0 * mr)
        throw DomainError("J_theta imaginary: alpha_eff^2 < 2 mu rho (constraint (iii))");
    const double value = consts.alpha_theta -
                         0.5 * (std::sqrt(aeff2 + 2.0 * mr) + std::sqrt(aeff2 - 2.0 * mr));
    if (value < 0.0) throw DomainError("J_theta < 0: outside the bound region");
    return value;
}

double j_phi(const SeparationConstants& consts) {
    consts.validate();
    return consts.alpha_phi;
}

ActionSet actions_from_constants(const PhysicalParams& params, const SeparationConstants& consts,
                                 PotentialKind kind) {
    ActionSet actions;
    actions.j_r = j_r(params, consts);
    actions.j_theta = kind == PotentialKind::Cotangent ? j_theta_cotangent(params, consts)
                                                       : j_theta_kibler(params, consts);
    actions.j_phi = j_phi(consts);
    actions.potential_kind = kind;
    return actions;
}

double hamiltonian_cotangent(const PhysicalParams& params, const ActionSet& actions) {
    const double jp_eff =
        std::sqrt(actions.j_phi * actions.j_phi + 2.0 * params.mu * params.gamma);
    const double total = actions.j_theta + jp_eff;
    const double mr = params.mu * params.rho;
    if (total * total < mr)
        throw DomainError("invalid actions: (J_theta + J_phi_eff)^2 < mu rho");
    const double bracket =
        actions.j_r + total * std::sqrt(1.0 - mr * mr / (total * total * total * total));
    return -params.mu * params.kappa * params.kappa / (2.0 * bracket * bracket);
}

double hamiltonian_kibler(const PhysicalParams& params, const ActionSet& actions) {
    const double jp2 = actions.j_phi * actions.j_phi;
    const double plus = jp2 + 2.0 * params.mu * (params.gamma + params.rho);
    const double minus = jp2 + 2.0 * params.mu * (params.gamma - params.rho);
    if (minus < 0.0)
        throw DomainError("invalid actions: J_phi^2 + 2 mu (gamma - rho) < 0");
    const double bracket =
        actions.j_r + actions.j_theta + 0.5 * (std::sqrt(plus) + std::sqrt(minus));
    return -params.mu * params.kappa * params.kappa / (2.0 * bracket * bracket);
}

double hamiltonian(const PhysicalParams& params, const ActionSet& actions) {
    return actions.potential_kind == PotentialKind::Cotangent
               ? hamiltonian_cotangent(params, actions)
               : hamiltonian_kibler(params, actions);
}

Frequencies frequencies(const PhysicalParams& params, const ActionSet& actions) {
    Frequencies freq;
    const double mu = params.mu, kappa = params.kappa;
    if (actions.potential_kind == PotentialKind::Cotangent) {
        const double jp_eff =
            params.gamma == 0.0
                ? actions.j_phi
                : std::sqrt(actions.j_phi * actions.j_phi + 2.0 * mu * params.gamma);
        const double total = actions.j_theta + jp_eff;
        const double mr = mu * params.rho;
        if (total * total < mr)
            throw DomainError("invalid actions: (J_theta + J_phi_eff)^2 < mu rho");
        const double t4 = total * total * total * total;
        const double root = std::sqrt(1.0 - mr * mr / t4);
        const double bracket = actions.j_r + total * root;
        const double base = mu * kappa * kappa / (bracket * bracket * bracket);
        // d(total * root)/d(total) = root + 2 mu^2 rho^2 / (total^4 root)
        const double dtotal = root + 2.0 * mr * mr / (t4 * root);
        freq.omega_r = base;
        freq.omega_theta = base * dtotal;
        freq.omega_phi = freq.omega_theta * (jp_eff > 0.0 ? actions.j_phi / jp_eff : 1.0);
    } else {
        const double jp2 = actions.j_phi * actions.j_phi;
        const double plus = jp2 + 2.0 * mu * (params.gamma + params.rho);
        const double minus = jp2 + 2.0 * mu * (params.gamma - params.rho);
        if (minus < 0.0)
            throw DomainError("invalid actions: J_phi^2 + 2 mu (gamma - rho) < 0");
        const double sp = std::sqrt(plus), sm = std::sqrt(minus);
        const double bracket = actions.j_r + actions.j_theta + 0.5 * (sp + sm);
        const double base = mu * kappa * kappa / (bracket * bracket * bracket);
        freq.omega_r = base;
        freq.omega_theta = base;
        freq.omega_phi =
            base * 0.5 * ((sp > 0.0 ? actions.j_phi / sp : 1.0) + (sm > 0.0 ? actions.j_phi / sm : 1.0));
    }
    return freq;
}

double bsq_energy_cotangent(const PhysicalParams& params, const QuantumNumbers& qn) {
    params.validate();
    qn.validate();
    const double h2 = params.hbar * params.hbar;
    const double np_eff =
        std::sqrt(static_cast<double>(qn.n_phi) * qn.n_phi + 2.0 * params.mu * params.gamma / h2);
    const double nu = qn.n_theta + np_eff + 0.5;
    const double mr_h2 = params.mu * params.rho / h2;
    const double ratio = mr_h2 / (nu * nu);
    if (ratio > 1.0)
        throw NoBoundState("no bound state: hbar^4 (n_theta + n_phi_eff + 1/2)^4 < mu^2 rho^2");
    const double bracket = qn.n_r + 0.5 + nu * std::sqrt(1.0 - ratio * ratio);
    return -params.mu * params.kappa * params.kappa / (2.0 * h2 * bracket * bracket);
}

double bsq_energy_kibler(const PhysicalParams& params, const QuantumNumbers& qn) {
    params.validate();
    qn.validate();
    const double h2 = params.hbar * params.hbar;
    const double np2 = static_cast<double>(qn.n_phi) * qn.n_phi;
    const double plus = np2 + 2.0 * params.mu * (params.gamma + params.rho) / h2;
    const double minus = np2 + 2.0 * params.mu * (params.gamma - params.rho) / h2;
    if (minus < 0.0)
        throw NoBoundState("no bound state: n_phi^2 + 2 mu (gamma - rho)/hbar^2 < 0");
    const double bracket =
        qn.n_r + qn.n_theta + 1.0 + 0.5 * (std::sqrt(plus) + std::sqrt(minus));
    return -params.mu * params.kappa * params.kappa / (2.0 * h2 * bracket * bracket);
}

double bsq_energy(const PhysicalParams& params, const QuantumNumbers& qn, PotentialKind kind) {
    return kind == PotentialKind::Cotangent ? bsq_energy_cotangent(params, qn)
                                            : bsq_energy_kibler(params, qn);
}

}  // namespace ncp
