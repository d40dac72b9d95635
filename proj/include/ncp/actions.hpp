#pragma once

#include "ncp/types.hpp"

namespace ncp {

/// Action variables (units of hbar = 1 action units).
struct ActionSet {
    double j_r;
    double j_theta;
    double j_phi;
    PotentialKind potential_kind;
};

struct Frequencies {
    double omega_r;
    double omega_theta;
    double omega_phi;
};

/// J_r = kappa sqrt(mu/(2|eps|)) - alpha_theta (residues at r = 0, infinity).
double j_r(const PhysicalParams& params, const SeparationConstants& consts);

/// J_theta = sqrt((sqrt(alpha_theta^4 + 4 mu^2 rho^2) + alpha_theta^2)/2) - alpha_eff.
double j_theta_cotangent(const PhysicalParams& params, const SeparationConstants& consts);

/// J_theta = alpha_theta - (sqrt(alpha_eff^2 + 2 mu rho) + sqrt(alpha_eff^2 - 2 mu rho))/2.
double j_theta_kibler(const PhysicalParams& params, const SeparationConstants& consts);

/// J_phi = alpha_phi exactly.
double j_phi(const SeparationConstants& consts);

ActionSet actions_from_constants(const PhysicalParams& params, const SeparationConstants& consts,
                                 PotentialKind kind);

/// H(J) for V_A; round trip of actions_from_constants reproduces -|eps|.
double hamiltonian_cotangent(const PhysicalParams& params, const ActionSet& actions);

/// H(J) for V_B.
double hamiltonian_kibler(const PhysicalParams& params, const ActionSet& actions);

double hamiltonian(const PhysicalParams& params, const ActionSet& actions);

/// omega_i = dH/dJ_i by analytic differentiation of the closed-form H(J).
/// Cotangent gamma=0: omega_theta == omega_phi structurally; Kibler: omega_r == omega_theta.
Frequencies frequencies(const PhysicalParams& params, const ActionSet& actions);

/// Semiclassical spectrum: J_r,theta = (n+1/2) hbar, J_phi = n_phi hbar.
double bsq_energy_cotangent(const PhysicalParams& params, const QuantumNumbers& qn);
double bsq_energy_kibler(const PhysicalParams& params, const QuantumNumbers& qn);
double bsq_energy(const PhysicalParams& params, const QuantumNumbers& qn, PotentialKind kind);

}  // namespace ncp
