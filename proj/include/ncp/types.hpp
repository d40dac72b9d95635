#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ncp {

/// Thrown when parameters leave the bound-orbit domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

/// A quantum-number triple has no bound state (semiclassical bracket or
/// polar-equation parameter turns imaginary).
class NoBoundState : public DomainError {
public:
    explicit NoBoundState(const std::string& msg) : DomainError(msg) {}
};

/// Static properties of the particle and the potential.
/// V = -kappa/r + V2(theta)/r^2 with V2 built from rho and gamma.
struct PhysicalParams {
    double mu = 1.0;     // particle mass, > 0
    double kappa = 1.0;  // Coulomb strength, > 0
    double rho = 0.0;    // angular-dipole strength, >= 0
    double gamma = 0.0;  // cosec^2 strength, >= 0
    double hbar = 1.0;   // action scale, > 0

    void validate() const;
};

/// Separation constants of the Hamilton-Jacobi solution, bound sector.
/// beta_r, beta_theta, beta_phi are all fixed to zero by convention.
struct SeparationConstants {
    double energy_abs = 1.0;   // |epsilon|, > 0
    double alpha_theta = 1.0;  // polar constant, >= 0
    double alpha_phi = 0.0;    // z angular momentum magnitude, >= 0

    void validate() const;
};

struct QuantumNumbers {
    int n_r = 0;
    int n_theta = 0;
    int n_phi = 0;  // either sign; spectra depend on |n_phi|

    void validate() const;
};

struct ConstraintViolation {
    std::string name;  // e.g. "(ii) alpha_eff^2(alpha_theta^2-alpha_eff^2)+mu^2 rho^2 >= 0"
    double lhs = 0.0;
    double rhs = 0.0;
};

struct ValidationReport {
    bool is_bound = false;
    bool degenerate = false;  // some inequality holds with equality
    std::vector<ConstraintViolation> violated_constraints;
    std::vector<std::string> degenerate_notes;
};

enum class PotentialKind { Cotangent, Kibler };

std::string to_string(PotentialKind kind);

/// sqrt(alpha_phi^2 + 2 mu gamma); equals alpha_phi when gamma = 0.
double effective_alpha_phi(const PhysicalParams& params, const SeparationConstants& consts);

/// Bound-orbit constraints for the cotangent potential V_A.
ValidationReport validate_cotangent(const PhysicalParams& params, const SeparationConstants& consts);

/// Bound-orbit constraints for the Makarov-Kibler potential V_B.
ValidationReport validate_kibler(const PhysicalParams& params, const SeparationConstants& consts);

ValidationReport validate(const PhysicalParams& params, const SeparationConstants& consts,
                          PotentialKind kind);

/// Potential energy V(r, theta) for either potential.
double potential_energy(const PhysicalParams& params, PotentialKind kind, double r, double theta);

}  // namespace ncp
