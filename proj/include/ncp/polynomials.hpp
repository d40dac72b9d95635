#pragma once

#include <functional>
#include <vector>

#include "ncp/types.hpp"

namespace ncp {

/// Dense real polynomial, coefficients in ascending degree.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial constant(double c) { return Polynomial({c}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double coeff(int k) const;
    const std::vector<double>& coeffs() const { return coeffs_; }

    double operator()(double x) const;  // Horner evaluation
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(double scale) const;

    /// Largest absolute coefficient (0 for the zero polynomial).
    double max_abs_coeff() const;

private:
    std::vector<double> coeffs_;
};

/// Associated Laguerre L_n^a via the three-term recurrence; real a permitted.
Polynomial laguerre(int n, double a);

/// Jacobi P_n^(alpha,beta) via the classical recurrence; alpha, beta > -1.
Polynomial jacobi(int n, double alpha, double beta);

/// Romanovski R_n^(alpha,beta), Rodrigues formula expanded by the per-step
/// derivative map q -> (1+u^2) q' + (2(n-k+beta-1) u + alpha) q over steps
/// k = 0..n-1, divided by 2^n n!.
Polynomial romanovski(int n, double alpha, double beta);

/// Parameters of the Romanovski substitution for the V_A polar equation.
struct CotangentPolarParams {
    double alpha_R;  // exponential parameter
    double beta_R;   // power parameter, 1/2 - n_theta - n_phi_eff
    double l_eff;    // effective orbital parameter (> -1/2)
};

/// Parameters of the Jacobi substitution for the V_B polar equation.
struct KiblerPolarParams {
    double alpha_J;  // sqrt(n_phi_eff^2 - 2 mu rho/hbar^2)
    double beta_J;   // sqrt(n_phi_eff^2 + 2 mu rho/hbar^2)
    double l_eff;    // n_theta + (alpha_J + beta_J)/2
};

/// n_phi^2 + 2 mu gamma / hbar^2 (the gamma != 0 replacement for n_phi^2).
double n_phi_sq_eff(const PhysicalParams& params, int n_phi);

CotangentPolarParams cotangent_polar_params(const PhysicalParams& params, int n_theta,
                                            double n_phi_sq_eff);
KiblerPolarParams kibler_polar_params(const PhysicalParams& params, int n_theta,
                                      double n_phi_sq_eff);

/// R(r) = (Qr)^l e^{-Qr} L_{n_r}^{2l+1}(2Qr), Q = sqrt(2 mu |E|)/hbar.
std::function<double(double)> radial_wavefunction(const PhysicalParams& params, int n_r,
                                                  double l_eff, double energy);

/// Unnormalised polar wavefunctions Theta(theta).
std::function<double(double)> polar_wavefunction_cotangent(const PhysicalParams& params,
                                                           int n_theta, int n_phi);
std::function<double(double)> polar_wavefunction_kibler(const PhysicalParams& params, int n_theta,
                                                        int n_phi);

/// Schroedinger spectra E = -mu kappa^2 / (2 hbar^2 (n_r + l + 1)^2).
double qm_energy_cotangent(const PhysicalParams& params, const QuantumNumbers& qn);
double qm_energy_kibler(const PhysicalParams& params, const QuantumNumbers& qn);
double qm_energy(const PhysicalParams& params, const QuantumNumbers& qn, PotentialKind kind);

}  // namespace ncp
