#pragma once

#include <functional>
#include <vector>

#include "ncp/trajectory.hpp"
#include "ncp/types.hpp"

namespace ncp {

class OracleFailure : public std::runtime_error {
public:
    OracleFailure(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_error(achieved) {}
    double achieved_error;
};

/// Adaptive panel-doubling Gauss-Legendre for smooth integrands.
double integrate_smooth(const std::function<double(double)>& f, double a, double b, double tol);

/// Integral of f over (a, b) where f has inverse-square-root singularities at
/// both endpoints (turning points). Regularized by x = (a+b)/2 - (b-a)/2 cos(tau).
double integrate_turning_point(const std::function<double(double)>& f, double a, double b,
                               double tol);

/// Solves f(x) = target for monotone f on [lo, hi] by safeguarded bisection.
double invert_monotone(const std::function<double(double)>& f, double target, double lo, double hi,
                       double tol = 1e-13);

/// Max scaled residual of a(x) y'' + b(x) y' + c(x) y = 0 over the grid,
/// derivatives by 6th-order central differences with step h.
double ode_residual(const std::function<double(double)>& a, const std::function<double(double)>& b,
                    const std::function<double(double)>& c, const std::function<double(double)>& y,
                    const std::vector<double>& grid, double h);

/// Reconstructs the total energy along a sampled trajectory from
/// finite-difference velocities (5-point Lagrange on the nonuniform t grid)
/// and returns max |E + |eps|| / |eps|.
double energy_along_orbit(const PhysicalParams& params, const Trajectory& traj,
                          PotentialKind kind, double energy_abs);

/// Quadrature versions of the closed-form action integrals (test oracles).
double j_r_quadrature(const PhysicalParams& params, const SeparationConstants& consts, double tol);
double j_theta_quadrature(const PhysicalParams& params, const SeparationConstants& consts,
                          PotentialKind kind, double tol);

/// Quadrature versions of the orbit-integral closed forms:
/// psi(phi) for V_A and phi(psi) for V_B, integrated from 0.
double psi_of_phi_quadrature(const PhysicalParams& params, const SeparationConstants& consts,
                             double phi, double tol);
double phi_of_psi_quadrature(const PhysicalParams& params, const SeparationConstants& consts,
                             double psi, double tol);

}  // namespace ncp
