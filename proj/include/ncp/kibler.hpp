#pragma once

#include <utility>

#include "ncp/radial.hpp"
#include "ncp/trajectory.hpp"
#include "ncp/types.hpp"

namespace ncp {

/// Constants of the theta(psi) relation and the phi(psi) closed form for V_B.
/// cos(theta) = M + N cos(psi).
struct KiblerOrbitConstants {
    double M;  // mu rho / alpha_theta^2
    double N;  // sqrt(1 - alpha_eff^2/alpha_theta^2 + mu^2 rho^2/alpha_theta^4)
    double alpha_phi_eff;
    double ratio;  // d phi/d psi prefactor alpha_phi/alpha_theta (see note below)
    double phi_period;  // advance of phi per 2 pi of psi
};
// Note on `ratio`: the published phi(psi) carries no prefactor for gamma = 0
// and alpha_phi/alpha_eff for gamma != 0, but the chain rule on the HJ EOMs
// gives d phi/d psi = (alpha_phi/alpha_theta)/(1-(M+N cos psi)^2) and only that
// factor yields the physical azimuthal winding (2 pi per cycle in the Kepler
// limit) and conserves energy along sampled orbits.

enum class QuadricKind { Ellipsoid, HyperboloidTwoSheets, Paraboloid };

std::string to_string(QuadricKind kind);

/// Quadric surface p r + q r cos(theta) = 2 r1 r2 confining the orbit.
struct QuadricSurface {
    double p, q;
    QuadricKind kind;
    double z_shift;  // 2 r1 r2 q/(p^2-q^2); 0 for the paraboloid branch
    double a_xy;     // transverse semi-axis (ellipsoid/hyperboloid)
    double a_z;      // polar semi-axis
};

KiblerOrbitConstants kibler_constants(const PhysicalParams& params,
                                      const SeparationConstants& consts);

/// theta in (0, pi) with cos(theta) = M + N cos(psi).
double theta_of_psi(const KiblerOrbitConstants& constants, double psi);

/// (theta1, theta2) = arccos(M +- N), theta1 < theta2.
std::pair<double, double> theta_extrema_kibler(const KiblerOrbitConstants& constants);

/// Closed-form phi(psi), continuous and strictly increasing; phi(0) = 0.
double phi_of_psi(const KiblerOrbitConstants& constants, double psi);

/// Quadric carrying the orbit (uses alpha_phi_eff, so valid for gamma != 0 too).
QuadricSurface quadric_surface(const PhysicalParams& params, const SeparationConstants& consts,
                               const RadialOrbit& radial);

/// Samples the orbit on a uniform psi grid in [0, psi_max], n_samples >= 2.
Trajectory sample_orbit_kibler(const PhysicalParams& params, const SeparationConstants& consts,
                               double psi_max, int n_samples);

}  // namespace ncp
