#pragma once

#include <array>
#include <utility>

#include "ncp/radial.hpp"
#include "ncp/trajectory.hpp"
#include "ncp/types.hpp"

namespace ncp {

/// Constants of the theta(phi) relation and the psi(phi) closed form for V_A.
/// cot(theta) = B + C cos(ratio * phi), with alpha_phi -> alpha_phi_eff folded in.
struct CotangentOrbitConstants {
    double A, B, C;      // A = alpha_theta/alpha_eff, B = mu rho/alpha_eff^2, C = sqrt(A^2+B^2-1)
    double D, E, F, G, H;  // quartic factorization constants of the psi integral
    double alpha_phi_eff;
    double ratio;        // alpha_eff / alpha_phi; 1 when gamma = 0
    double psi_period;   // advance of psi per period 2 pi/ratio of phi
};

/// Elliptic cone carrying the gamma = 0 orbit.
struct EllipticCone {
    double theta_c;   // cone-axis tilt from the z axis (rotation about y)
    double theta_xz;  // half-angle in the x'z' plane
    double theta_yz;  // half-angle in the y'z' plane
    std::array<std::array<double, 3>, 3> rotation;  // maps (x,y,z) to cone frame (x',y',z')
};

CotangentOrbitConstants cotangent_constants(const PhysicalParams& params,
                                            const SeparationConstants& consts);

/// theta in (0, pi) with cot(theta) = B + C cos(ratio * phi).
double theta_of_phi(const CotangentOrbitConstants& constants, double phi);

/// (theta1, theta2) = arccot(B +- C), theta1 < theta2.
std::pair<double, double> theta_extrema(const CotangentOrbitConstants& constants);

/// Closed-form psi(phi), continuous and strictly increasing across the
/// tan(ratio*phi/2) singularities; psi(0) = 0.
double psi_of_phi(const CotangentOrbitConstants& constants, double phi);

/// Cone geometry for gamma = 0; throws DomainError otherwise (no fixed surface).
EllipticCone cone_geometry(const PhysicalParams& params, const SeparationConstants& consts);

/// Samples the orbit on a uniform phi grid in [0, phi_max], n_samples >= 2.
Trajectory sample_orbit_cotangent(const PhysicalParams& params, const SeparationConstants& consts,
                                  double phi_max, int n_samples);

}  // namespace ncp
