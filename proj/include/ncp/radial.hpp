#pragma once

#include "ncp/types.hpp"

namespace ncp {

/// Radial sector of the Kepler-Coulomb problem, shared by both potentials.
struct RadialOrbit {
    double r1;        // inner turning radius
    double r2;        // outer turning radius
    double period_t;  // radial period in time units
};

/// Turning radii r1,2 = kappa/(2|eps|) -+ sqrt(kappa^2/(4 eps^2) - alpha_theta^2/(2 mu |eps|))
/// and the radial period. Throws DomainError if the discriminant is negative
/// (constraint (i) violated).
RadialOrbit radial_turning_points(const PhysicalParams& params, const SeparationConstants& consts);

/// r = (r1+r2)/2 - (r2-r1)/2 cos w  (perihelion at w = 0).
double r_of_w(const RadialOrbit& orbit, double w);

/// Kepler-equation time: t = sqrt(mu (r1+r2)^3 / 8 kappa) (w - e sin w), e = (r2-r1)/(r2+r1).
double t_of_w(const PhysicalParams& params, const RadialOrbit& orbit, double w);

/// Conic-like relation r(psi) = 2 r1 r2 / [r1 + r2 + (r2-r1) cos psi].
/// Requires r1 > 0.
double r_of_psi(const RadialOrbit& orbit, double psi);

/// Continuous monotone inversion pairing r(w) with r(psi):
/// tan(w/2) = sqrt(r1/r2) tan(psi/2), unwrapped so w(2 pi k) = 2 pi k.
double w_of_psi(const RadialOrbit& orbit, double psi);

double t_of_psi(const PhysicalParams& params, const RadialOrbit& orbit, double psi);

}  // namespace ncp
