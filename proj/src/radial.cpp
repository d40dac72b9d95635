#include "ncp/radial.hpp"

#include <cmath>

namespace ncp {

RadialOrbit radial_turning_points(const PhysicalParams& params, const SeparationConstants& consts) {
    params.validate();
    consts.validate();
    const double half_sum = params.kappa / (2.0 * consts.energy_abs);
    const double at2 = consts.alpha_theta * consts.alpha_theta;
    const double disc = half_sum * half_sum - at2 / (2.0 * params.mu * consts.energy_abs);
    if (disc < 0.0)
        throw DomainError("unbound radius: alpha_theta^2 > kappa^2 mu/(2|eps|) (constraint (i))");
    const double half_diff = std::sqrt(disc);
    RadialOrbit orbit;
    orbit.r1 = half_sum - half_diff;
    orbit.r2 = half_sum + half_diff;
    orbit.period_t =
        2.0 * M_PI * std::sqrt(params.mu * std::pow(orbit.r1 + orbit.r2, 3) / (8.0 * params.kappa));
    return orbit;
}

double r_of_w(const RadialOrbit& orbit, double w) {
    return 0.5 * (orbit.r1 + orbit.r2) - 0.5 * (orbit.r2 - orbit.r1) * std::cos(w);
}

double t_of_w(const PhysicalParams& params, const RadialOrbit& orbit, double w) {
    const double sum = orbit.r1 + orbit.r2;
    const double ecc = (orbit.r2 - orbit.r1) / sum;
    return std::sqrt(params.mu * sum * sum * sum / (8.0 * params.kappa)) * (w - ecc * std::sin(w));
}

double r_of_psi(const RadialOrbit& orbit, double psi) {
    if (orbit.r1 <= 0.0)
        throw DomainError("degenerate orbit: r1 = 0, psi parametrization undefined");
    return 2.0 * orbit.r1 * orbit.r2 /
           (orbit.r1 + orbit.r2 + (orbit.r2 - orbit.r1) * std::cos(psi));
}

double w_of_psi(const RadialOrbit& orbit, double psi) {
    if (orbit.r1 <= 0.0)
        throw DomainError("degenerate orbit: r1 = 0, psi parametrization undefined");
    const double cycle = std::floor(psi / (2.0 * M_PI));
    const double d = psi - 2.0 * M_PI * cycle;  // in [0, 2 pi)
    const double w = 2.0 * std::atan2(std::sqrt(orbit.r1) * std::sin(0.5 * d),
                                      std::sqrt(orbit.r2) * std::cos(0.5 * d));
    return 2.0 * M_PI * cycle + w;
}

double t_of_psi(const PhysicalParams& params, const RadialOrbit& orbit, double psi) {
    return t_of_w(params, orbit, w_of_psi(orbit, psi));
}

}  // namespace ncp
