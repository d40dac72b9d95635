#include "ncp/cotangent.hpp"

#include <cmath>

namespace ncp {

namespace {

double arccot(double u) {
    // range (0, pi), matching the theta domain
    return M_PI / 2.0 - std::atan(u);
}

// Inner closed form on one branch, s = tan(ratio*phi/2) in (-inf, inf); odd in s.
double psi_inner(const CotangentOrbitConstants& k, double s) {
    const double den = (k.B - k.C) * (k.B - k.C) + 1.0;
    const double atan_part = std::atan((s + k.F) / k.H) + std::atan((s - k.F) / k.H);
    double log_part;
    if (k.F == 0.0) {
        // repeated quadratic factors: analytic limit of (G-1)/(4FG) ln(...)
        log_part = -(k.G - 1.0) * s / (k.G * (s * s + k.G));
    } else {
        // log1p keeps the (G-1)/(4FG) * ln(...) product stable for small F
        log_part = (k.G - 1.0) / (4.0 * k.F * k.G) *
                   std::log1p(-4.0 * k.F * s / (s * s + 2.0 * k.F * s + k.G));
    }
    return k.A / den * (log_part + (k.G + 1.0) / (2.0 * k.G * k.H) * atan_part);
}

}  // namespace

CotangentOrbitConstants cotangent_constants(const PhysicalParams& params,
                                            const SeparationConstants& consts) {
    const ValidationReport report = validate_cotangent(params, consts);
    if (!report.is_bound)
        throw DomainError("unbound theta motion: " + report.violated_constraints.front().name);
    if (consts.alpha_phi <= 0.0)
        throw DomainError("theta(phi) relation degenerate at alpha_phi = 0");

    CotangentOrbitConstants k;
    k.alpha_phi_eff = effective_alpha_phi(params, consts);
    k.ratio = k.alpha_phi_eff / consts.alpha_phi;
    k.A = consts.alpha_theta / k.alpha_phi_eff;
    k.B = params.mu * params.rho / (k.alpha_phi_eff * k.alpha_phi_eff);
    const double c2 = k.A * k.A + k.B * k.B - 1.0;
    if (c2 < 0.0)
        throw DomainError("unbound theta motion: constraint (ii) violated (C^2 < 0)");
    k.C = std::sqrt(c2);
    const double den = (k.B - k.C) * (k.B - k.C) + 1.0;
    k.D = (2.0 - k.A * k.A) / den;
    k.E = ((k.B + k.C) * (k.B + k.C) + 1.0) / den;
    k.G = std::sqrt(k.E);
    k.F = std::sqrt(std::fmax(0.0, 0.5 * (k.G - k.D)));
    k.H = std::sqrt(0.5 * (k.G + k.D));
    k.psi_period = 2.0 * M_PI * k.A * (k.G + 1.0) / (den * 2.0 * k.G * k.H);
    return k;
}

double theta_of_phi(const CotangentOrbitConstants& constants, double phi) {
    return arccot(constants.B + constants.C * std::cos(constants.ratio * phi));
}

std::pair<double, double> theta_extrema(const CotangentOrbitConstants& constants) {
    return {arccot(constants.B + constants.C), arccot(constants.B - constants.C)};
}

double psi_of_phi(const CotangentOrbitConstants& constants, double phi) {
    const double base = constants.ratio * phi;
    double n = std::floor((base + M_PI) / (2.0 * M_PI));
    double d = base - 2.0 * M_PI * n;
    // rounding in the floor argument can leave d just outside [-pi, pi)
    if (d < -M_PI) {
        d += 2.0 * M_PI;
        n -= 1.0;
    } else if (d >= M_PI) {
        d -= 2.0 * M_PI;
        n += 1.0;
    }
    return n * constants.psi_period + psi_inner(constants, std::tan(0.5 * d));
}

EllipticCone cone_geometry(const PhysicalParams& params, const SeparationConstants& consts) {
    if (params.gamma != 0.0)
        throw DomainError("not a cone: orbit is not confined to a fixed surface for gamma != 0");
    const ValidationReport report = validate_cotangent(params, consts);
    if (!report.is_bound)
        throw DomainError("unbound orbit: " + report.violated_constraints.front().name);

    const double at2 = consts.alpha_theta * consts.alpha_theta;
    const double ap2 = consts.alpha_phi * consts.alpha_phi;
    const double mr = params.mu * params.rho;
    const double S = std::sqrt(at2 * at2 + 4.0 * mr * mr);

    EllipticCone cone;
    const double num = S + at2 - 2.0 * ap2;
    const double den = 2.0 * std::sqrt(std::fmax(0.0, ap2 * (at2 - ap2) + mr * mr));
    cone.theta_c = den > 0.0 ? std::atan(num / den) : M_PI / 2.0;
    cone.theta_xz = mr > 0.0 ? std::atan((S + at2) / (2.0 * mr)) : M_PI / 2.0;
    cone.theta_yz = mr > 0.0
                        ? std::atan(consts.alpha_phi / mr * std::sqrt(0.5 * (S + at2)))
                        : M_PI / 2.0;
    const double c = std::cos(cone.theta_c), s = std::sin(cone.theta_c);
    cone.rotation = {{{c, 0.0, -s}, {0.0, 1.0, 0.0}, {s, 0.0, c}}};
    return cone;
}

Trajectory sample_orbit_cotangent(const PhysicalParams& params, const SeparationConstants& consts,
                                  double phi_max, int n_samples) {
    if (n_samples < 2) throw DomainError("n_samples must be >= 2");
    const CotangentOrbitConstants k = cotangent_constants(params, consts);
    const RadialOrbit radial = radial_turning_points(params, consts);

    Trajectory traj;
    traj.samples.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double phi = phi_max * static_cast<double>(i) / (n_samples - 1);
        TrajectorySample p;
        p.phi = phi;
        p.theta = theta_of_phi(k, phi);
        const double psi = psi_of_phi(k, phi);
        p.r = r_of_psi(radial, psi);
        p.t = t_of_psi(params, radial, psi);
        const double st = std::sin(p.theta);
        p.x = p.r * st * std::cos(phi);
        p.y = p.r * st * std::sin(phi);
        p.z = p.r * std::cos(p.theta);
        traj.samples.push_back(p);
    }
    return traj;
}

}  // namespace ncp
