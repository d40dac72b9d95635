#include "ncp/kibler.hpp"

#include <cmath>

namespace ncp {

namespace {

// Continuous unwrapped atan(c * tan(psi/2)): n pi + atan(c tan(d/2)), d in [-pi, pi).
double atan_unwrapped(double c, double psi) {
    double n = std::floor((psi + M_PI) / (2.0 * M_PI));
    double d = psi - 2.0 * M_PI * n;
    // rounding in the floor argument can leave d just outside [-pi, pi)
    if (d < -M_PI) {
        d += 2.0 * M_PI;
        n -= 1.0;
    } else if (d >= M_PI) {
        d -= 2.0 * M_PI;
        n += 1.0;
    }
    return n * M_PI + std::atan(c * std::tan(0.5 * d));
}

}  // namespace

std::string to_string(QuadricKind kind) {
    switch (kind) {
        case QuadricKind::Ellipsoid: return "ellipsoid";
        case QuadricKind::HyperboloidTwoSheets: return "hyperboloid_two_sheets";
        default: return "paraboloid";
    }
}

KiblerOrbitConstants kibler_constants(const PhysicalParams& params,
                                      const SeparationConstants& consts) {
    const ValidationReport report = validate_kibler(params, consts);
    if (!report.is_bound)
        throw DomainError("unbound orbit: " + report.violated_constraints.front().name);
    if (consts.alpha_theta <= 0.0)
        throw DomainError("theta(psi) relation degenerate at alpha_theta = 0");

    KiblerOrbitConstants k;
    k.alpha_phi_eff = effective_alpha_phi(params, consts);
    const double at2 = consts.alpha_theta * consts.alpha_theta;
    k.M = params.mu * params.rho / at2;
    const double n2 = 1.0 - k.alpha_phi_eff * k.alpha_phi_eff / at2 + k.M * k.M;
    if (n2 < 0.0) throw DomainError("unbound theta motion: constraint (ii) violated (N imaginary)");
    k.N = std::sqrt(n2);
    if (1.0 - k.M < k.N)
        throw DomainError("non-periodic phi motion: 1 - M < N (constraint (iii))");
    k.ratio = consts.alpha_phi / consts.alpha_theta;
    const double kp = 1.0 / std::sqrt((1.0 + k.M) * (1.0 + k.M) - k.N * k.N);
    const double onemm = (1.0 - k.M) * (1.0 - k.M) - k.N * k.N;
    if (onemm == 0.0)
        throw DomainError("degenerate phi integral: (1-M)^2 = N^2 (logarithmic branch)");
    k.phi_period = k.ratio * M_PI * (kp + 1.0 / std::sqrt(onemm));
    return k;
}

double theta_of_psi(const KiblerOrbitConstants& constants, double psi) {
    return std::acos(constants.M + constants.N * std::cos(psi));
}

std::pair<double, double> theta_extrema_kibler(const KiblerOrbitConstants& constants) {
    if (std::fabs(constants.M) + constants.N > 1.0)
        throw DomainError("theta range error: |M| + N > 1");
    return {std::acos(constants.M + constants.N), std::acos(constants.M - constants.N)};
}

double phi_of_psi(const KiblerOrbitConstants& constants, double psi) {
    const double M = constants.M, N = constants.N;
    const double kp = 1.0 / std::sqrt((1.0 + M) * (1.0 + M) - N * N);
    const double km = 1.0 / std::sqrt((1.0 - M) * (1.0 - M) - N * N);
    const double cp = std::sqrt((1.0 + M - N) / (1.0 + M + N));
    const double cm = std::sqrt((1.0 - M + N) / (1.0 - M - N));
    return constants.ratio *
           (kp * atan_unwrapped(cp, psi) + km * atan_unwrapped(cm, psi));
}

QuadricSurface quadric_surface(const PhysicalParams& params, const SeparationConstants& consts,
                               const RadialOrbit& radial) {
    const KiblerOrbitConstants k = kibler_constants(params, consts);
    QuadricSurface surf;
    const double dr = radial.r2 - radial.r1;
    surf.p = radial.r1 + radial.r2 - dr * k.M / k.N;
    surf.q = dr / k.N;
    const double r1r2 = radial.r1 * radial.r2;
    const double disc = surf.p * surf.p - surf.q * surf.q;
    // measure-zero paraboloid detected by relative threshold
    if (std::fabs(disc) < 1e-10 * surf.p * surf.p) {
        surf.kind = QuadricKind::Paraboloid;
        surf.z_shift = 0.0;
        surf.a_xy = surf.a_z = 0.0;
    } else {
        surf.kind = disc > 0.0 ? QuadricKind::Ellipsoid : QuadricKind::HyperboloidTwoSheets;
        surf.z_shift = 2.0 * r1r2 * surf.q / disc;
        surf.a_xy = 2.0 * r1r2 / std::sqrt(std::fabs(disc));
        surf.a_z = 2.0 * surf.p * r1r2 / std::fabs(disc);
    }
    return surf;
}

Trajectory sample_orbit_kibler(const PhysicalParams& params, const SeparationConstants& consts,
                               double psi_max, int n_samples) {
    if (n_samples < 2) throw DomainError("n_samples must be >= 2");
    const KiblerOrbitConstants k = kibler_constants(params, consts);
    const RadialOrbit radial = radial_turning_points(params, consts);

    Trajectory traj;
    traj.samples.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double psi = psi_max * static_cast<double>(i) / (n_samples - 1);
        TrajectorySample p;
        p.theta = theta_of_psi(k, psi);
        p.phi = phi_of_psi(k, psi);
        p.r = r_of_psi(radial, psi);
        p.t = t_of_psi(params, radial, psi);
        const double st = std::sin(p.theta);
        p.x = p.r * st * std::cos(p.phi);
        p.y = p.r * st * std::sin(p.phi);
        p.z = p.r * std::cos(p.theta);
        traj.samples.push_back(p);
    }
    return traj;
}

}  // namespace ncp
