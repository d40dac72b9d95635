#include "ncp/quadrature.hpp"

#include <array>
#include <cmath>

namespace ncp {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
// iteration on the Legendre recurrence.
struct GaussRule {
    std::array<double, 16> x{}, w{};
    GaussRule() {
        const int n = 16;
        for (int i = 0; i < n / 2; ++i) {
            double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = xi;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
                const double step = p1 / dp;
                xi -= step;
                if (std::fabs(step) < 1e-15) break;
            }
            double p0 = 1.0, p1 = xi;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
            const double wi = 2.0 / ((1.0 - xi * xi) * dp * dp);
            x[i] = -xi;
            x[n - 1 - i] = xi;
            w[i] = wi;
            w[n - 1 - i] = wi;
        }
    }
};

const GaussRule& gauss_rule() {
    static const GaussRule rule;
    return rule;
}

double gauss_panels(const std::function<double(double)>& f, double a, double b, int panels) {
    const GaussRule& rule = gauss_rule();
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        double acc = 0.0;
        for (int i = 0; i < 16; ++i) acc += rule.w[i] * f(mid + 0.5 * h * rule.x[i]);
        total += 0.5 * h * acc;
    }
    return total;
}

// Derivative at xs[c] of the Lagrange interpolant through (xs, ys).
template <std::size_t K>
double lagrange_derivative(const std::array<double, K>& xs, const std::array<double, K>& ys,
                           std::size_t c) {
    double deriv = 0.0;
    for (std::size_t j = 0; j < K; ++j) {
        if (j == c) {
            double sum = 0.0;
            for (std::size_t m = 0; m < K; ++m)
                if (m != c) sum += 1.0 / (xs[c] - xs[m]);
            deriv += ys[c] * sum;
        } else {
            double prod = 1.0;
            for (std::size_t m = 0; m < K; ++m) {
                if (m == j) continue;
                prod /= (xs[j] - xs[m]);
                if (m != c) prod *= (xs[c] - xs[m]);
            }
            deriv += ys[j] * prod;
        }
    }
    return deriv;
}

}  // namespace

double integrate_smooth(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    double prev = gauss_panels(f, a, b, 2);
    for (int panels = 4; panels <= (1 << 15); panels *= 2) {
        const double cur = gauss_panels(f, a, b, panels);
        const double err = std::fabs(cur - prev);
        if (err < tol) return cur;
        prev = cur;
    }
    throw OracleFailure("quadrature did not converge to requested tolerance", tol);
}

double integrate_turning_point(const std::function<double(double)>& f, double a, double b,
                               double tol) {
    if (!(a < b)) throw DomainError("integrate_turning_point: need a < b");
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    auto regular = [&](double tau) { return f(mid - half * std::cos(tau)) * half * std::sin(tau); };
    return integrate_smooth(regular, 0.0, M_PI, tol);
}

double invert_monotone(const std::function<double(double)>& f, double target, double lo, double hi,
                       double tol) {
    double flo = f(lo) - target, fhi = f(hi) - target;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw DomainError("invert_monotone: target not bracketed");
    const double scale = std::fmax(std::fabs(lo), std::fabs(hi));
    for (int it = 0; it < 200 && hi - lo > tol * std::fmax(scale, 1.0); ++it) {
        const double x = 0.5 * (lo + hi);
        const double fx = f(x) - target;
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (fhi > 0.0)) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
    }
    return 0.5 * (lo + hi);
}

double ode_residual(const std::function<double(double)>& a, const std::function<double(double)>& b,
                    const std::function<double(double)>& c, const std::function<double(double)>& y,
                    const std::vector<double>& grid, double h) {
    double worst = 0.0;
    for (const double x : grid) {
        const double ym3 = y(x - 3 * h), ym2 = y(x - 2 * h), ym1 = y(x - h);
        const double y0 = y(x), yp1 = y(x + h), yp2 = y(x + 2 * h), yp3 = y(x + 3 * h);
        const double d1 = (-ym3 + 9 * ym2 - 45 * ym1 + 45 * yp1 - 9 * yp2 + yp3) / (60.0 * h);
        const double d2 = (2 * ym3 - 27 * ym2 + 270 * ym1 - 490 * y0 + 270 * yp1 - 27 * yp2 +
                           2 * yp3) /
                          (180.0 * h * h);
        const double t2 = a(x) * d2, t1 = b(x) * d1, t0 = c(x) * y0;
        const double scale =
            std::fmax(std::fmax(std::fabs(t2), std::fabs(t1)), std::fmax(std::fabs(t0), 1e-300));
        worst = std::fmax(worst, std::fabs(t2 + t1 + t0) / scale);
    }
    return worst;
}

double energy_along_orbit(const PhysicalParams& params, const Trajectory& traj,
                          PotentialKind kind, double energy_abs) {
    const auto& s = traj.samples;
    if (s.size() < 5) throw DomainError("energy_along_orbit: trajectory too short (< 5 samples)");
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < s.size(); ++i) {
        std::array<double, 5> ts{}, rs{},ths{}, phs{};
        for (std::size_t k = 0; k < 5; ++k) {
            const auto& p = s[i - 2 + k];
            ts[k] = p.t;
            rs[k] = p.r;
            ths[k] = p.theta;
            phs[k] = p.phi;
        }
        const double rdot = lagrange_derivative(ts, rs, 2);
        const double thdot = lagrange_derivative(ts, ths, 2);
        const double phdot = lagrange_derivative(ts, phs, 2);
        const double r = rs[2], th = ths[2];
        const double st = std::sin(th);
        const double kinetic =
            0.5 * params.mu *
            (rdot * rdot + r * r * thdot * thdot + r * r * st * st * phdot * phdot);
        const double total = kinetic + potential_energy(params, kind, r, th);
        worst = std::fmax(worst, std::fabs(total + energy_abs) / energy_abs);
    }
    return worst;
}

double j_r_quadrature(const PhysicalParams& params, const SeparationConstants& consts, double tol) {
    const double half_sum = params.kappa / (2.0 * consts.energy_abs);
    const double at2 = consts.alpha_theta * consts.alpha_theta;
    const double disc = half_sum * half_sum - at2 / (2.0 * params.mu * consts.energy_abs);
    if (disc < 0.0) throw DomainError("j_r_quadrature: unbound radius");
    const double r1 = half_sum - std::sqrt(disc), r2 = half_sum + std::sqrt(disc);
    auto integrand = [&](double r) {
        const double v = 2.0 * params.mu * (-consts.energy_abs + params.kappa / r) - at2 / (r * r);
        return std::sqrt(std::fmax(0.0, v));
    };
    return integrate_turning_point(integrand, r1, r2, tol) / M_PI;
}

double j_theta_quadrature(const PhysicalParams& params, const SeparationConstants& consts,
                          PotentialKind kind, double tol) {
    const double at2 = consts.alpha_theta * consts.alpha_theta;
    const double aeff2 = std::pow(effective_alpha_phi(params, consts), 2);
    const double mr = params.mu * params.rho;
    double th1, th2;
    if (kind == PotentialKind::Cotangent) {
        const double a2 = at2 / aeff2, b = mr / aeff2;
        const double c2 = a2 + b * b - 1.0;
        if (c2 < 0.0) throw DomainError("j_theta_quadrature: unbound theta");
        const double c = std::sqrt(c2);
        th1 = M_PI / 2.0 - std::atan(b + c);
        th2 = M_PI / 2.0 - std::atan(b - c);
    } else {
        const double m = mr / at2;
        const double n2 = 1.0 - aeff2 / at2 + m * m;
        if (n2 < 0.0) throw DomainError("j_theta_quadrature: unbound theta");
        const double n = std::sqrt(n2);
        th1 = std::acos(m + n);
        th2 = std::acos(m - n);
    }
    auto integrand = [&](double th) {
        const double st = std::sin(th), ct = std::cos(th);
        const double noncentral = kind == PotentialKind::Cotangent
                                      ? 2.0 * mr * ct / st
                                      : 2.0 * mr * ct / (st * st);
        const double v = at2 - aeff2 / (st * st) + noncentral;
        return std::sqrt(std::fmax(0.0, v));
    };
    return integrate_turning_point(integrand, th1, th2, tol) / M_PI;
}

double psi_of_phi_quadrature(const PhysicalParams& params, const SeparationConstants& consts,
                             double phi, double tol) {
    const double aeff = effective_alpha_phi(params, consts);
    const double a = consts.alpha_theta / aeff;
    const double b = params.mu * params.rho / (aeff * aeff);
    const double c2 = a * a + b * b - 1.0;
    if (c2 < 0.0) throw DomainError("psi_of_phi_quadrature: unbound theta");
    const double c = std::sqrt(c2);
    const double ratio = aeff / consts.alpha_phi;
    auto integrand = [&](double p) {
        const double u = b + c * std::cos(ratio * p);
        return (consts.alpha_theta / consts.alpha_phi) / (1.0 + u * u);
    };
    return integrate_smooth(integrand, 0.0, phi, tol);
}

double phi_of_psi_quadrature(const PhysicalParams& params, const SeparationConstants& consts,
                             double psi, double tol) {
    const double at2 = consts.alpha_theta * consts.alpha_theta;
    const double aeff2 = std::pow(effective_alpha_phi(params, consts), 2);
    const double m = params.mu * params.rho / at2;
    const double n2 = 1.0 - aeff2 / at2 + m * m;
    if (n2 < 0.0) throw DomainError("phi_of_psi_quadrature: unbound theta");
    const double n = std::sqrt(n2);
    auto integrand = [&](double p) {
        const double v = m + n * std::cos(p);
        return (consts.alpha_phi / consts.alpha_theta) / (1.0 - v * v);
    };
    return integrate_smooth(integrand, 0.0, psi, tol);
}

}  // namespace ncp
