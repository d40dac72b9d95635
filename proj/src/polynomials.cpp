#include "ncp/polynomials.hpp"

#include <cmath>

namespace ncp {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : 0.0;
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return Polynomial({0.0});
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<double> out(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = coeff(static_cast<int>(k)) + other.coeff(static_cast<int>(k));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + other * -1.0;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    std::vector<double> out(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(double scale) const {
    std::vector<double> out(coeffs_);
    for (double& c : out) c *= scale;
    return Polynomial(std::move(out));
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::fmax(m, std::fabs(c));
    return m;
}

Polynomial laguerre(int n, double a) {
    if (n < 0) throw DomainError("laguerre: n must be >= 0");
    Polynomial prev({1.0});
    if (n == 0) return prev;
    Polynomial cur({1.0 + a, -1.0});
    for (int k = 1; k < n; ++k) {
        // (k+1) L_{k+1} = (2k+1+a-x) L_k - (k+a) L_{k-1}
        Polynomial next =
            (Polynomial({2.0 * k + 1.0 + a, -1.0}) * cur - prev * (k + a)) * (1.0 / (k + 1.0));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial jacobi(int n, double alpha, double beta) {
    if (n < 0) throw DomainError("jacobi: n must be >= 0");
    if (alpha <= -1.0 || beta <= -1.0) throw DomainError("jacobi: need alpha, beta > -1");
    Polynomial prev({1.0});
    if (n == 0) return prev;
    Polynomial cur({0.5 * (alpha - beta), 0.5 * (alpha + beta + 2.0)});
    const double ab = alpha + beta;
    for (int k = 2; k <= n; ++k) {
        const double c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0);
        const double c2 = (2.0 * k + ab - 1.0) * (alpha * alpha - beta * beta);
        const double c3 = (2.0 * k + ab - 1.0) * (2.0 * k + ab) * (2.0 * k + ab - 2.0);
        const double c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab);
        Polynomial next = (Polynomial({c2, c3}) * cur - prev * c4) * (1.0 / c1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial romanovski(int n, double alpha, double beta) {
    if (n < 0) throw DomainError("romanovski: n must be >= 0");
    // d^k/du^k[(1+u^2)^n W] = (1+u^2)^{n-k} W q_k with q_0 = 1 and
    // q_{k+1} = (1+u^2) q_k' + (2(n-k+beta-1) u + alpha) q_k; the weight cancels.
    Polynomial q({1.0});
    const Polynomial one_plus_u2({1.0, 0.0, 1.0});
    double factor = 1.0;
    for (int k = 0; k < n; ++k) {
        q = one_plus_u2 * q.derivative() +
            Polynomial({alpha, 2.0 * (n - k + beta - 1.0)}) * q;
        factor *= 2.0 * (k + 1.0);
    }
    return q * (1.0 / factor);
}

double n_phi_sq_eff(const PhysicalParams& params, int n_phi) {
    return static_cast<double>(n_phi) * n_phi +
           2.0 * params.mu * params.gamma / (params.hbar * params.hbar);
}

CotangentPolarParams cotangent_polar_params(const PhysicalParams& params, int n_theta,
                                            double n_phi_sq_eff) {
    params.validate();
    if (n_theta < 0 || n_phi_sq_eff < 0.0)
        throw DomainError("cotangent_polar_params: invalid quantum numbers");
    const double h2 = params.hbar * params.hbar;
    const double np_eff = std::sqrt(n_phi_sq_eff);
    const double nu = n_theta + np_eff + 0.5;
    const double ratio = params.mu * params.rho / (h2 * nu * nu);
    if (ratio > 1.0)
        throw NoBoundState("no bound state: (n_theta + n_phi_eff + 1/2)^4 < mu^2 rho^2 / hbar^4");
    CotangentPolarParams out;
    out.beta_R = 0.5 - n_theta - np_eff;
    out.alpha_R = 2.0 * params.mu * params.rho / (h2 * nu);
    out.l_eff = nu * std::sqrt(1.0 - ratio * ratio) - 0.5;
    return out;
}

KiblerPolarParams kibler_polar_params(const PhysicalParams& params, int n_theta,
                                      double n_phi_sq_eff) {
    params.validate();
    if (n_theta < 0 || n_phi_sq_eff < 0.0)
        throw DomainError("kibler_polar_params: invalid quantum numbers");
    const double h2 = params.hbar * params.hbar;
    const double minus = n_phi_sq_eff - 2.0 * params.mu * params.rho / h2;
    if (minus < 0.0)
        throw NoBoundState("no bound state: n_phi_eff^2 < 2 mu rho / hbar^2");
    KiblerPolarParams out;
    out.alpha_J = std::sqrt(minus);
    out.beta_J = std::sqrt(n_phi_sq_eff + 2.0 * params.mu * params.rho / h2);
    out.l_eff = n_theta + 0.5 * (out.alpha_J + out.beta_J);
    return out;
}

std::function<double(double)> radial_wavefunction(const PhysicalParams& params, int n_r,
                                                  double l_eff, double energy) {
    params.validate();
    if (n_r < 0) throw DomainError("radial_wavefunction: n_r must be >= 0");
    if (energy >= 0.0) throw DomainError("radial_wavefunction: bound states require E < 0");
    const double q = std::sqrt(2.0 * params.mu * -energy) / params.hbar;
    const Polynomial lag = laguerre(n_r, 2.0 * l_eff + 1.0);
    return [q, l_eff, lag](double r) {
        return std::pow(q * r, l_eff) * std::exp(-q * r) * lag(2.0 * q * r);
    };
}

std::function<double(double)> polar_wavefunction_cotangent(const PhysicalParams& params,
                                                           int n_theta, int n_phi) {
    const double npsq = n_phi_sq_eff(params, n_phi);
    const CotangentPolarParams pp = cotangent_polar_params(params, n_theta, npsq);
    const double np_eff = std::sqrt(npsq);
    const double h2 = params.hbar * params.hbar;
    const double exp_rate = params.mu * params.rho / (h2 * (n_theta + np_eff + 0.5));
    const double sin_pow = n_theta + np_eff;
    const Polynomial rom = romanovski(n_theta, pp.alpha_R, pp.beta_R);
    return [exp_rate, sin_pow, rom](double theta) {
        return std::exp(-exp_rate * theta) * std::pow(std::sin(theta), sin_pow) *
               rom(1.0 / std::tan(theta));
    };
}

std::function<double(double)> polar_wavefunction_kibler(const PhysicalParams& params, int n_theta,
                                                        int n_phi) {
    const KiblerPolarParams pp = kibler_polar_params(params, n_theta, n_phi_sq_eff(params, n_phi));
    const Polynomial jac = jacobi(n_theta, pp.alpha_J, pp.beta_J);
    const double a = pp.alpha_J, b = pp.beta_J;
    return [a, b, jac](double theta) {
        const double v = std::cos(theta);
        return std::pow(1.0 - v, 0.5 * a) * std::pow(1.0 + v, 0.5 * b) * jac(v);
    };
}

double qm_energy_cotangent(const PhysicalParams& params, const QuantumNumbers& qn) {
    qn.validate();
    const CotangentPolarParams pp =
        cotangent_polar_params(params, qn.n_theta, n_phi_sq_eff(params, std::abs(qn.n_phi)));
    const double bracket = qn.n_r + pp.l_eff + 1.0;
    return -params.mu * params.kappa * params.kappa /
           (2.0 * params.hbar * params.hbar * bracket * bracket);
}

double qm_energy_kibler(const PhysicalParams& params, const QuantumNumbers& qn) {
    qn.validate();
    const KiblerPolarParams pp =
        kibler_polar_params(params, qn.n_theta, n_phi_sq_eff(params, std::abs(qn.n_phi)));
    const double bracket = qn.n_r + pp.l_eff + 1.0;
    return -params.mu * params.kappa * params.kappa /
           (2.0 * params.hbar * params.hbar * bracket * bracket);
}

double qm_energy(const PhysicalParams& params, const QuantumNumbers& qn, PotentialKind kind) {
    return kind == PotentialKind::Cotangent ? qm_energy_cotangent(params, qn)
                                            : qm_energy_kibler(params, qn);
}

}  // namespace ncp
