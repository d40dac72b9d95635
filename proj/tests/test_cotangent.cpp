#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ncp/cotangent.hpp"
#include "ncp/quadrature.hpp"

using namespace ncp;

namespace {

PhysicalParams make_params(double mu, double kappa, double rho, double gamma) {
    PhysicalParams p;
    p.mu = mu;
    p.kappa = kappa;
    p.rho = rho;
    p.gamma = gamma;
    return p;
}

const PhysicalParams fig1a = make_params(1, 20, 10, 0);
const PhysicalParams fig2a = make_params(1, 10, 20, 4);
const PhysicalParams fig2b = make_params(1, 10, 20, 6);
const SeparationConstants consts_a{3.0, 3.0, 2.0};

}  // namespace

TEST_CASE("orbit constants") {
    const CotangentOrbitConstants k = cotangent_constants(fig1a, consts_a);
    CHECK(k.A == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(k.B == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(k.C == doctest::Approx(std::sqrt(7.5)).epsilon(1e-14));
    CHECK(k.ratio == 1.0);
    CHECK(k.alpha_phi_eff == 2.0);
    // internal invariants
    const double den = (k.B - k.C) * (k.B - k.C) + 1.0;
    CHECK(k.E == doctest::Approx(((k.B + k.C) * (k.B + k.C) + 1.0) / den).epsilon(1e-14));
    CHECK(k.G == doctest::Approx(std::sqrt(k.E)).epsilon(1e-14));
    CHECK(k.F * k.F == doctest::Approx(0.5 * (k.G - k.D)).epsilon(1e-13));
    CHECK(k.H * k.H == doctest::Approx(k.G - k.F * k.F).epsilon(1e-13));

    SUBCASE("equatorial Kepler circle") {
        const CotangentOrbitConstants kc =
            cotangent_constants(make_params(1, 20, 0, 0), {3.0, 2.0, 2.0});
        CHECK(kc.A == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(kc.B == 0.0);
        CHECK(kc.C == doctest::Approx(0.0).epsilon(1e-7));
    }
    SUBCASE("gamma != 0 substitution") {
        const CotangentOrbitConstants kg = cotangent_constants(fig2a, consts_a);
        CHECK(kg.alpha_phi_eff == doctest::Approx(std::sqrt(12.0)).epsilon(1e-14));
        CHECK(kg.A == doctest::Approx(3.0 / std::sqrt(12.0)).epsilon(1e-14));
        CHECK(kg.B == doctest::Approx(20.0 / 12.0).epsilon(1e-14));
        CHECK(kg.ratio == doctest::Approx(std::sqrt(12.0) / 2.0).epsilon(1e-14));
    }
    SUBCASE("unbound theta throws") {
        CHECK_THROWS_AS(cotangent_constants(make_params(1, 20, 0, 0), {3.0, 3.0, 4.0}),
                        DomainError);
        CHECK_THROWS_AS(cotangent_constants(fig1a, {3.0, 3.0, 0.0}), DomainError);
    }
}

TEST_CASE("theta(phi) and extrema") {
    const CotangentOrbitConstants k = cotangent_constants(fig1a, consts_a);
    const auto [th1, th2] = theta_extrema(k);
    CHECK(th1 < th2);
    CHECK(theta_of_phi(k, 0.0) == doctest::Approx(th1).epsilon(1e-14));
    CHECK(theta_of_phi(k, M_PI / k.ratio) == doctest::Approx(th2).epsilon(1e-14));
    CHECK(theta_of_phi(k, M_PI / 2.0) == doctest::Approx(std::atan(1.0 / 2.5)).epsilon(1e-12));
    CHECK(th1 == doctest::Approx(M_PI / 2.0 - std::atan(2.5 + std::sqrt(7.5))).epsilon(1e-13));
    CHECK(th2 == doctest::Approx(M_PI / 2.0 - std::atan(2.5 - std::sqrt(7.5))).epsilon(1e-13));

    // theta and phi share one period at gamma = 0
    for (double phi = 0.0; phi < 2.0 * M_PI; phi += 0.37)
        CHECK(theta_of_phi(k, phi + 2.0 * M_PI) ==
              doctest::Approx(theta_of_phi(k, phi)).epsilon(1e-13));

    SUBCASE("Kepler-limit extrema symmetric about pi/2") {
        const CotangentOrbitConstants kk =
            cotangent_constants(make_params(1, 20, 0, 0), {3.0, 3.0, 2.0});
        const auto [t1, t2] = theta_extrema(kk);
        CHECK(t1 + t2 == doctest::Approx(M_PI).epsilon(1e-13));
        const double expected = M_PI / 2.0 - std::atan(std::sqrt(9.0 / 4.0 - 1.0));
        CHECK(t1 == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("psi(phi) closed form") {
    const CotangentOrbitConstants k = cotangent_constants(fig1a, consts_a);
    CHECK(psi_of_phi(k, 0.0) == 0.0);

    SUBCASE("equatorial identity psi = phi") {
        const CotangentOrbitConstants kc =
            cotangent_constants(make_params(1, 20, 0, 0), {3.0, 2.0, 2.0});
        for (double phi = 0.0; phi < 10.0; phi += 0.7)
            CHECK(psi_of_phi(kc, phi) == doctest::Approx(phi).epsilon(1e-6));
    }

    SUBCASE("finite differences reproduce the integrand") {
        std::mt19937 rng(2024);
        std::uniform_real_distribution<double> u(0.05, 6.0 * M_PI);
        const double h = 1e-6;
        for (int i = 0; i < 200; ++i) {
            const double phi = u(rng);
            const double fd = (psi_of_phi(k, phi + h) - psi_of_phi(k, phi - h)) / (2.0 * h);
            const double ct = k.B + k.C * std::cos(k.ratio * phi);
            const double expected = (k.A * k.ratio) / (1.0 + ct * ct);
            CHECK(fd == doctest::Approx(expected).epsilon(1e-6));
        }
    }

    SUBCASE("matches quadrature over [0, 6 pi] for fig 1 and fig 2 parameter sets") {
        for (const auto& [p, c] : {std::pair{fig1a, consts_a}, {make_params(1, 20, 20, 0), consts_a},
                                   {fig2a, consts_a}, {fig2b, consts_a}}) {
            const CotangentOrbitConstants kk = cotangent_constants(p, c);
            for (double phi = 0.5; phi <= 6.0 * M_PI; phi += 1.1) {
                const double quad = psi_of_phi_quadrature(p, c, phi, 1e-12);
                CHECK(std::fabs(psi_of_phi(kk, phi) - quad) < 1e-9);
            }
        }
    }

    SUBCASE("continuous and increasing across the tangent singularities") {
        double prev = -1e-9;
        for (double phi = 0.0; phi <= 6.0 * M_PI; phi += 1e-3) {
            const double cur = psi_of_phi(k, phi);
            CHECK(cur > prev);
            CHECK(cur - prev < 2e-3 * k.A);  // no jumps
            prev = cur;
        }
    }

    SUBCASE("floating boundary of the half-period reduction") {
        // phi = 5 pi computed as 6 pi * 10/12 lands a hair outside [-pi, pi)
        const double phi = 6.0 * M_PI * 10.0 / 12.0;
        CHECK(psi_of_phi(k, phi) ==
              doctest::Approx(2.5 * k.psi_period).epsilon(1e-12));
    }
}

TEST_CASE("cone geometry") {
    SUBCASE("rho = 0 plane limit") {
        const EllipticCone cone = cone_geometry(make_params(1, 20, 0, 0), {3.0, 3.0, 2.0});
        CHECK(cone.theta_xz == doctest::Approx(M_PI / 2.0).epsilon(1e-14));
        CHECK(cone.theta_yz == doctest::Approx(M_PI / 2.0).epsilon(1e-14));
        CHECK(std::cos(cone.theta_c) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    }
    SUBCASE("alpha_theta -> 0 pushes theta_xz to pi/4") {
        const EllipticCone cone = cone_geometry(make_params(1, 20, 10, 0), {3.0, 1e-5, 1e-6});
        CHECK(cone.theta_xz == doctest::Approx(M_PI / 4.0).epsilon(1e-9));
    }
    SUBCASE("half-angle identities against theta extrema") {
        const EllipticCone cone = cone_geometry(fig1a, consts_a);
        const auto [th1, th2] = theta_extrema(cotangent_constants(fig1a, consts_a));
        CHECK(cone.theta_c == doctest::Approx(0.5 * (th2 - th1)).epsilon(1e-12));
        CHECK(cone.theta_xz == doctest::Approx(0.5 * (th2 + th1)).epsilon(1e-12));
        CHECK(cone.theta_yz <= cone.theta_xz);
        CHECK(cone.theta_yz > 0.0);
    }
    SUBCASE("rotation matrix is a proper rotation about y") {
        const EllipticCone cone = cone_geometry(fig1a, consts_a);
        const auto& m = cone.rotation;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double dot = 0.0;
                for (int k = 0; k < 3; ++k) dot += m[i][k] * m[j][k];
                CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-14));
            }
        const double det =
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
            m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
            m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        CHECK(det == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("gamma != 0 has no fixed surface") {
        CHECK_THROWS_AS(cone_geometry(fig2a, consts_a), DomainError);
    }
}

TEST_CASE("orbit sampling") {
    const Trajectory traj = sample_orbit_cotangent(fig1a, consts_a, 6.0 * M_PI, 1200);
    REQUIRE(traj.samples.size() == 1200);
    const RadialOrbit orbit = radial_turning_points(fig1a, consts_a);
    const CotangentOrbitConstants k = cotangent_constants(fig1a, consts_a);
    const auto [th1, th2] = theta_extrema(k);
    double prev_t = -1e-9;
    for (const auto& s : traj.samples) {
        CHECK(s.r >= orbit.r1 * (1.0 - 1e-12));
        CHECK(s.r <= orbit.r2 * (1.0 + 1e-12));
        CHECK(s.theta >= th1 - 1e-12);
        CHECK(s.theta <= th2 + 1e-12);
        CHECK(s.t > prev_t);
        prev_t = s.t;
        // cone confinement, pre-diagonalization form
        const double res = s.z - k.C * s.x - k.B * std::sqrt(s.x * s.x + s.y * s.y);
        CHECK(std::fabs(res) / s.r < 1e-9);
        // spherical-to-Cartesian consistency
        CHECK(s.x * s.x + s.y * s.y + s.z * s.z == doctest::Approx(s.r * s.r).epsilon(1e-12));
    }

    SUBCASE("two samples give the endpoints") {
        const Trajectory two = sample_orbit_cotangent(fig1a, consts_a, 2.0 * M_PI, 2);
        REQUIRE(two.samples.size() == 2);
        CHECK(two.samples[0].phi == 0.0);
        CHECK(two.samples[1].phi == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
    }
    SUBCASE("energy conservation along the trajectory") {
        const double periods = psi_of_phi(k, 6.0 * M_PI) / (2.0 * M_PI);
        const int n = static_cast<int>(std::ceil(4000.0 * periods)) + 1;
        const Trajectory fine = sample_orbit_cotangent(fig1a, consts_a, 6.0 * M_PI, n);
        CHECK(energy_along_orbit(fig1a, fine, PotentialKind::Cotangent, 3.0) < 1e-5);
    }
}
