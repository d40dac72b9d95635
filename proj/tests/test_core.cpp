#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ncp/types.hpp"

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

}  // namespace

TEST_CASE("parameter validation rejects non-physical values") {
    PhysicalParams p;
    CHECK_NOTHROW(p.validate());
    p.mu = -1.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = PhysicalParams{};
    p.kappa = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = PhysicalParams{};
    p.rho = -0.5;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = PhysicalParams{};
    p.gamma = -0.5;
    CHECK_THROWS_AS(p.validate(), DomainError);

    SeparationConstants c;
    CHECK_NOTHROW(c.validate());
    c.energy_abs = 0.0;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = SeparationConstants{};
    c.alpha_theta = -1.0;
    CHECK_THROWS_AS(c.validate(), DomainError);

    QuantumNumbers qn{0, 0, -3};
    CHECK_NOTHROW(qn.validate());
    qn.n_r = -1;
    CHECK_THROWS_AS(qn.validate(), DomainError);
}

TEST_CASE("effective azimuthal constant") {
    SeparationConstants c{3.0, 3.0, 2.0};
    CHECK(effective_alpha_phi(make_params(1, 20, 10, 0), c) == 2.0);
    CHECK(effective_alpha_phi(make_params(1, 10, 20, 4), c) ==
          doctest::Approx(std::sqrt(12.0)).epsilon(1e-14));
    CHECK(effective_alpha_phi(make_params(1, 10, 20, 6), c) == doctest::Approx(4.0).epsilon(1e-14));

    // monotone in gamma, equal to alpha_phi at gamma = 0
    double prev = 2.0;
    for (double g = 0.5; g < 8.0; g += 0.5) {
        const double cur = effective_alpha_phi(make_params(1, 10, 20, g), c);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("cotangent bound constraints") {
    CHECK(validate_cotangent(make_params(1, 20, 10, 0), {3, 3, 2}).is_bound);

    // Kepler limit requires alpha_phi <= alpha_theta: 16(9-16) < 0
    const ValidationReport r2 = validate_cotangent(make_params(1, 20, 0, 0), {3, 3, 4});
    CHECK_FALSE(r2.is_bound);
    REQUIRE(r2.violated_constraints.size() == 1);
    CHECK(r2.violated_constraints[0].name.find("(ii)") != std::string::npos);

    // kappa^2 mu/(2|eps|) = 2 < 9
    const ValidationReport r3 = validate_cotangent(make_params(1, 20, 10, 0), {100, 3, 2});
    CHECK_FALSE(r3.is_bound);
    CHECK(r3.violated_constraints[0].name.find("(i)") != std::string::npos);
}

TEST_CASE("kibler bound constraints") {
    CHECK(validate_kibler(make_params(1, 20, 3, 0), {3, 8, 5}).is_bound);
    CHECK(validate_kibler(make_params(1, 20, 0, 0), {3, 8, 5}).is_bound);

    // alpha_phi^2 = 25 < 2 mu rho = 40
    const ValidationReport r = validate_kibler(make_params(1, 20, 20, 0), {3, 8, 5});
    CHECK_FALSE(r.is_bound);
    REQUIRE_FALSE(r.violated_constraints.empty());
    CHECK(r.violated_constraints[0].name.find("(iii)") != std::string::npos);
}

TEST_CASE("at rho = gamma = 0 both potentials accept exactly the Kepler bound set") {
    const PhysicalParams p = make_params(1.0, 20.0, 0.0, 0.0);
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(0.0, 6.0);
    for (int i = 0; i < 500; ++i) {
        SeparationConstants c{3.0, u(rng), u(rng)};
        const bool kepler_bound = c.alpha_phi <= c.alpha_theta &&
                                  c.alpha_theta * c.alpha_theta <=
                                      p.kappa * p.kappa * p.mu / (2.0 * c.energy_abs);
        CHECK(validate_cotangent(p, c).is_bound == kepler_bound);
        CHECK(validate_kibler(p, c).is_bound == kepler_bound);
    }
}

TEST_CASE("constraint (ii) at gamma=0 matches the rewritten alpha_phi^2 upper bound") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u(0.0, 8.0);
    for (int i = 0; i < 500; ++i) {
        const PhysicalParams p = make_params(1.0, 40.0, u(rng), 0.0);
        SeparationConstants c{1.0, u(rng) + 0.1, u(rng)};
        const double at2 = c.alpha_theta * c.alpha_theta;
        const double bound =
            0.5 * (std::sqrt(at2 * at2 + 4.0 * p.mu * p.mu * p.rho * p.rho) + at2);
        const bool rewritten = c.alpha_phi * c.alpha_phi <= bound;
        CHECK(validate_cotangent(p, c).is_bound == rewritten);
    }
}

TEST_CASE("equality boundaries are bound but flagged degenerate") {
    // circular radius: alpha_theta^2 = kappa^2 mu/(2|eps|) = 4 exactly
    const PhysicalParams p = make_params(1.0, 4.0, 0.0, 0.0);
    const ValidationReport r = validate_cotangent(p, {2.0, 2.0, 1.0});
    CHECK(r.is_bound);
    CHECK(r.degenerate);
    CHECK_FALSE(r.degenerate_notes.empty());
}

TEST_CASE("potential energy evaluation") {
    const PhysicalParams p = make_params(1, 20, 10, 0);
    const double th = 1.0, r = 2.0;
    CHECK(potential_energy(p, PotentialKind::Cotangent, r, th) ==
          doctest::Approx(-20.0 / r + (-10.0 / std::tan(th)) / (r * r)).epsilon(1e-14));
    CHECK(potential_energy(p, PotentialKind::Kibler, r, th) ==
          doctest::Approx(-20.0 / r +
                          (-10.0 * std::cos(th) / (std::sin(th) * std::sin(th))) / (r * r))
              .epsilon(1e-14));
    // gamma adds the cosec^2 barrier to both
    const PhysicalParams pg = make_params(1, 20, 10, 4);
    CHECK(potential_energy(pg, PotentialKind::Cotangent, r, th) -
              potential_energy(p, PotentialKind::Cotangent, r, th) ==
          doctest::Approx(4.0 / (std::sin(th) * std::sin(th) * r * r)).epsilon(1e-13));
}
