#include <cmath>
#include <vector>

#include "doctest.h"
#include "majorana/adapted_basis.hpp"
#include "majorana/husimi.hpp"
#include "majorana/random.hpp"
#include "majorana/stellar.hpp"

using namespace majorana;

TEST_CASE("spin-1 equatorial pair") {
  for (double phi : {kPi / 6, kPi / 3, 1.0}) {
    const std::vector<Direction> stars = {{kPi / 2, phi}, {kPi / 2, 2 * kPi - phi}};
    const SpinState psi = state_from_constellation(Constellation::from_directions(stars, 1e-7));
    const AdaptedBasis a = adapted_basis(psi);
    const auto g = a.basis.gammas();
    CHECK(std::abs(g[0].value() + 1.0) < 1e-9);
    CHECK(std::abs(g[1].value() - std::polar(1.0, phi)) < 1e-12);
    CHECK(std::abs(g[2].value() - std::polar(1.0, -phi)) < 1e-12);
    const CVector& p = a.coefficients.product_alphas;
    CHECK(std::abs(p(0) - (1.0 - std::cos(phi))) < 1e-9);
    CHECK(std::abs(p(1) - std::polar(0.5, -phi)) < 1e-9);
    CHECK(std::abs(p(2) - std::polar(0.5, phi)) < 1e-9);
    CHECK(a.warnings.empty());
  }
}

TEST_CASE("c0 is the antipode of the closest coherent state") {
  Rng rng(8);
  for (int n = 2; n <= 5; ++n) {
    const SpinState psi = random_state(n, rng);
    const AdaptedBasis a = adapted_basis(psi);
    CHECK(angular_distance(a.basis.directions()[0], closest_sc(psi).direction.antipode()) < 1e-8);
    CHECK(a.coefficients.residual < 1e-8);
  }
}

TEST_CASE("alpha^0 vanishes exactly for half-integer spin") {
  Rng rng(12);
  for (int n : {1, 3, 5, 7}) {
    for (int trial = 0; trial < 10; ++trial) {
      const AdaptedBasis a = adapted_basis(random_state(n, rng));
      CHECK(std::abs(a.coefficients.alphas(0)) < 1e-10);
    }
  }
  for (int n : {2, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      const AdaptedBasis a = adapted_basis(random_state(n, rng));
      CHECK(std::abs(a.coefficients.alphas(0)) > 1e-6);
    }
  }
}

TEST_CASE("spin-3/2 closed form for the rescaled coefficients") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const AdaptedBasis a = adapted_basis(random_state(3, rng));
    REQUIRE(a.coefficients.tilde_alphas.has_value());
    const CVector& t = *a.coefficients.tilde_alphas;
    const auto g = a.basis.gammas();
    const Complex g1 = g[1].value(), g2 = g[2].value(), g3 = g[3].value();
    const double scale = std::max({1.0, std::abs(t(1)), std::abs(t(2)), std::abs(t(3))});
    CHECK(std::abs(t(0)) < 1e-9 * scale);
    CHECK(std::abs(t(1) + (g2 - g3) * (g2 - g3) / (3.0 * (g1 - g2) * (g1 - g3))) < 1e-9 * scale);
    CHECK(std::abs(t(2) + (g3 - g1) * (g3 - g1) / (3.0 * (g2 - g1) * (g2 - g3))) < 1e-9 * scale);
    CHECK(std::abs(t(3) + (g1 - g2) * (g1 - g2) / (3.0 * (g3 - g1) * (g3 - g2))) < 1e-9 * scale);
  }
}

TEST_CASE("degenerate constellations are rejected") {
  const std::vector<Direction> stars = {{0.3, 0.1}, {0.3, 0.1}, {2.0, 4.0}};
  const SpinState psi = state_from_constellation(Constellation::from_directions(stars, 1e-7));
  CHECK_THROWS_AS(adapted_basis(psi), Error);
  try {
    adapted_basis(psi);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateConstellation);
  }
}
