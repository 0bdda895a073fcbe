#include <cmath>
#include <vector>

#include "doctest.h"
#include "majorana/random.hpp"
#include "majorana/sc_basis.hpp"
#include "majorana/stellar.hpp"

using namespace majorana;

namespace {

std::vector<Direction> random_directions(int count, Rng& rng) {
  std::vector<Direction> out;
  for (int i = 0; i < count; ++i) out.push_back(random_direction(rng));
  return out;
}

CVector reconstruct(const CVector& alphas, const SCBasis& basis) {
  CVector v = CVector::Zero(basis.two_spin() + 1);
  for (int k = 0; k <= basis.two_spin(); ++k) v += alphas(k) * basis.states()[k].coeffs();
  return v;
}

}  // namespace

TEST_CASE("sc_state examples") {
  const SpinState z = sc_state(Direction::north(), 4);
  CHECK(std::abs(z[0] - 1.0) < 1e-15);
  for (int k = 1; k <= 4; ++k) CHECK(std::abs(z[k]) == 0.0);
  const double alpha = 0.8;
  const SpinState n1 = sc_state({alpha, 0.0}, 2);
  CHECK(std::abs(n1[0] - std::pow(std::cos(alpha / 2), 2)) < 1e-15);
  CHECK(std::abs(n1[1] - std::sin(alpha) / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(n1[2] - std::pow(std::sin(alpha / 2), 2)) < 1e-15);
}

TEST_CASE("sc_state is the top eigenvector of n.S") {
  Rng rng(41);
  for (int n = 1; n <= 6; ++n) {
    const SpinMatrices s = spin_matrices(n);
    for (int trial = 0; trial < 20; ++trial) {
      const Direction d = random_direction(rng);
      const Vec3 u = d.unit();
      const CMatrix ns = u.x() * s.x + u.y() * s.y + u.z() * s.z;
      const SpinState c = sc_state(d, n);
      CHECK((ns * c.coeffs() - 0.5 * n * c.coeffs()).norm() < 1e-12);
      CHECK(std::abs(c.norm() - 1.0) < 1e-14);
      const Constellation stars = constellation(c);
      REQUIRE(stars.distinct_count() == 1);
      CHECK(chordal_distance(stars.stars()[0].direction(), d) < 1e-9);
    }
  }
}

TEST_CASE("Vandermonde inverse") {
  const CMatrix inv = vandermonde_inverse({Complex(0.0, 0.0), Complex(1.0, 0.0)});
  CHECK(std::abs(inv(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(inv(0, 1) + 1.0) < 1e-15);
  CHECK(std::abs(inv(1, 0)) < 1e-15);
  CHECK(std::abs(inv(1, 1) - 1.0) < 1e-15);

  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Complex> g;
    for (int i = 0; i < 4; ++i) g.push_back(random_complex(rng));
    const CMatrix vi = vandermonde_inverse(g);
    CHECK((vandermonde(g) * vi - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-9);
    // row i evaluated at zeta equals prod_{k != i} (zeta - g_k) / (g_i - g_k)
    const Complex zeta = random_complex(rng);
    for (int i = 0; i < 4; ++i) {
      Complex expected = 1.0;
      for (int k = 0; k < 4; ++k) {
        if (k != i) expected *= (zeta - g[k]) / (g[i] - g[k]);
      }
      Complex row_value = 0.0;
      for (int j = 3; j >= 0; --j) row_value = row_value * zeta + vi(i, j);
      CHECK(std::abs(row_value - expected) < 1e-10 * std::max(1.0, std::abs(expected)));
    }
  }
  CHECK_THROWS_AS(vandermonde_inverse({Complex(1.0, 0.0), Complex(1.0, 0.0)}), Error);
}

TEST_CASE("spin-1 equatorial pair in the basis {-1, e^{i phi}, e^{-i phi}}") {
  for (double phi : {kPi / 6, kPi / 4, kPi / 3, 1.0}) {
    const std::vector<Direction> stars = {{kPi / 2, phi}, {kPi / 2, 2 * kPi - phi}};
    const SpinState psi = state_from_constellation(Constellation::from_directions(stars, 1e-7));
    const SCBasis basis({{kPi / 2, kPi}, {kPi / 2, phi}, {kPi / 2, 2 * kPi - phi}});
    const ExpansionCoefficients e = expand_in_sc_basis(psi, basis);
    CHECK(std::abs(e.product_alphas(0) - (1.0 - std::cos(phi))) < 1e-12);
    CHECK(std::abs(e.product_alphas(1) - std::polar(0.5, -phi)) < 1e-12);
    CHECK(std::abs(e.product_alphas(2) - std::polar(0.5, phi)) < 1e-12);
    CHECK(e.residual < 1e-12);
  }
}

TEST_CASE("a basis member expands to a unit vector") {
  Rng rng(43);
  for (int n = 1; n <= 6; ++n) {
    const auto dirs = random_directions(n + 1, rng);
    const SCBasis basis(dirs);
    const ExpansionCoefficients e = expand_in_sc_basis(basis.states()[0], basis);
    CHECK(std::abs(e.alphas(0) - 1.0) < 1e-8);
    for (int k = 1; k <= n; ++k) CHECK(std::abs(e.alphas(k)) < 1e-8);
  }
}

TEST_CASE("random expansions reconstruct the state") {
  Rng rng(44);
  for (int n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const SpinState psi = random_state(n, rng);
      const SCBasis basis(random_directions(n + 1, rng));
      const ExpansionCoefficients e = expand_in_sc_basis(psi, basis);
      // independent oracle: dense solve on the coefficient vectors
      CMatrix m(n + 1, n + 1);
      for (int k = 0; k <= n; ++k) m.col(k) = basis.states()[k].coeffs();
      const CVector direct = m.fullPivLu().solve(psi.coeffs());
      const double scale = std::max(1.0, direct.cwiseAbs().maxCoeff());
      if (n <= 4) {
        CHECK(e.residual < 1e-8);
        CHECK((e.alphas - direct).cwiseAbs().maxCoeff() < 1e-8 * scale);
      }
      CHECK(e.residual < 1e-12 * basis.condition_number() + 1e-8);
    }
  }
}

TEST_CASE("basis directions at or near the south pole use a rotated frame") {
  Rng rng(45);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      auto dirs = random_directions(n + 1, rng);
      dirs[trial % (n + 1)] = (trial % 2 == 0) ? Direction::south() : Direction{kPi - 1e-5, 1.0};
      const SCBasis basis(dirs);
      CHECK(basis.rotated());
      const SpinState psi = random_state(n, rng);
      const ExpansionCoefficients e = expand_in_sc_basis(psi, basis);
      CHECK((reconstruct(e.alphas, basis) - psi.coeffs()).norm() < 1e-8);
      for (const auto& g : basis.frame_gammas()) CHECK(std::abs(g) < 1e3);
    }
  }
}

TEST_CASE("tilde alphas solve the monic factorization") {
  Rng rng(46);
  for (int n = 1; n <= 5; ++n) {
    const SpinState psi = random_state(n, rng);
    const SCBasis basis(random_directions(n + 1, rng));
    const ExpansionCoefficients e = expand_in_sc_basis(psi, basis);
    REQUIRE(e.tilde_alphas.has_value());
    const auto gammas = basis.gammas();
    std::vector<Complex> roots;
    for (const auto& p : constellation(psi).points()) roots.push_back(p.value());
    const MajoranaPolynomial monic = MajoranaPolynomial::from_roots(roots);
    CVector sum = CVector::Zero(n + 1);
    for (int k = 0; k <= n; ++k) {
      sum += (*e.tilde_alphas)(k) * MajoranaPolynomial::from_roots(std::vector<Complex>(n, gammas[k].value())).coeffs();
    }
    CHECK((sum - monic.coeffs()).cwiseAbs().maxCoeff() < 1e-8 * std::max(1.0, monic.coeffs().cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("product alphas relate to alphas through A and a phase") {
  Rng rng(47);
  for (int n = 2; n <= 5; ++n) {
    const SpinState psi = random_state(n, rng);
    const SCBasis basis(random_directions(n + 1, rng));
    const ExpansionCoefficients e = expand_in_sc_basis(psi, basis);
    const double a = symmetrized_norm(constellation(psi));
    const Complex ratio = e.alphas(0) / e.product_alphas(0);
    CHECK(std::abs(std::abs(ratio) - a) < 1e-8 * a);
    CHECK((e.alphas - ratio * e.product_alphas).cwiseAbs().maxCoeff() < 1e-8 * e.alphas.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("any N+1 distinct coherent directions form a basis") {
  Rng rng(48);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      const SCBasis basis(random_directions(n + 1, rng));
      CMatrix m(n + 1, n + 1);
      for (int k = 0; k <= n; ++k) m.col(k) = basis.states()[k].coeffs();
      CHECK(std::abs(m.determinant()) > 0.0);
    }
  }
}

TEST_CASE("dual basis") {
  Rng rng(49);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const SCBasis basis(random_directions(n + 1, rng));
      const auto dual = dual_basis(basis);
      CMatrix resolution = CMatrix::Zero(n + 1, n + 1);
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          const Complex pairing = inner(dual[j], basis.states()[i]);
          CHECK(std::abs(pairing - (i == j ? 1.0 : 0.0)) < 1e-9);
        }
        resolution += dual[i].coeffs() * basis.states()[i].coeffs().adjoint();
      }
      // both orderings of the resolution of the identity
      CMatrix other = CMatrix::Zero(n + 1, n + 1);
      for (int i = 0; i <= n; ++i) other += basis.states()[i].coeffs() * dual[i].coeffs().adjoint();
      CHECK((other - CMatrix::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff() < 1e-9);
      CHECK((resolution - CMatrix::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff() < 1e-9);

      const SpinState psi = random_state(n, rng);
      const ExpansionCoefficients e = expand_in_sc_basis(psi, basis);
      CHECK((dual_expansion(psi, dual) - e.alphas).cwiseAbs().maxCoeff() < 1e-8);
    }
  }
  const SCBasis basis(random_directions(4, rng));
  const auto dual = dual_basis(basis);
  CHECK(std::abs(dual[0].norm() - 1.0) > 1e-3);
}

TEST_CASE("time reversal") {
  Rng rng(50);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const SpinState psi = random_state(n, rng);
      const SpinState t = time_reversal(psi);
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      CHECK((time_reversal(t).coeffs() - sign * psi.coeffs()).norm() < 1e-14);
      if (n % 2 == 1) CHECK(std::abs(inner(psi, t)) < 1e-12);
      CHECK(multiset_distance(constellation(t), constellation(psi).antipodal()) < 1e-8);
    }
  }
}
