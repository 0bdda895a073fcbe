#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "majorana/random.hpp"
#include "majorana/stellar.hpp"

using namespace majorana;

namespace {

// Explicit 2^N tensor of the stars, symmetrized by permuting tensor slots.
CVector brute_force_symmetrized(const std::vector<Direction>& stars) {
  const int n = static_cast<int>(stars.size());
  const int dim = 1 << n;
  CVector sym = CVector::Zero(dim);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double count = 0.0;
  do {
    for (int idx = 0; idx < dim; ++idx) {
      Complex amp = 1.0;
      for (int slot = 0; slot < n; ++slot) {
        const int bit = (idx >> (n - 1 - slot)) & 1;
        amp *= spinor(stars[perm[slot]])(bit);
      }
      sym(idx) += amp;
    }
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sym / count;
}

std::vector<Complex> finite_values(const Constellation& c) {
  std::vector<Complex> out;
  for (const auto& p : c.points()) out.push_back(p.value());
  return out;
}

}  // namespace

TEST_CASE("polynomial of |z> is zeta^N") {
  for (int n = 1; n <= 6; ++n) {
    const MajoranaPolynomial p = majorana_polynomial(SpinState::basis(n, 0));
    for (int j = 0; j < n; ++j) CHECK(std::abs(p[j]) == 0.0);
    CHECK(p[n] == Complex(1.0, 0.0));
    const Constellation c = polynomial_roots(p);
    REQUIRE(c.distinct_count() == 1);
    CHECK(c.stars()[0].multiplicity == n);
    CHECK(std::abs(c.stars()[0].point.value()) == 0.0);
  }
}

TEST_CASE("spin-1/2 polynomial and root") {
  const double theta = 1.1;
  const double phi = 2.3;
  CVector c(2);
  c << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
  const MajoranaPolynomial p = majorana_polynomial(SpinState(1, c));
  CHECK(std::abs(p[1] - std::cos(theta / 2)) < 1e-15);
  CHECK(std::abs(p[0] + std::polar(std::sin(theta / 2), phi)) < 1e-15);
  const Constellation roots = polynomial_roots(p);
  CHECK(std::abs(roots.stars()[0].point.value() - std::polar(std::tan(theta / 2), phi)) < 1e-14);
}

TEST_CASE("GHZ polynomial is proportional to zeta^3 - 1") {
  CVector c = CVector::Zero(4);
  c(0) = c(3) = 1.0 / std::sqrt(2.0);
  const MajoranaPolynomial p = majorana_polynomial(SpinState(3, c));
  const Complex ratio = p[3];
  CHECK(std::abs(p[0] / ratio + 1.0) < 1e-15);
  CHECK(std::abs(p[1]) == 0.0);
  CHECK(std::abs(p[2]) == 0.0);
  const Constellation stars = polynomial_roots(p);
  REQUIRE(stars.distinct_count() == 3);
  for (const auto& s : stars.stars()) {
    CHECK(std::abs(std::pow(s.point.value(), 3) - 1.0) < 1e-13);
    CHECK(s.direction().theta == doctest::Approx(kPi / 2));
  }
}

TEST_CASE("lowest-weight state has all stars at infinity") {
  for (int n = 1; n <= 8; ++n) {
    const Constellation c = constellation(SpinState::basis(n, n));
    REQUIRE(c.distinct_count() == 1);
    CHECK(c.stars()[0].point.is_infinite());
    CHECK(c.stars()[0].multiplicity == n);
  }
}

TEST_CASE("vanishing leading coefficients become roots at infinity") {
  // (zeta - 1)(zeta - 2) with nominal degree 4
  CVector a = CVector::Zero(5);
  a << 2.0, -3.0, 1.0, 1e-14, 0.0;
  const Constellation c = polynomial_roots(MajoranaPolynomial(a));
  CHECK(c.total_multiplicity() == 4);
  int infinite = 0;
  for (const auto& s : c.stars()) {
    if (s.point.is_infinite()) infinite = s.multiplicity;
  }
  CHECK(infinite == 2);
}

TEST_CASE("all-zero polynomial is rejected") {
  CHECK_THROWS_AS(polynomial_roots(MajoranaPolynomial(CVector::Zero(4))), Error);
}

TEST_CASE("roots of a factored quartic") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> roots;
    for (int i = 0; i < 4; ++i) roots.push_back(random_complex(rng));
    const MajoranaPolynomial p = MajoranaPolynomial::from_roots(roots);
    const Constellation c = polynomial_roots(p);
    REQUIRE(c.total_multiplicity() == 4);
    std::vector<StereoPoint> expected(roots.begin(), roots.end());
    CHECK(multiset_distance(c.points(), expected) < 1e-9);
    for (const auto& z : finite_values(c)) CHECK(std::abs(p(z)) <= 1e-12 * p.scale_at(z));
  }
}

TEST_CASE("coherent states give a single N-fold star") {
  Rng rng(22);
  for (int n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Direction dir = random_direction(rng);
      const SpinState sc = symmetric_product(std::vector<Direction>(n, dir)).normalized();
      const Constellation c = constellation(sc);
      REQUIRE(c.distinct_count() == 1);
      CHECK(c.stars()[0].multiplicity == n);
      CHECK(chordal_distance(c.stars()[0].direction(), dir) < 1e-7);
    }
  }
}

TEST_CASE("mixed multiplicities are recovered") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Direction a = random_direction(rng);
    const Direction b = random_direction(rng);
    const Direction d = random_direction(rng);
    std::vector<Direction> stars = {a, a, a, b, b, d};
    const Constellation c = constellation(symmetric_product(stars).normalized());
    REQUIRE(c.distinct_count() == 3);
    std::vector<int> mult;
    for (const auto& s : c.stars()) mult.push_back(s.multiplicity);
    std::sort(mult.begin(), mult.end());
    CHECK(mult == std::vector<int>{1, 2, 3});
    CHECK(multiset_distance(c.points(), Constellation::from_directions(stars, 0.0).points()) < 1e-6);
  }
}

TEST_CASE("random states have N distinct stars") {
  Rng rng(24);
  for (int n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      CHECK(constellation(random_state(n, rng)).distinct_count() == n);
    }
  }
}

TEST_CASE("state -> constellation -> state round trip") {
  Rng rng(25);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const SpinState psi = random_state(n, rng);
      const SpinState back = state_from_constellation(constellation(psi));
      CHECK(fidelity(psi, back) > 1.0 - 1e-12);
      CHECK(std::abs(back.norm() - 1.0) < 1e-14);
    }
  }
}

TEST_CASE("state_from_constellation examples") {
  const Direction n{0.7, 1.9};
  const SpinState sc = state_from_constellation(Constellation::coherent(n, 3));
  // first coefficient real positive and equal to cos^3(theta/2)
  CHECK(std::abs(sc[0] - std::pow(std::cos(0.35), 3)) < 1e-14);
  std::vector<Direction> cube;
  for (int k = 0; k < 3; ++k) cube.push_back({kPi / 2, 2 * kPi * k / 3});
  const SpinState ghz = state_from_constellation(Constellation::from_directions(cube, 1e-7));
  CHECK(std::abs(ghz[0] - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(std::abs(ghz[3]) - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(ghz[1]) < 1e-14);
  CHECK(std::abs(ghz[2]) < 1e-14);
}

TEST_CASE("rotation equivariance of constellations") {
  Rng rng(26);
  CHECK((rotate_state(random_state(3, rng), Rotation::identity()).coeffs() -
         rotate_state(random_state(3, rng), Rotation::identity()).coeffs())
            .size() == 4);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const SpinState psi = random_state(n, rng);
      const Rotation r = random_rotation(rng);
      const Constellation rotated_stars = constellation(psi).rotated(r);
      const Constellation stars_of_rotated = constellation(rotate_state(psi, r));
      CHECK(multiset_distance(rotated_stars, stars_of_rotated) < 1e-8);
    }
  }
}

TEST_CASE("rotating |z> about y gives the coherent state along the rotated axis") {
  const double theta = 0.9;
  const SpinState z = SpinState::basis(4, 0);
  const SpinState out = rotate_state(z, Rotation::axis_angle(Vec3::UnitY(), theta));
  const SpinState expected = state_from_constellation(Constellation::coherent({theta, 0.0}, 4));
  CHECK(fidelity(out, expected) > 1.0 - 1e-14);
}

TEST_CASE("permanent: permutation sum and Ryser agree") {
  Rng rng(27);
  for (int n = 1; n <= 8; ++n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = random_complex(rng);
    const Complex a = permanent_by_permutations(m);
    const Complex b = permanent_ryser(m);
    CHECK(std::abs(a - b) < 1e-10 * std::max(1.0, std::abs(a)));
  }
  CMatrix ones = CMatrix::Ones(10, 10);
  CHECK(std::abs(permanent(ones) - 3628800.0) < 1e-6);
}

TEST_CASE("symmetrized norm") {
  Rng rng(28);
  const Direction n = random_direction(rng);
  CHECK(symmetrized_norm(Constellation::coherent(n, 5)) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(symmetrized_norm(Constellation::coherent(n, 1)) == doctest::Approx(1.0).epsilon(1e-15));
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Direction> stars = {random_direction(rng), random_direction(rng), random_direction(rng)};
    const Constellation c = Constellation::from_directions(stars, 0.0);
    const double a = symmetrized_norm(c);
    CHECK(a * brute_force_symmetrized(stars).norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a * symmetric_product(stars).norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Direction> stars;
    for (int i = 0; i < 10; ++i) stars.push_back(random_direction(rng));
    const double a = symmetrized_norm(Constellation::from_directions(stars, 0.0));
    CHECK(a * symmetric_product(stars).norm() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("symmetric product matches the explicit tensor in the Dicke basis") {
  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4;
    std::vector<Direction> stars;
    for (int i = 0; i < n; ++i) stars.push_back(random_direction(rng));
    const CVector tensor = brute_force_symmetrized(stars);
    const SpinState dicke = symmetric_product(stars);
    for (int k = 0; k <= n; ++k) {
      // any basis string with k ones, e.g. the last k slots down
      const int idx = (1 << k) - 1;
      CHECK(std::abs(tensor(idx) * sqrt_binomial(n, k) - dicke[k]) < 1e-13);
    }
  }
}

TEST_CASE("coherent overlap") {
  Rng rng(30);
  const SpinState psi = random_state(5, rng);
  CHECK(std::abs(coherent_overlap(psi, Direction::north()) - psi[0]) < 1e-15);
  for (int n = 1; n <= 6; ++n) {
    const SpinState phi = random_state(n, rng);
    for (const auto& d : constellation(phi).directions()) {
      CHECK(std::abs(coherent_overlap(phi, d.antipode())) < 1e-10);
    }
    for (int i = 0; i < 32; ++i) {
      for (int j = 0; j < 32; ++j) {
        const Direction d{kPi * (i + 0.5) / 32, 2 * kPi * j / 32};
        CHECK(std::abs(coherent_overlap(phi, d) - coherent_overlap_by_rotation(phi, d)) < 1e-10);
      }
    }
  }
}

TEST_CASE("a k-fold star suppresses the k lowest projections along it") {
  Rng rng(31);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) {
      const Direction dir = random_direction(rng);
      std::vector<Direction> stars(k, dir);
      for (int i = k; i < n; ++i) stars.push_back(random_direction(rng));
      const SpinState psi = symmetric_product(stars).normalized();
      // amplitudes along dir: D(R)^dagger psi in the rotated eigenbasis
      const CVector local = rotation_matrix(Rotation::to_direction(dir), n).adjoint() * psi.coeffs();
      for (int m = 0; m < k; ++m) CHECK(std::abs(local(n - m)) < 1e-12);
      if (k < n) CHECK(std::abs(local(n - k)) > 1e-8);
    }
  }
}

TEST_CASE("nearby multiple stars are not merged") {
  Rng rng(32);
  for (int n = 6; n <= 12; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const Direction a = random_direction(rng);
      const Direction b = random_direction(rng);
      const Direction e = random_direction(rng);
      std::vector<Direction> stars(n / 2, a);
      stars.insert(stars.end(), n - 1 - n / 2, b);
      stars.push_back(e);
      const Constellation c = constellation(symmetric_product(stars).normalized());
      CHECK(c.distinct_count() == 3);
      CHECK(multiset_distance(c.points(), Constellation::from_directions(stars, 0.0).points()) < 1e-6);
    }
  }
}

TEST_CASE("stars at and near the south pole") {
  for (int n = 1; n <= 12; ++n) {
    const SpinState south = state_from_constellation(Constellation::coherent(Direction::south(), n));
    const Constellation c = constellation(south);
    REQUIRE(c.distinct_count() == 1);
    CHECK(c.stars()[0].point.is_infinite());
    const Direction near{3.03, 0.4};
    const Constellation d = constellation(state_from_constellation(Constellation::coherent(near, n)));
    REQUIRE(d.distinct_count() == 1);
    CHECK(chordal_distance(d.stars()[0].direction(), near) < 1e-9);
  }
}
