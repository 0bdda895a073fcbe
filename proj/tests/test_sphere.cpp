#include <cmath>

#include "doctest.h"
#include "majorana/random.hpp"
#include "majorana/sphere.hpp"
#include "majorana/spin_state.hpp"

#include <Eigen/Eigenvalues>

using namespace majorana;

TEST_CASE("stereographic projection special points") {
  const Direction n0 = stereo_to_sphere(StereoPoint(Complex(0.0, 0.0)));
  CHECK(n0.theta == doctest::Approx(0.0));
  CHECK(stereo_to_sphere(StereoPoint::infinity()).theta == doctest::Approx(kPi));
  const Direction x = stereo_to_sphere(StereoPoint(Complex(1.0, 0.0)));
  CHECK(x.theta == doctest::Approx(kPi / 2));
  CHECK(x.phi == doctest::Approx(0.0));
  CHECK(sphere_to_stereo(Direction::south()).is_infinite());
}

TEST_CASE("stereographic round trip") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Direction n = random_direction(rng);
    const Direction back = stereo_to_sphere(sphere_to_stereo(n));
    CHECK(chordal_distance(n, back) < 1e-13);
  }
}

TEST_CASE("chordal distance agrees between representations") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Direction a = random_direction(rng);
    const Direction b = random_direction(rng);
    CHECK(chordal_distance(sphere_to_stereo(a), sphere_to_stereo(b)) ==
          doctest::Approx(chordal_distance(a, b)).epsilon(1e-12));
  }
  CHECK(chordal_distance(StereoPoint(Complex(0, 0)), StereoPoint::infinity()) == doctest::Approx(2.0));
}

TEST_CASE("rotation about z by a quarter turn maps x to y") {
  const Rotation r = Rotation::axis_angle(Vec3::UnitZ(), kPi / 2);
  const Vec3 y = r.apply(Vec3(Vec3::UnitX()));
  CHECK((y - Vec3::UnitY()).norm() < 1e-14);
}

TEST_CASE("rotation acts consistently on vectors and stereographic points") {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const Rotation r = random_rotation(rng);
    const Direction n = random_direction(rng);
    const Direction via_vector = r.apply(n);
    const Direction via_mobius = stereo_to_sphere(r.apply(sphere_to_stereo(n)));
    CHECK(chordal_distance(via_vector, via_mobius) < 1e-12);
    CHECK((r.so3() * r.so3().transpose() - Eigen::Matrix3d::Identity()).norm() < 1e-13);
    CHECK(r.so3().determinant() == doctest::Approx(1.0));
  }
}

TEST_CASE("to_direction sends the north pole to n") {
  Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const Direction n = random_direction(rng);
    CHECK(chordal_distance(Rotation::to_direction(n).apply(Direction::north()), n) < 1e-13);
  }
}

TEST_CASE("spin matrices satisfy the angular momentum algebra") {
  for (int two_spin = 1; two_spin <= 6; ++two_spin) {
    const SpinMatrices s = spin_matrices(two_spin);
    const CMatrix comm = s.x * s.y - s.y * s.x;
    CHECK((comm - kI * s.z).norm() < 1e-12);
    const double j = 0.5 * two_spin;
    const CMatrix casimir = s.x * s.x + s.y * s.y + s.z * s.z;
    CHECK((casimir - j * (j + 1) * CMatrix::Identity(two_spin + 1, two_spin + 1)).norm() < 1e-12);
  }
}

TEST_CASE("symmetric-power D(R) equals the exponential of the generator") {
  Rng rng(15);
  for (int two_spin = 1; two_spin <= 6; ++two_spin) {
    const SpinMatrices s = spin_matrices(two_spin);
    for (int trial = 0; trial < 5; ++trial) {
      const Direction axis_dir = random_direction(rng);
      const Vec3 axis = axis_dir.unit();
      const double angle = uniform(rng, -3.0, 3.0);
      const CMatrix gen = axis.x() * s.x + axis.y() * s.y + axis.z() * s.z;
      Eigen::SelfAdjointEigenSolver<CMatrix> eig(gen);
      CVector phases(two_spin + 1);
      for (int k = 0; k <= two_spin; ++k) phases(k) = std::polar(1.0, -angle * eig.eigenvalues()(k));
      const CMatrix expected = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
      const CMatrix d = rotation_matrix(Rotation::axis_angle(axis, angle), two_spin);
      CHECK((d - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("spin parsing") {
  CHECK(parse_two_spin("3/2") == 3);
  CHECK(parse_two_spin("2") == 4);
  CHECK(parse_two_spin("1.5") == 3);
  CHECK_THROWS_AS(parse_two_spin("4/2"), Error);
  CHECK_THROWS_AS(parse_two_spin("0.3"), Error);
  CHECK_THROWS_AS(parse_two_spin("abc"), Error);
}
