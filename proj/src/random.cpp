#include "majorana/random.hpp"

#include <cmath>

namespace majorana {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex random_complex(Rng& rng) {
  std::normal_distribution<double> g;
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

SpinState random_state(int two_spin, Rng& rng) {
  CVector c(two_spin + 1);
  for (int i = 0; i <= two_spin; ++i) c(i) = random_complex(rng);
  return SpinState(two_spin, c).normalized();
}

Direction random_direction(Rng& rng) {
  const double z = uniform(rng, -1.0, 1.0);
  const double phi = uniform(rng, 0.0, 2.0 * kPi);
  return {std::acos(z), phi};
}

Rotation random_rotation(Rng& rng) {
  std::normal_distribution<double> g;
  double q[4];
  for (double& x : q) x = g(rng);
  const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  for (double& x : q) x /= n;
  Eigen::Matrix2cd u;
  u << Complex(q[0], q[3]), Complex(q[2], q[1]), Complex(-q[2], q[1]), Complex(q[0], -q[3]);
  return Rotation(u);
}

}  // namespace majorana
